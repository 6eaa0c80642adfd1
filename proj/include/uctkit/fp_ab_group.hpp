#pragma once

#include "uctkit/normal_forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace uctkit {

/// Canonical isomorphism invariant: free rank plus invariant factors > 1
/// in increasing divisibility order.
struct GroupCanon {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const GroupCanon& o) const = default;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    Int order() const {
        Int n = 1;
        for (const Int& t : torsion) n *= t;
        return n;  // meaningful only when is_finite()
    }
    std::string str() const {
        if (is_trivial()) return "0";
        std::string s;
        for (std::size_t i = 0; i < free_rank; ++i) s += (s.empty() ? "Z" : " + Z");
        for (const Int& t : torsion) s += (s.empty() ? "Z/" : " + Z/") + t.str();
        return s;
    }
};

/// Finitely presented abelian group Z^gens / (column lattice of rels).
/// Elements are integer vectors on the generators; all element-level
/// operations reduce through the cached Smith decomposition of rels.
class FpAbGroup {
public:
    FpAbGroup() : FpAbGroup(0, IntMatrix(0, 0)) {}

    FpAbGroup(std::size_t gens, IntMatrix rels) : gens_(gens), rels_(std::move(rels)) {
        if (rels_.rows() != gens_)
            throw std::invalid_argument("FpAbGroup: relation rows != generators");
        snf_ = smith_normal_form(rels_);
        moduli_.assign(gens_, Int(0));
        std::size_t n = std::min(rels_.rows(), rels_.cols());
        for (std::size_t i = 0; i < n; ++i) moduli_[i] = snf_.d.at(i, i);
        for (std::size_t i = 0; i < gens_; ++i) {
            if (moduli_[i] == 0)
                ++canon_.free_rank;
            else if (moduli_[i] > 1)
                canon_.torsion.push_back(moduli_[i]);
        }
        auto ui = solve_matrix(snf_.u, IntMatrix::identity(gens_));
        if (!ui) throw std::logic_error("FpAbGroup: SNF transform not invertible");
        uinv_ = *ui;
    }

    static FpAbGroup free_group(std::size_t n) { return FpAbGroup(n, IntMatrix(n, 0)); }
    static FpAbGroup cyclic(const Int& m) {
        IntMatrix r(1, 1);
        r.at(0, 0) = m;
        return FpAbGroup(1, r);
    }
    static FpAbGroup trivial() { return FpAbGroup(0, IntMatrix(0, 0)); }
    /// Direct sum Z/d1 + ... + Z/dk (d = 0 gives a free summand).
    static FpAbGroup direct_sum(const std::vector<Int>& ds) {
        return FpAbGroup(ds.size(), IntMatrix::diagonal(ds));
    }

    std::size_t gens() const { return gens_; }
    const IntMatrix& rels() const { return rels_; }
    const GroupCanon& canon() const { return canon_; }

    bool is_trivial() const { return canon_.is_trivial(); }
    bool is_free() const { return canon_.torsion.empty(); }
    std::size_t free_rank() const { return canon_.free_rank; }
    std::optional<Int> order() const {
        if (!canon_.is_finite()) return std::nullopt;
        return canon_.order();
    }

    /// Canonical representative of the class of x (in SNF coordinates,
    /// torsion coordinates reduced into [0, d_i)).
    std::vector<Int> normal_form(const std::vector<Int>& x) const {
        if (x.size() != gens_) throw std::invalid_argument("FpAbGroup: element size mismatch");
        std::vector<Int> w = snf_.u.mul_vec(x);
        for (std::size_t i = 0; i < gens_; ++i)
            if (moduli_[i] != 0) {
                w[i] %= moduli_[i];
                if (w[i] < 0) w[i] += moduli_[i];
            }
        return w;
    }

    bool is_zero_element(const std::vector<Int>& x) const {
        for (const Int& v : normal_form(x))
            if (v != 0) return false;
        return true;
    }

    bool elements_equal(const std::vector<Int>& x, const std::vector<Int>& y) const {
        std::vector<Int> d(gens_);
        for (std::size_t i = 0; i < gens_; ++i) d[i] = x[i] - y[i];
        return is_zero_element(d);
    }

    /// Order of the class of x; 0 encodes infinite order.
    Int element_order(const std::vector<Int>& x) const {
        std::vector<Int> w = snf_.u.mul_vec(x);
        Int ord = 1;
        for (std::size_t i = 0; i < gens_; ++i) {
            if (moduli_[i] == 0) {
                if (w[i] != 0) return 0;
            } else if (moduli_[i] > 1) {
                Int m = moduli_[i] / gcd(moduli_[i], w[i] % moduli_[i]);
                ord = lcm(ord, m);
            }
        }
        return ord;
    }

    /// All elements, in generator coordinates. Only for finite groups.
    std::vector<std::vector<Int>> enumerate_elements() const {
        if (!canon_.is_finite()) throw std::logic_error("enumerate_elements: infinite group");
        std::vector<std::size_t> tors_idx;
        for (std::size_t i = 0; i < gens_; ++i)
            if (moduli_[i] > 1) tors_idx.push_back(i);
        std::vector<std::vector<Int>> out;
        std::vector<Int> w(gens_, Int(0));
        std::size_t k = tors_idx.size();
        std::vector<Int> counter(k, Int(0));
        for (;;) {
            for (std::size_t t = 0; t < k; ++t) w[tors_idx[t]] = counter[t];
            out.push_back(uinv_.mul_vec(w));
            std::size_t t = 0;
            while (t < k) {
                counter[t] += 1;
                if (counter[t] < moduli_[tors_idx[t]]) break;
                counter[t] = 0;
                ++t;
            }
            if (t == k) break;
            if (k == 0) break;
        }
        return out;
    }

    /// Generator-coordinate elements projecting onto the canonical cyclic
    /// summands (torsion first, then free), one per summand.
    std::vector<std::vector<Int>> canonical_generators() const {
        std::vector<std::vector<Int>> out;
        for (std::size_t i = 0; i < gens_; ++i) {
            if (moduli_[i] == 1) continue;
            std::vector<Int> w(gens_, Int(0));
            w[i] = 1;
            out.push_back(uinv_.mul_vec(w));
        }
        return out;
    }

    bool operator==(const FpAbGroup& o) const {
        return gens_ == o.gens_ && rels_ == o.rels_;
    }

private:
    std::size_t gens_;
    IntMatrix rels_;
    SmithForm snf_;
    IntMatrix uinv_;
    std::vector<Int> moduli_;  // per SNF coordinate; 0 = free
    GroupCanon canon_;
};

}  // namespace uctkit
