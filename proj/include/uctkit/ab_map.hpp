#pragma once

#include "uctkit/fp_ab_group.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace uctkit {

struct NonComposableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonzeroCompositeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalInvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Homomorphism of finitely presented abelian groups, as a matrix on
/// generators. Well-definedness (rels mapped into rels) is checkable,
/// not enforced on construction.
struct AbMap {
    FpAbGroup src, tgt;
    IntMatrix mat;  // tgt.gens x src.gens

    AbMap() = default;
    AbMap(FpAbGroup s, FpAbGroup t, IntMatrix m)
        : src(std::move(s)), tgt(std::move(t)), mat(std::move(m)) {
        if (mat.rows() != tgt.gens() || mat.cols() != src.gens())
            throw std::invalid_argument("AbMap: matrix shape mismatch");
    }

    static AbMap zero(const FpAbGroup& s, const FpAbGroup& t) {
        return AbMap(s, t, IntMatrix(t.gens(), s.gens()));
    }
    static AbMap identity(const FpAbGroup& g) {
        return AbMap(g, g, IntMatrix::identity(g.gens()));
    }

    bool well_defined() const {
        for (std::size_t j = 0; j < src.rels().cols(); ++j)
            if (!in_lattice(tgt.rels(), mat.mul_vec(src.rels().col(j)))) return false;
        return true;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const { return mat.mul_vec(x); }

    bool is_zero_map() const {
        for (std::size_t j = 0; j < mat.cols(); ++j)
            if (!tgt.is_zero_element(mat.col(j))) return false;
        return true;
    }
};

inline AbMap compose(const AbMap& g, const AbMap& f) {
    if (g.src.gens() != f.tgt.gens() || g.src.rels() != f.tgt.rels())
        throw NonComposableError("compose: middle groups differ");
    return AbMap(f.src, g.tgt, g.mat * f.mat);
}

inline AbMap add(const AbMap& f, const AbMap& g) { return AbMap(f.src, f.tgt, f.mat + g.mat); }

inline bool maps_equal(const AbMap& f, const AbMap& g) {
    if (f.mat.rows() != g.mat.rows() || f.mat.cols() != g.mat.cols()) return false;
    IntMatrix d = f.mat - g.mat;
    for (std::size_t j = 0; j < d.cols(); ++j)
        if (!in_lattice(f.tgt.rels(), d.col(j))) return false;
    return true;
}

/// Subquotient L1/L0 of an ambient Z^n, with coordinates: `basis` columns are
/// a canonical basis of L1, and `group` presents L1/L0 on those columns.
struct Subquotient {
    FpAbGroup group;
    IntMatrix basis;  // n x group.gens()

    /// Coordinates of an ambient vector (which must lie in L1).
    std::vector<Int> coords(const std::vector<Int>& v) const {
        auto s = solve(basis, v);
        if (!s) throw std::invalid_argument("Subquotient::coords: vector not in sublattice");
        return *s;
    }
};

inline Subquotient subquotient(const IntMatrix& l1_gens, const IntMatrix& l0_gens) {
    IntMatrix b = lattice_canonical(l1_gens);
    IntMatrix l0 = lattice_canonical(l0_gens);
    auto x = solve_matrix(b, l0);
    if (!x) throw std::invalid_argument("subquotient: L0 not contained in L1");
    return Subquotient{FpAbGroup(b.cols(), *x), b};
}

/// Kernel of f as a group with its inclusion into f.src.
struct SubgroupWithInclusion {
    FpAbGroup group;
    AbMap inclusion;
};

inline SubgroupWithInclusion kernel(const AbMap& f) {
    IntMatrix lat = preimage_lattice(f.mat, f.tgt.rels());
    Subquotient sq = subquotient(lat, f.src.rels());
    return {sq.group, AbMap(sq.group, f.src, sq.basis)};
}

inline SubgroupWithInclusion image(const AbMap& f) {
    IntMatrix lat = lattice_sum(f.mat, f.tgt.rels());
    Subquotient sq = subquotient(lat, f.tgt.rels());
    return {sq.group, AbMap(sq.group, f.tgt, sq.basis)};
}

struct QuotientWithProjection {
    FpAbGroup group;
    AbMap projection;
};

inline QuotientWithProjection cokernel(const AbMap& f) {
    FpAbGroup q(f.tgt.gens(), f.tgt.rels().hstack(f.mat));
    return {q, AbMap(f.tgt, q, IntMatrix::identity(f.tgt.gens()))};
}

inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return k;
}

/// Hom(G, H) with generating homomorphisms. Computed by solving
/// X * rels_G = rels_H * Y over Z and quotienting by maps with image in rels_H.
struct HomGroupResult {
    FpAbGroup group;
    std::vector<AbMap> generators;
    Subquotient sq;  // ambient = col-major vec of the h x g matrix

    std::vector<Int> coords_of(const AbMap& f) const {
        std::vector<Int> v;
        v.reserve(f.mat.rows() * f.mat.cols());
        for (std::size_t j = 0; j < f.mat.cols(); ++j)
            for (std::size_t i = 0; i < f.mat.rows(); ++i) v.push_back(f.mat.at(i, j));
        return group.normal_form(sq.coords(v));
    }
};

inline HomGroupResult hom_group(const FpAbGroup& g, const FpAbGroup& h) {
    std::size_t ng = g.gens(), nh = h.gens();
    std::size_t dim = ng * nh;  // col-major vec of X (nh x ng)
    // Condition: for each relator r of G, sum_j r_j X.col(j) lies in rels_H.
    std::size_t kr = g.rels().cols();
    IntMatrix cond(kr * nh, dim);
    for (std::size_t rc = 0; rc < kr; ++rc)
        for (std::size_t j = 0; j < ng; ++j) {
            const Int& rj = g.rels().at(j, rc);
            if (rj == 0) continue;
            for (std::size_t i = 0; i < nh; ++i) cond.at(rc * nh + i, j * nh + i) = rj;
        }
    IntMatrix rhs_lattice = kronecker(IntMatrix::identity(kr), h.rels());
    IntMatrix l1 = preimage_lattice(cond, rhs_lattice);
    IntMatrix l0 = kronecker(IntMatrix::identity(ng), h.rels());
    Subquotient sq = subquotient(l1, l0);

    HomGroupResult res{sq.group, {}, sq};
    for (std::size_t c = 0; c < sq.basis.cols(); ++c) {
        IntMatrix m(nh, ng);
        for (std::size_t j = 0; j < ng; ++j)
            for (std::size_t i = 0; i < nh; ++i) m.at(i, j) = sq.basis.at(j * nh + i, c);
        res.generators.push_back(AbMap(g, h, m));
    }
    return res;
}

/// Ext^1(G, H) from the canonical presentation 0 -> Z^k -> Z^g -> G -> 0
/// given by an independent set of relators.
inline FpAbGroup ext1_group(const FpAbGroup& g, const FpAbGroup& h) {
    IntMatrix r = lattice_canonical(g.rels());  // independent columns, g x k
    std::size_t k = r.cols(), nh = h.gens();
    // Ext = H^k / image of H^g under Y -> Y * R  (col-major vecs).
    IntMatrix lift = kronecker(r.transpose(), IntMatrix::identity(nh));  // (k*nh) x (g*nh)
    IntMatrix rels = kronecker(IntMatrix::identity(k), h.rels()).hstack(lift);
    return FpAbGroup(k * nh, rels);
}

/// Per-junction image == kernel verdicts for a composable sequence.
/// Throws NonComposableError / NonzeroCompositeError as distinct failures.
inline std::vector<bool> exactness_check(const std::vector<AbMap>& maps) {
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        if (maps[i].tgt.gens() != maps[i + 1].src.gens() ||
            maps[i].tgt.rels() != maps[i + 1].src.rels())
            throw NonComposableError("exactness_check: maps " + std::to_string(i) + "," +
                                     std::to_string(i + 1) + " not composable");
        if (!compose(maps[i + 1], maps[i]).is_zero_map())
            throw NonzeroCompositeError("exactness_check: nonzero composite at junction " +
                                        std::to_string(i));
    }
    std::vector<bool> verdicts;
    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        IntMatrix img = lattice_sum(maps[i].mat, maps[i].tgt.rels());
        IntMatrix ker = preimage_lattice(maps[i + 1].mat, maps[i + 1].tgt.rels());
        verdicts.push_back(lattice_equal(img, ker));
    }
    return verdicts;
}

/// Cohomology at B of A --f--> B --g--> C (requires g o f = 0).
inline FpAbGroup cohomology_at(const AbMap& f, const AbMap& g) {
    if (!compose(g, f).is_zero_map())
        throw NonzeroCompositeError("cohomology_at: composite not zero");
    IntMatrix ker = preimage_lattice(g.mat, g.tgt.rels());
    IntMatrix img = lattice_sum(f.mat, f.tgt.rels());
    return subquotient(ker, img).group;
}

}  // namespace uctkit
