#pragma once

#include "uctkit/zcategory.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace uctkit {

// ---------------------------------------------------------------------------
// Free finite-rank rings over Z
// ---------------------------------------------------------------------------

/// Associative unital ring, free of finite rank over Z, given by a basis and
/// a multiplication tensor. mult[i][j] expands basis_i * basis_j.
struct FGRing {
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Int>>> mult;
    std::vector<Int> unit;

    std::size_t rank() const { return basis.size(); }

    std::vector<Int> mul(const std::vector<Int>& x, const std::vector<Int>& y) const {
        std::vector<Int> out(rank(), Int(0));
        for (std::size_t i = 0; i < rank(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < rank(); ++j) {
                if (y[j] == 0) continue;
                for (std::size_t k = 0; k < rank(); ++k)
                    out[k] += x[i] * y[j] * mult[i][j][k];
            }
        }
        return out;
    }

    std::vector<Int> basis_elt(std::size_t i) const {
        std::vector<Int> v(rank(), Int(0));
        v[i] = 1;
        return v;
    }

    /// Matrix of y -> x * y on the basis.
    IntMatrix left_mult_matrix(const std::vector<Int>& x) const {
        IntMatrix m(rank(), rank());
        for (std::size_t j = 0; j < rank(); ++j) {
            auto col = mul(x, basis_elt(j));
            for (std::size_t i = 0; i < rank(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    /// Matrix of y -> y * x on the basis.
    IntMatrix right_mult_matrix(const std::vector<Int>& x) const {
        IntMatrix m(rank(), rank());
        for (std::size_t j = 0; j < rank(); ++j) {
            auto col = mul(basis_elt(j), x);
            for (std::size_t i = 0; i < rank(); ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    bool validate(std::string* why = nullptr) const {
        for (std::size_t i = 0; i < rank(); ++i) {
            if (mul(unit, basis_elt(i)) != basis_elt(i) ||
                mul(basis_elt(i), unit) != basis_elt(i)) {
                if (why) *why = "unit fails at basis " + basis[i];
                return false;
            }
        }
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j)
                for (std::size_t k = 0; k < rank(); ++k) {
                    auto lhs = mul(mul(basis_elt(i), basis_elt(j)), basis_elt(k));
                    auto rhs = mul(basis_elt(i), mul(basis_elt(j), basis_elt(k)));
                    if (lhs != rhs) {
                        if (why)
                            *why = "associativity fails at (" + basis[i] + "," + basis[j] +
                                   "," + basis[k] + ")";
                        return false;
                    }
                }
        return true;
    }

    /// Group algebra Z[t]/(1 - t^p) with basis 1, t, ..., t^{p-1}.
    static FGRing cyclic_group_algebra(std::size_t p) {
        FGRing r;
        for (std::size_t i = 0; i < p; ++i)
            r.basis.push_back(i == 0 ? "1" : "t^" + std::to_string(i));
        r.mult.assign(p, std::vector<std::vector<Int>>(p, std::vector<Int>(p, Int(0))));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) r.mult[i][j][(i + j) % p] = 1;
        r.unit.assign(p, Int(0));
        r.unit[0] = 1;
        return r;
    }

    /// Endomorphism ring of an object; requires a torsion-free End basis.
    static FGRing from_category_end(const ZCategory& cat, std::size_t c) {
        FGRing r;
        std::size_t n = cat.hom[c][c].size();
        for (const auto& g : cat.hom[c][c]) {
            if (g.order != 0)
                throw std::invalid_argument("FGRing: End has torsion at " + cat.objects[c]);
            r.basis.push_back(g.name);
        }
        r.mult.assign(n, std::vector<std::vector<Int>>(n, std::vector<Int>(n, Int(0))));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r.mult[i][j] = cat.compose(cat.basis_elt(c, c, i), cat.basis_elt(c, c, j)).coeffs;
        r.unit.assign(n, Int(0));
        r.unit[cat.id_idx[c]] = 1;
        return r;
    }
};

/// Frobenius certificate: the pairing (x,y) -> lambda(x*y) must have a
/// unimodular Gram matrix on the basis.
struct FrobeniusResult {
    bool ok = false;
    IntMatrix gram;
};

inline FrobeniusResult check_frobenius_over_Z(const FGRing& u, const std::vector<Int>& lambda) {
    std::size_t n = u.rank();
    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto prod = u.mul(u.basis_elt(i), u.basis_elt(j));
            Int v = 0;
            for (std::size_t k = 0; k < n; ++k) v += lambda[k] * prod[k];
            gram.at(i, j) = v;
        }
    return FrobeniusResult{is_unimodular(gram), gram};
}

// ---------------------------------------------------------------------------
// Exact multivariate polynomials over Z (at most two variables)
// ---------------------------------------------------------------------------

struct Poly {
    // exponent pair -> coefficient; second exponent 0 for univariate use
    std::map<std::array<int, 2>, Int> terms;

    static Poly constant(const Int& c) {
        Poly p;
        if (c != 0) p.terms[{0, 0}] = c;
        return p;
    }
    static Poly var(int which, int power = 1) {
        Poly p;
        std::array<int, 2> e{0, 0};
        e[which] = power;
        p.terms[e] = 1;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms) {
            r.terms[e] += c;
            if (r.terms[e] == 0) r.terms.erase(e);
        }
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (o * Int(-1)); }
    Poly operator*(const Int& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms) r.terms[e] = k * c;
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                std::array<int, 2> e{e1[0] + e2[0], e1[1] + e2[1]};
                r.terms[e] += c1 * c2;
                if (r.terms[e] == 0) r.terms.erase(e);
            }
        return r;
    }
    bool operator==(const Poly& o) const { return terms == o.terms; }

    /// 1 + x + ... + x^{p-1} in the given variable.
    static Poly norm_sum(int which, int p) {
        Poly r;
        for (int i = 0; i < p; ++i) r = r + var(which, i);
        return r;
    }

    /// Evaluate in a commutative FGRing at the given variable images.
    std::vector<Int> eval(const FGRing& ring, const std::vector<std::vector<Int>>& at) const {
        std::vector<Int> acc(ring.rank(), Int(0));
        for (const auto& [e, c] : terms) {
            std::vector<Int> term = ring.unit;
            for (int v = 0; v < 2; ++v)
                for (int k = 0; k < e[v]; ++k) term = ring.mul(term, at[v]);
            for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += c * term[i];
        }
        return acc;
    }
};

// ---------------------------------------------------------------------------
// Matrix factorizations
// ---------------------------------------------------------------------------

/// (A, B) with A*B = B*A = w*I over Z[vars]; vars has length 1 or 2.
struct MatrixFactorization {
    std::vector<std::string> vars;
    Poly w;
    std::vector<std::vector<Poly>> a, b;

    std::size_t n() const { return a.size(); }

    static MatrixFactorization one_by_one(std::vector<std::string> vars, Poly a0, Poly b0) {
        MatrixFactorization mf;
        mf.vars = std::move(vars);
        mf.w = a0 * b0;
        mf.a = {{a0}};
        mf.b = {{b0}};
        return mf;
    }
};

inline bool verify_matrix_factorization(const MatrixFactorization& mf) {
    std::size_t n = mf.n();
    if (n == 0 || mf.b.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (mf.a[i].size() != n || mf.b[i].size() != n) return false;
    auto check_product = [&](const std::vector<std::vector<Poly>>& x,
                             const std::vector<std::vector<Poly>>& y) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly s;
                for (std::size_t k = 0; k < n; ++k) s = s + x[i][k] * y[k][j];
                if (i == j ? !(s == mf.w) : !s.is_zero()) return false;
            }
        return true;
    };
    return check_product(mf.a, mf.b) && check_product(mf.b, mf.a);
}

/// Factorization with entries already in an FGRing (tensor arithmetic).
struct RingMatrixFactorization {
    FGRing ring;
    std::vector<Int> w;
    std::vector<std::vector<std::vector<Int>>> a, b;
};

inline bool verify_matrix_factorization(const RingMatrixFactorization& mf) {
    std::size_t n = mf.a.size();
    if (n == 0 || mf.b.size() != n) return false;
    auto check_product = [&](const auto& x, const auto& y) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Int> s(mf.ring.rank(), Int(0));
                for (std::size_t k = 0; k < n; ++k) {
                    auto p = mf.ring.mul(x[i][k], y[k][j]);
                    for (std::size_t t = 0; t < s.size(); ++t) s[t] += p[t];
                }
                std::vector<Int> want(mf.ring.rank(), Int(0));
                if (i == j) want = mf.w;
                if (s != want) return false;
            }
        return true;
    };
    return check_product(mf.a, mf.b) && check_product(mf.b, mf.a);
}

/// The 2-periodic complex of U-free modules induced by a matrix factorization
/// after reducing along R -> U, expanded to integer matrices on the Z-basis
/// of U, together with the distinguished cocycle module M = Img(A).
struct MfModule {
    std::size_t rank = 0;            // Z-rank of M
    IntMatrix basis;                 // columns: Z-basis of M inside U^n
    std::vector<IntMatrix> actions;  // right multiplication by each U basis elt
};

struct CompleteResolution {
    FGRing u;
    std::size_t n = 0;              // factorization size
    IntMatrix ma, mb;               // integer expansions of A., B.
    IntMatrix ma_dual, mb_dual;     // transpose factorization (A^t, B^t)
    std::vector<bool> exactness;    // 4 junctions: (B,A), (A,B), dual (B,A), (A,B)
    MfModule m;
    std::vector<std::vector<Int>> pairing;  // beta(f_i (x) m_j) = a_ij in U

    bool all_exact() const {
        for (bool b : exactness)
            if (!b) return false;
        return true;
    }
};

/// Evaluates the factorization in U along `reduce` (images of the variables),
/// checks w -> 0, builds the 2-periodic integer complex and its dual, checks
/// exactness at all four junctions, and extracts M with its right U-action.
inline CompleteResolution build_mf_module(const MatrixFactorization& mf, const FGRing& u,
                                          const std::vector<std::vector<Int>>& reduce) {
    if (!verify_matrix_factorization(mf))
        throw std::invalid_argument("build_mf_module: not a matrix factorization");
    auto w_img = mf.w.eval(u, reduce);
    for (const Int& c : w_img)
        if (c != 0) throw std::invalid_argument("build_mf_module: reduce does not kill w");

    std::size_t n = mf.n(), r = u.rank();
    auto expand = [&](const std::vector<std::vector<Poly>>& src, bool transpose) {
        IntMatrix big(n * r, n * r);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto entry = (transpose ? src[j][i] : src[i][j]).eval(u, reduce);
                IntMatrix block = u.left_mult_matrix(entry);
                for (std::size_t p = 0; p < r; ++p)
                    for (std::size_t q = 0; q < r; ++q)
                        big.at(i * r + p, j * r + q) = block.at(p, q);
            }
        return big;
    };

    CompleteResolution res;
    res.u = u;
    res.n = n;
    res.ma = expand(mf.a, false);
    res.mb = expand(mf.b, false);
    res.ma_dual = expand(mf.a, true);
    res.mb_dual = expand(mf.b, true);

    auto exact_pair = [&](const IntMatrix& first, const IntMatrix& second) {
        // junction  . --first--> . --second--> . : image(first) == ker(second)
        return lattice_equal(lattice_canonical(first),
                             kernel_basis(second));
    };
    res.exactness = {exact_pair(res.mb, res.ma), exact_pair(res.ma, res.mb),
                     exact_pair(res.mb_dual, res.ma_dual),
                     exact_pair(res.ma_dual, res.mb_dual)};

    res.m.basis = lattice_canonical(res.ma);
    res.m.rank = res.m.basis.cols();
    for (std::size_t bi = 0; bi < r; ++bi) {
        IntMatrix rm = u.right_mult_matrix(u.basis_elt(bi));
        IntMatrix big(n * r, n * r);
        for (std::size_t blk = 0; blk < n; ++blk)
            for (std::size_t p = 0; p < r; ++p)
                for (std::size_t q = 0; q < r; ++q)
                    big.at(blk * r + p, blk * r + q) = rm.at(p, q);
        auto act = solve_matrix(res.m.basis, big * res.m.basis);
        if (!act)
            throw InternalInvariantViolation("build_mf_module: U-action does not preserve M");
        res.m.actions.push_back(*act);
    }

    // duality pairing on generators: beta(f_i (x) m_j) = image of A_ij;
    // well-definedness is exactly A B = B A = 0 in U, re-checked above via
    // the zero image of w.
    res.pairing.assign(n * n, std::vector<Int>());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            res.pairing[i * n + j] = mf.a[i][j].eval(u, reduce);
    return res;
}

// ---------------------------------------------------------------------------
// Serre-functor certificates
// ---------------------------------------------------------------------------

/// S as an object bijection with per-pair basis matrices, plus the trace
/// functionals lambda_c on Hom(c, Sc).
struct SerreData {
    std::vector<std::size_t> s_obj;
    std::vector<std::vector<IntMatrix>> s_basis;  // hom(c,d) -> hom(Sc, Sd)
    std::vector<std::vector<Int>> lambda;         // per object: row over hom(c, Sc)
};

struct CheckReport {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
};

namespace detail {

/// Shared by the Serre and boundary checks: (obj_map, basis_maps) must be an
/// automorphism of the category.
inline void check_automorphism(const ZCategory& cat, const std::vector<std::size_t>& obj,
                               const std::vector<std::vector<IntMatrix>>& basis,
                               CheckReport& rep, const std::string& who) {
    std::size_t n = cat.size();
    std::vector<bool> seen(n, false);
    for (std::size_t c = 0; c < n; ++c) {
        if (c >= obj.size() || obj[c] >= n || seen[obj[c]]) {
            rep.failures.push_back(who + ": object map not a bijection");
            return;
        }
        seen[obj[c]] = true;
    }
    auto apply = [&](const MorphismElt& m) {
        MorphismElt out{obj[m.src], obj[m.dst], basis[m.src][m.dst].mul_vec(m.coeffs)};
        cat.normalize(out);
        return out;
    };
    for (std::size_t c = 0; c < n; ++c) {
        const IntMatrix& mat = basis[c][c];
        if (mat.rows() != cat.hom[obj[c]][obj[c]].size() ||
            mat.cols() != cat.hom[c][c].size()) {
            rep.failures.push_back(who + ": basis matrix shape at " + cat.objects[c]);
            return;
        }
    }
    for (std::size_t c = 0; c < n; ++c)
        if (apply(cat.identity_elt(c)) != cat.identity_elt(obj[c]))
            rep.failures.push_back(who + ": does not preserve identity at " + cat.objects[c]);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            if (basis[c][d].rows() != cat.hom[obj[c]][obj[d]].size() ||
                basis[c][d].cols() != cat.hom[c][d].size()) {
                rep.failures.push_back(who + ": basis matrix shape on Hom(" + cat.objects[c] +
                                       ", " + cat.objects[d] + ")");
                continue;
            }
            if (basis[c][d].rows() != basis[c][d].cols() || !is_unimodular(basis[c][d]))
                rep.failures.push_back(who + ": basis map not invertible on Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
        }
    if (!rep.ok()) return;
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e)
                for (std::size_t fi = 0; fi < cat.hom[c][d].size(); ++fi)
                    for (std::size_t gi = 0; gi < cat.hom[d][e].size(); ++gi) {
                        MorphismElt f = cat.basis_elt(c, d, fi);
                        MorphismElt g = cat.basis_elt(d, e, gi);
                        if (apply(cat.compose(g, f)) != cat.compose(apply(g), apply(f))) {
                            rep.failures.push_back(who + ": not functorial at (" +
                                                   cat.hom[c][d][fi].name + ", " +
                                                   cat.hom[d][e][gi].name + ")");
                            return;
                        }
                    }
}

inline bool all_hom_free(const ZCategory& cat) {
    for (const auto& row : cat.hom)
        for (const auto& h : row)
            for (const auto& g : h)
                if (g.order != 0) return false;
    return true;
}

}  // namespace detail

/// Verifies the Serre-functor certificate: S an automorphism, the trace
/// condition lambda_c(g o f) = lambda_d(S(f) o g), and unimodular square
/// Gram matrices [lambda_c(g_j o f_i)] for every pair. Success certifies the
/// category as 1-Gorenstein (base ring Z).
inline CheckReport check_serre(const ZCategory& cat, const SerreData& s) {
    CheckReport rep;
    if (!detail::all_hom_free(cat)) {
        rep.failures.push_back("serre: torsion Hom groups are not Hom-finite over Z");
        return rep;
    }
    rep.notes.push_back("hom-finiteness and local boundedness hold structurally");
    detail::check_automorphism(cat, s.s_obj, s.s_basis, rep, "serre automorphism");
    if (!rep.ok()) return rep;

    std::size_t n = cat.size();
    auto lam = [&](std::size_t c, const MorphismElt& m) {
        Int v = 0;
        for (std::size_t i = 0; i < m.coeffs.size(); ++i) v += s.lambda[c][i] * m.coeffs[i];
        return v;
    };
    auto s_of = [&](const MorphismElt& m) {
        MorphismElt out{s.s_obj[m.src], s.s_obj[m.dst], s.s_basis[m.src][m.dst].mul_vec(m.coeffs)};
        cat.normalize(out);
        return out;
    };

    for (std::size_t c = 0; c < n; ++c)
        if (s.lambda[c].size() != cat.hom[c][s.s_obj[c]].size())
            rep.failures.push_back("serre: lambda size mismatch at " + cat.objects[c]);
    if (!rep.ok()) return rep;

    // trace condition
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t fi = 0; fi < cat.hom[c][d].size(); ++fi)
                for (std::size_t gi = 0; gi < cat.hom[d][s.s_obj[c]].size(); ++gi) {
                    MorphismElt f = cat.basis_elt(c, d, fi);
                    MorphismElt g = cat.basis_elt(d, s.s_obj[c], gi);
                    Int lhs = lam(c, cat.compose(g, f));
                    Int rhs = lam(d, cat.compose(s_of(f), g));
                    if (lhs != rhs)
                        rep.failures.push_back(
                            "serre trace fails at f=" + cat.hom[c][d][fi].name +
                            " g=" + cat.hom[d][s.s_obj[c]][gi].name + " (" + lhs.str() +
                            " vs " + rhs.str() + ")");
                }

    // perfect pairing: square unimodular Gram per pair
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            std::size_t nf = cat.hom[c][d].size();
            std::size_t ng = cat.hom[d][s.s_obj[c]].size();
            if (nf != ng) {
                rep.failures.push_back("serre rank mismatch: Hom(" + cat.objects[c] + ", " +
                                       cat.objects[d] + ") vs Hom(" + cat.objects[d] + ", S" +
                                       cat.objects[c] + ")");
                continue;
            }
            if (nf == 0) continue;
            IntMatrix gram(ng, nf);
            for (std::size_t gi = 0; gi < ng; ++gi)
                for (std::size_t fi = 0; fi < nf; ++fi)
                    gram.at(gi, fi) = lam(c, cat.compose(cat.basis_elt(d, s.s_obj[c], gi),
                                                         cat.basis_elt(c, d, fi)));
            if (!is_unimodular(gram))
                rep.failures.push_back("serre Gram not unimodular on Hom(" + cat.objects[c] +
                                       ", " + cat.objects[d] + "): " + gram.str());
        }
    if (rep.ok())
        rep.notes.push_back(
            "serre certificate verified: category is 1-Gorenstein over Z");
    return rep;
}

// ---------------------------------------------------------------------------
// Boundary certificates
// ---------------------------------------------------------------------------

/// S plus the functionals mu_d : Hom(d, Sd) -> End(d), as matrices on bases.
struct BoundaryData {
    std::vector<std::size_t> s_obj;
    std::vector<std::vector<IntMatrix>> s_basis;
    std::vector<IntMatrix> mu;  // per object d: rank End(d) x rank Hom(d, Sd)
};

/// Gorenstein-projectivity witness for one off-diagonal Hom bimodule: either
/// a "free" marker with a module basis, or a matrix factorization plus an
/// explicit right-module isomorphism onto Hom(c, d).
struct GprojCert {
    bool free_marker = false;
    std::vector<std::vector<Int>> free_basis;  // elements of Hom(c,d), if free
    MatrixFactorization mf;
    std::vector<std::vector<Int>> reduce;  // variable images in End(c)
    IntMatrix iso;                         // rank Hom(c,d) x rank M
};

struct BoundaryCertificates {
    std::vector<std::vector<Int>> frobenius;          // per object: lambda over End basis
    std::map<std::pair<std::size_t, std::size_t>, GprojCert> gproj;
};

/// Verifies the five boundary-criterion conditions on finite data:
/// (1) Frobenius-over-Z certificates for every endomorphism ring,
/// (2) local boundedness (structural for finite categories),
/// (3) S restricting to bijections incoming(c) -> outgoing(c),
/// (4) psi_{c,d}: f -> mu_d(S(f) o -) an isomorphism onto the right-module
///     Hom_{End d}(Hom(d, Sc), End d) for all pairs,
/// (5) the supplied Gorenstein-projectivity witnesses for every nonzero
///     off-diagonal Hom bimodule.
inline CheckReport check_boundary(const ZCategory& cat, const BoundaryData& b,
                                  const BoundaryCertificates& certs) {
    CheckReport rep;
    if (!detail::all_hom_free(cat)) {
        rep.failures.push_back("boundary: torsion Hom groups unsupported");
        return rep;
    }
    std::size_t n = cat.size();
    detail::check_automorphism(cat, b.s_obj, b.s_basis, rep, "boundary automorphism");
    if (!rep.ok()) return rep;

    // (1) each endomorphism ring is Frobenius over Z
    std::vector<FGRing> ends;
    for (std::size_t c = 0; c < n; ++c) ends.push_back(FGRing::from_category_end(cat, c));
    for (std::size_t c = 0; c < n; ++c) {
        if (certs.frobenius.size() <= c || certs.frobenius[c].size() != ends[c].rank()) {
            rep.failures.push_back("boundary(1): missing frobenius functional at " +
                                   cat.objects[c]);
            continue;
        }
        auto fr = check_frobenius_over_Z(ends[c], certs.frobenius[c]);
        if (!fr.ok)
            rep.failures.push_back("boundary(1): Gram not unimodular at " + cat.objects[c] +
                                   ": " + fr.gram.str());
    }

    // (2) finite category: locally bounded by construction
    rep.notes.push_back("boundary(2): local boundedness holds structurally");

    // (3) S(incoming(c)) == outgoing(c) as object sets
    for (std::size_t c = 0; c < n; ++c) {
        std::set<std::size_t> in_mapped, out;
        for (std::size_t d = 0; d < n; ++d) {
            if (!cat.hom[d][c].empty()) in_mapped.insert(b.s_obj[d]);
            if (!cat.hom[c][d].empty()) out.insert(d);
        }
        if (in_mapped != out)
            rep.failures.push_back("boundary(3): S(incoming) != outgoing at " + cat.objects[c]);
    }

    // (4) psi_{c,d} isomorphisms
    for (std::size_t d = 0; d < n; ++d) {
        std::size_t sd = b.s_obj[d];
        std::size_t nmu_cols = cat.hom[d][sd].size();
        if (b.mu[d].rows() != cat.hom[d][d].size() || b.mu[d].cols() != nmu_cols) {
            rep.failures.push_back("boundary(4): mu shape at " + cat.objects[d]);
            continue;
        }
        // mu_d must be an End(d)-bimodule map, the left action twisted by S:
        // mu(S(e) o x) = e o mu(x), mu(x o e) = mu(x) o e.
        for (std::size_t ei = 0; ei < cat.hom[d][d].size(); ++ei)
            for (std::size_t xi = 0; xi < nmu_cols; ++xi) {
                MorphismElt e = cat.basis_elt(d, d, ei);
                MorphismElt x = cat.basis_elt(d, sd, xi);
                MorphismElt se{sd, sd, b.s_basis[d][d].mul_vec(e.coeffs)};
                cat.normalize(se);
                auto mu_of = [&](const MorphismElt& y) {
                    MorphismElt out{d, d, b.mu[d].mul_vec(y.coeffs)};
                    cat.normalize(out);
                    return out;
                };
                if (mu_of(cat.compose(se, x)) != cat.compose(e, mu_of(x)) ||
                    mu_of(cat.compose(x, e)) != cat.compose(mu_of(x), e)) {
                    rep.failures.push_back("boundary(4): mu not a bimodule map at " +
                                           cat.objects[d]);
                    goto mu_done;
                }
            }
    mu_done:;
    }
    if (!rep.ok()) return rep;

    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            std::size_t sc = b.s_obj[c];
            std::size_t nsrc = cat.hom[d][sc].size();   // Hom(d, Sc)
            std::size_t nend = cat.hom[d][d].size();    // End(d)
            std::size_t nhom = cat.hom[c][d].size();    // Hom(c, d)
            // Right-End(d)-module maps H: Hom(d,Sc) -> End(d):
            // unknowns H (nend x nsrc), conditions H(x o e) = H(x) o e.
            std::size_t dim = nend * nsrc;
            std::vector<std::vector<Int>> rows;
            for (std::size_t xi = 0; xi < nsrc; ++xi)
                for (std::size_t ei = 0; ei < nend; ++ei) {
                    MorphismElt xe =
                        cat.compose(cat.basis_elt(d, sc, xi), cat.basis_elt(d, d, ei));
                    IntMatrix re = ends[d].right_mult_matrix(
                        cat.basis_elt(d, d, ei).coeffs);
                    // row block: H(xe) - H(x) o e = 0, one row per End coord
                    for (std::size_t k = 0; k < nend; ++k) {
                        std::vector<Int> row(dim, Int(0));
                        for (std::size_t xj = 0; xj < nsrc; ++xj)
                            row[xj * nend + k] += xe.coeffs[xj];
                        for (std::size_t t = 0; t < nend; ++t)
                            row[xi * nend + t] -= re.at(k, t);
                        rows.push_back(std::move(row));
                    }
                }
            IntMatrix cond(rows.size(), dim);
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < dim; ++j) cond.at(i, j) = rows[i][j];
            IntMatrix sol = kernel_basis(cond);  // lattice of right-module maps

            // psi(f): x -> mu_d(S(f) o x), assembled as a vec over (x, End coords)
            IntMatrix psi(dim, nhom);
            for (std::size_t fi = 0; fi < nhom; ++fi) {
                MorphismElt f = cat.basis_elt(c, d, fi);
                MorphismElt sf{sc, b.s_obj[d], b.s_basis[c][d].mul_vec(f.coeffs)};
                cat.normalize(sf);
                for (std::size_t xi = 0; xi < nsrc; ++xi) {
                    MorphismElt sfx = cat.compose(sf, cat.basis_elt(d, sc, xi));
                    std::vector<Int> val = b.mu[d].mul_vec(sfx.coeffs);
                    for (std::size_t k = 0; k < nend; ++k) psi.at(xi * nend + k, fi) = val[k];
                }
            }
            // psi must land in the solution lattice and be an isomorphism onto it
            auto coords = solve_matrix(sol, psi);
            if (!coords) {
                rep.failures.push_back("boundary(4): psi image not End-linear on Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
                continue;
            }
            if (coords->rows() != coords->cols() || !is_unimodular(*coords))
                rep.failures.push_back("boundary(4): psi not an isomorphism on Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
        }

    // (5) Gorenstein-projectivity of the off-diagonal Hom bimodules
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
            if (c == d || cat.hom[c][d].empty()) continue;
            auto it = certs.gproj.find({c, d});
            if (it == certs.gproj.end()) {
                rep.failures.push_back("boundary(5): missing certificate for Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
                continue;
            }
            const GprojCert& cert = it->second;
            std::size_t nhom = cat.hom[c][d].size();
            std::size_t re = ends[c].rank();
            // right action of End(c) on Hom(c,d): f -> f o u
            auto hom_action = [&](std::size_t ui) {
                IntMatrix m(nhom, nhom);
                for (std::size_t fi = 0; fi < nhom; ++fi) {
                    MorphismElt fu =
                        cat.compose(cat.basis_elt(c, d, fi), cat.basis_elt(c, c, ui));
                    for (std::size_t k = 0; k < nhom; ++k) m.at(k, fi) = fu.coeffs[k];
                }
                return m;
            };
            if (cert.free_marker) {
                // basis elements m_1..m_k: End(c)^k -> Hom(c,d) must be bijective
                std::size_t k = cert.free_basis.size();
                if (k * re != nhom) {
                    rep.failures.push_back("boundary(5): free rank mismatch on Hom(" +
                                           cat.objects[c] + ", " + cat.objects[d] + ")");
                    continue;
                }
                IntMatrix big(nhom, k * re);
                for (std::size_t bi = 0; bi < k; ++bi)
                    for (std::size_t ui = 0; ui < re; ++ui) {
                        MorphismElt m{c, d, cert.free_basis[bi]};
                        MorphismElt mu_ = cat.compose(m, cat.basis_elt(c, c, ui));
                        for (std::size_t t = 0; t < nhom; ++t)
                            big.at(t, bi * re + ui) = mu_.coeffs[t];
                    }
                if (!is_unimodular(big))
                    rep.failures.push_back("boundary(5): free basis not a basis on Hom(" +
                                           cat.objects[c] + ", " + cat.objects[d] + ")");
                continue;
            }
            CompleteResolution cr;
            try {
                cr = build_mf_module(cert.mf, ends[c], cert.reduce);
            } catch (const std::exception& ex) {
                rep.failures.push_back("boundary(5): certificate for Hom(" + cat.objects[c] +
                                       ", " + cat.objects[d] + ") failed: " + ex.what());
                continue;
            }
            if (!cr.all_exact()) {
                rep.failures.push_back("boundary(5): complete resolution inexact for Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
                continue;
            }
            if (cr.m.rank != nhom || cert.iso.rows() != nhom || cert.iso.cols() != nhom ||
                !is_unimodular(cert.iso)) {
                rep.failures.push_back("boundary(5): iso matrix not bijective for Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
                continue;
            }
            bool equivariant = true;
            for (std::size_t ui = 0; ui < re; ++ui)
                if (cert.iso * cr.m.actions[ui] != hom_action(ui) * cert.iso) {
                    equivariant = false;
                    break;
                }
            if (!equivariant)
                rep.failures.push_back("boundary(5): iso not End-equivariant for Hom(" +
                                       cat.objects[c] + ", " + cat.objects[d] + ")");
        }

    if (rep.ok())
        rep.notes.push_back(
            "boundary certificate verified: category inherits Gorenstein dimension 1");
    return rep;
}

// ---------------------------------------------------------------------------
// Monomial quotient reduction oracle for Z[s,t]/(relators)
// ---------------------------------------------------------------------------

/// Computes a free Z-basis and multiplication table of Z[vars]/(relators) by
/// linear algebra on monomials up to a degree cap. Throws if the quotient is
/// not free of finite rank detectable at the cap. Also reports the basis
/// expressions of the degree-one monomials (variable images).
struct ReducedRing {
    FGRing ring;
    std::vector<std::vector<Int>> var_images;
};

inline ReducedRing reduce_ring(int nvars, const std::vector<Poly>& relators, int degree_cap) {
    // monomials of total degree <= cap, ordered by (degree, lex)
    std::vector<std::array<int, 2>> mons;
    for (int deg = 0; deg <= degree_cap; ++deg)
        for (int i = deg; i >= 0; --i) {
            std::array<int, 2> e{i, deg - i};
            if (nvars == 1 && e[1] != 0) continue;
            mons.push_back(e);
        }
    std::map<std::array<int, 2>, std::size_t> mon_idx;
    for (std::size_t i = 0; i < mons.size(); ++i) mon_idx[mons[i]] = i;

    auto vec_of = [&](const Poly& p) {
        std::vector<Int> v(mons.size(), Int(0));
        for (const auto& [e, c] : p.terms) {
            auto it = mon_idx.find(e);
            if (it == mon_idx.end())
                throw std::invalid_argument("reduce_ring: degree cap too small");
            v[it->second] = c;
        }
        return v;
    };

    // relation lattice: relator * monomial, for all products fitting the cap
    std::vector<std::vector<Int>> rel_cols;
    for (const Poly& r : relators) {
        int rdeg = 0;
        for (const auto& [e, c] : r.terms) rdeg = std::max(rdeg, e[0] + e[1]);
        for (const auto& m : mons) {
            if (m[0] + m[1] + rdeg > degree_cap) continue;
            Poly mono;
            mono.terms[m] = 1;
            rel_cols.push_back(vec_of(r * mono));
        }
    }
    IntMatrix rels(mons.size(), rel_cols.size());
    for (std::size_t j = 0; j < rel_cols.size(); ++j) rels.set_col(j, rel_cols[j]);

    FpAbGroup q(mons.size(), rels);
    if (!q.is_free())
        throw std::invalid_argument("reduce_ring: quotient has torsion at this cap");
    std::size_t rank = q.free_rank();

    // greedy canonical basis: smallest monomials whose classes stay a direct
    // summand
    std::vector<std::size_t> chosen;
    IntMatrix sel(mons.size(), 0);
    for (std::size_t mi = 0; mi < mons.size() && chosen.size() < rank; ++mi) {
        std::vector<Int> e(mons.size(), Int(0));
        e[mi] = 1;
        IntMatrix cand = sel.hstack(IntMatrix::col_vector(e));
        // direct-summand test inside the quotient: Z^mons / (rels + cand)
        // must be free of rank (rank - chosen - 1)
        FpAbGroup test(mons.size(), rels.hstack(cand));
        if (test.is_free() && test.free_rank() == rank - chosen.size() - 1) {
            chosen.push_back(mi);
            sel = cand;
        }
    }
    if (chosen.size() != rank)
        throw std::invalid_argument("reduce_ring: could not select a monomial basis");

    // coordinates: ambient class -> basis expression, via the subquotient
    // Z^mons = rels + sel (must hold: basis spans the quotient)
    IntMatrix full = rels.hstack(sel);
    auto express = [&](const std::vector<Int>& v) {
        auto sol = solve(full, v);
        if (!sol) throw std::invalid_argument("reduce_ring: basis does not span");
        std::vector<Int> out(rank);
        for (std::size_t i = 0; i < rank; ++i) out[i] = (*sol)[rels.cols() + i];
        return out;
    };

    ReducedRing out;
    out.ring.basis.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        auto e = mons[chosen[i]];
        std::string nm = e[0] == 0 && e[1] == 0 ? "1" : "";
        if (e[0] > 0) nm += "s" + (e[0] > 1 ? "^" + std::to_string(e[0]) : "");
        if (e[1] > 0) nm += std::string(e[0] > 0 ? "*" : "") + "t" +
                            (e[1] > 1 ? "^" + std::to_string(e[1]) : "");
        out.ring.basis[i] = nm;
    }
    out.ring.mult.assign(rank, std::vector<std::vector<Int>>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            Poly pi, pj;
            pi.terms[mons[chosen[i]]] = 1;
            pj.terms[mons[chosen[j]]] = 1;
            out.ring.mult[i][j] = express(vec_of(pi * pj));
        }
    out.ring.unit = express(vec_of(Poly::constant(1)));
    for (int v = 0; v < nvars; ++v) out.var_images.push_back(express(vec_of(Poly::var(v))));
    for (int v = nvars; v < 2; ++v) out.var_images.push_back(std::vector<Int>(rank, Int(0)));
    return out;
}

}  // namespace uctkit
