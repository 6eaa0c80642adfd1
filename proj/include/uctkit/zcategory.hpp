#pragma once

#include "uctkit/ab_map.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace uctkit {

/// Basis generator of a Hom group. order = 0 means a free Z summand,
/// order = m > 0 a cyclic Z/m summand (needed for the stable coefficient
/// category of periodic complexes, whose Hom groups carry torsion).
struct HomGen {
    std::string name;
    Int order = 0;
};

/// Element of a Hom group: integer coefficients over the basis of
/// hom(src, dst), canonically reduced modulo generator orders.
struct MorphismElt {
    std::size_t src = 0, dst = 0;
    std::vector<Int> coeffs;

    bool operator==(const MorphismElt& o) const = default;
};

struct ZCategorySuspension {
    std::vector<std::size_t> obj;  // object bijection
    // basis[c][d]: matrix from hom(c,d) coordinates to hom(obj[c],obj[d]).
    std::vector<std::vector<IntMatrix>> basis;
};

/// Finite Z-linear category: finitely many objects, Hom groups given by a
/// basis of (possibly torsion) cyclic generators, composition by a dense
/// structure-constant tensor, distinguished identity generators, and an
/// optional suspension automorphism.
class ZCategory {
public:
    std::vector<std::string> objects;
    // hom[c][d]: ordered basis of Hom(c, d)
    std::vector<std::vector<std::vector<HomGen>>> hom;
    // comp[c][d][e][g * |hom(c,d)| + f]: coefficients of (g in hom(d,e)) o
    // (f in hom(c,d)) over the basis of hom(c,e)
    std::vector<std::vector<std::vector<std::vector<std::vector<Int>>>>> comp;
    std::vector<std::size_t> id_idx;  // index of id_c in hom[c][c]
    std::optional<ZCategorySuspension> suspension;

    std::size_t size() const { return objects.size(); }

    std::size_t object_index(const std::string& label) const {
        for (std::size_t i = 0; i < objects.size(); ++i)
            if (objects[i] == label) return i;
        throw std::invalid_argument("ZCategory: unknown object " + label);
    }

    std::size_t hom_rank(std::size_t c, std::size_t d) const { return hom[c][d].size(); }

    /// Hom(c, d) as a finitely presented group on the basis generators.
    FpAbGroup hom_group_of(std::size_t c, std::size_t d) const {
        std::vector<Int> orders;
        for (const auto& g : hom[c][d]) orders.push_back(g.order);
        return FpAbGroup::direct_sum(orders);
    }

    MorphismElt identity_elt(std::size_t c) const {
        MorphismElt m{c, c, std::vector<Int>(hom[c][c].size(), Int(0))};
        m.coeffs[id_idx[c]] = 1;
        return m;
    }

    MorphismElt basis_elt(std::size_t c, std::size_t d, std::size_t i) const {
        MorphismElt m{c, d, std::vector<Int>(hom[c][d].size(), Int(0))};
        m.coeffs[i] = 1;
        return m;
    }

    MorphismElt zero_elt(std::size_t c, std::size_t d) const {
        return MorphismElt{c, d, std::vector<Int>(hom[c][d].size(), Int(0))};
    }

    void normalize(MorphismElt& m) const {
        const auto& basis = hom[m.src][m.dst];
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].order > 0) {
                m.coeffs[i] %= basis[i].order;
                if (m.coeffs[i] < 0) m.coeffs[i] += basis[i].order;
            }
    }

    bool is_zero(const MorphismElt& m) const {
        MorphismElt n = m;
        normalize(n);
        for (const Int& c : n.coeffs)
            if (c != 0) return false;
        return true;
    }

    /// Bilinear composition g o f through the structure constants.
    MorphismElt compose(const MorphismElt& g, const MorphismElt& f) const {
        if (f.dst != g.src)
            throw NonComposableError("ZCategory::compose: object mismatch (" +
                                     objects[f.dst] + " vs " + objects[g.src] + ")");
        std::size_t c = f.src, d = f.dst, e = g.dst;
        MorphismElt out = zero_elt(c, e);
        std::size_t nf = hom[c][d].size();
        for (std::size_t gi = 0; gi < g.coeffs.size(); ++gi) {
            if (g.coeffs[gi] == 0) continue;
            for (std::size_t fi = 0; fi < nf; ++fi) {
                if (f.coeffs[fi] == 0) continue;
                const auto& vec = comp[c][d][e][gi * nf + fi];
                for (std::size_t k = 0; k < vec.size(); ++k)
                    out.coeffs[k] += g.coeffs[gi] * f.coeffs[fi] * vec[k];
            }
        }
        normalize(out);
        return out;
    }

    MorphismElt suspend(const MorphismElt& m) const {
        if (!suspension) throw std::logic_error("ZCategory: no suspension");
        const auto& s = *suspension;
        MorphismElt out{s.obj[m.src], s.obj[m.dst],
                        s.basis[m.src][m.dst].mul_vec(m.coeffs)};
        normalize(out);
        return out;
    }

    void allocate(std::size_t n) {
        objects.resize(n);
        hom.assign(n, std::vector<std::vector<HomGen>>(n));
        comp.assign(n, std::vector<std::vector<std::vector<std::vector<Int>>>>(
                           n, std::vector<std::vector<std::vector<Int>>>(n)));
        id_idx.assign(n, 0);
    }

    /// Call once hom[][] is filled: sizes every comp cell with zero vectors.
    void allocate_comp() {
        std::size_t n = objects.size();
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t d = 0; d < n; ++d)
                for (std::size_t e = 0; e < n; ++e)
                    comp[c][d][e].assign(hom[c][d].size() * hom[d][e].size(),
                                         std::vector<Int>(hom[c][e].size(), Int(0)));
    }
};

struct ValidationReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// Exhaustive unit/associativity/order check over all basis tuples.
/// Failures are report entries naming the offending tuple.
inline ValidationReport validate_category(const ZCategory& cat) {
    ValidationReport rep;
    std::size_t n = cat.size();

    for (std::size_t c = 0; c < n; ++c) {
        if (cat.id_idx[c] >= cat.hom[c][c].size()) {
            rep.failures.push_back("missing identity basis element at " + cat.objects[c]);
            continue;
        }
    }
    if (!rep.ok()) return rep;

    // identities are two-sided units
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t i = 0; i < cat.hom[c][d].size(); ++i) {
                MorphismElt f = cat.basis_elt(c, d, i);
                if (cat.compose(f, cat.identity_elt(c)) != f)
                    rep.failures.push_back("right unit fails for " + cat.hom[c][d][i].name +
                                           ": " + cat.objects[c] + " -> " + cat.objects[d]);
                if (cat.compose(cat.identity_elt(d), f) != f)
                    rep.failures.push_back("left unit fails for " + cat.hom[c][d][i].name +
                                           ": " + cat.objects[c] + " -> " + cat.objects[d]);
            }

    // order compatibility: ord(f) * (g o f) and ord(g) * (g o f) vanish
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e)
                for (std::size_t fi = 0; fi < cat.hom[c][d].size(); ++fi)
                    for (std::size_t gi = 0; gi < cat.hom[d][e].size(); ++gi) {
                        MorphismElt gf = cat.compose(cat.basis_elt(d, e, gi),
                                                     cat.basis_elt(c, d, fi));
                        for (const Int& ord :
                             {cat.hom[c][d][fi].order, cat.hom[d][e][gi].order}) {
                            if (ord == 0) continue;
                            MorphismElt scaled = gf;
                            for (auto& x : scaled.coeffs) x *= ord;
                            if (!cat.is_zero(scaled))
                                rep.failures.push_back(
                                    "order incompatibility at (" + cat.hom[c][d][fi].name + ", " +
                                    cat.hom[d][e][gi].name + ")");
                        }
                    }

    // associativity on all basis triples
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            for (std::size_t e = 0; e < n; ++e)
                for (std::size_t o = 0; o < n; ++o)
                    for (std::size_t fi = 0; fi < cat.hom[c][d].size(); ++fi)
                        for (std::size_t gi = 0; gi < cat.hom[d][e].size(); ++gi)
                            for (std::size_t hi = 0; hi < cat.hom[e][o].size(); ++hi) {
                                MorphismElt f = cat.basis_elt(c, d, fi);
                                MorphismElt g = cat.basis_elt(d, e, gi);
                                MorphismElt h = cat.basis_elt(e, o, hi);
                                MorphismElt lhs = cat.compose(cat.compose(h, g), f);
                                MorphismElt rhs = cat.compose(h, cat.compose(g, f));
                                if (lhs != rhs)
                                    rep.failures.push_back(
                                        "associativity fails at (" + cat.hom[c][d][fi].name +
                                        ", " + cat.hom[d][e][gi].name + ", " +
                                        cat.hom[e][o][hi].name + ")");
                            }

    // suspension, when present, must be an automorphism
    if (cat.suspension) {
        const auto& s = *cat.suspension;
        std::vector<bool> seen(n, false);
        for (std::size_t c = 0; c < n; ++c) {
            if (s.obj[c] >= n || seen[s.obj[c]])
                rep.failures.push_back("suspension object map not a bijection at " +
                                       cat.objects[c]);
            else
                seen[s.obj[c]] = true;
        }
        if (rep.ok()) {
            for (std::size_t c = 0; c < n; ++c) {
                MorphismElt si = cat.suspend(cat.identity_elt(c));
                if (si != cat.identity_elt(s.obj[c]))
                    rep.failures.push_back("suspension does not preserve id at " +
                                           cat.objects[c]);
            }
            for (std::size_t c = 0; c < n && rep.ok(); ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    // basis matrix must define an isomorphism of Hom groups
                    AbMap m(cat.hom_group_of(c, d), cat.hom_group_of(s.obj[c], s.obj[d]),
                            s.basis[c][d]);
                    if (m.mat.rows() != m.mat.cols() || !m.well_defined() ||
                        !kernel(m).group.is_trivial() || !cokernel(m).group.is_trivial())
                        rep.failures.push_back("suspension basis map not iso on Hom(" +
                                               cat.objects[c] + ", " + cat.objects[d] + ")");
                }
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d)
                    for (std::size_t e = 0; e < n; ++e)
                        for (std::size_t fi = 0; fi < cat.hom[c][d].size(); ++fi)
                            for (std::size_t gi = 0; gi < cat.hom[d][e].size(); ++gi) {
                                MorphismElt f = cat.basis_elt(c, d, fi);
                                MorphismElt g = cat.basis_elt(d, e, gi);
                                if (cat.suspend(cat.compose(g, f)) !=
                                    cat.compose(cat.suspend(g), cat.suspend(f)))
                                    rep.failures.push_back(
                                        "suspension not functorial at (" +
                                        cat.hom[c][d][fi].name + ", " + cat.hom[d][e][gi].name +
                                        ")");
                            }
        }
    }
    return rep;
}

/// Groupoid category of a finite group given by its multiplication table:
/// one object, basis = group elements, composition g o f = table[g][f].
inline ZCategory groupoid_cat(const std::vector<std::vector<std::size_t>>& table,
                              const std::vector<std::string>& names = {}) {
    std::size_t n = table.size();
    // locate the identity element
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool is_id = true;
        for (std::size_t g = 0; g < n && is_id; ++g)
            if (table[e][g] != g || table[g][e] != g) is_id = false;
        if (is_id) { id = e; break; }
    }
    if (id == n) throw std::invalid_argument("groupoid_cat: table has no identity");

    ZCategory cat;
    cat.allocate(1);
    cat.objects[0] = "G";
    for (std::size_t g = 0; g < n; ++g)
        cat.hom[0][0].push_back(
            HomGen{names.empty() ? "g" + std::to_string(g) : names[g], Int(0)});
    cat.id_idx[0] = id;
    cat.allocate_comp();
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t f = 0; f < n; ++f)
            cat.comp[0][0][0][g * n + f][table[g][f]] = 1;
    return cat;
}

/// Multiplication table of the cyclic group C(m).
inline std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t m) {
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return t;
}

/// Multiplication table of the symmetric group S3 (elements = permutations of
/// {0,1,2} in lexicographic one-line order, composition left-after-right).
inline std::vector<std::vector<std::size_t>> s3_group_table() {
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (std::size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("s3_group_table: bad permutation");
    };
    std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            std::array<int, 3> c{};
            for (int k = 0; k < 3; ++k) c[k] = perms[i][perms[j][k]];
            t[i][j] = index_of(c);
        }
    return t;
}

/// Category of pi-periodic complexes' generators: vertices c_i, arrows
/// d_i : c_i -> c_{i-1}, relations d_{i-1} d_i = 0. For pi = 1 this is the
/// dual numbers Z[d]/(d^2) on a single object.
inline ZCategory periodic_complex_cat(std::size_t pi) {
    if (pi < 1) throw std::invalid_argument("periodic_complex_cat: need pi >= 1");
    ZCategory cat;
    cat.allocate(pi);
    for (std::size_t i = 0; i < pi; ++i) cat.objects[i] = "c" + std::to_string(i);
    for (std::size_t i = 0; i < pi; ++i) {
        cat.hom[i][i].push_back(HomGen{"id" + std::to_string(i), Int(0)});
        cat.id_idx[i] = 0;
        std::size_t prev = (i + pi - 1) % pi;
        cat.hom[i][prev].push_back(HomGen{"d" + std::to_string(i), Int(0)});
    }
    cat.allocate_comp();
    if (pi == 1) {
        auto& cc = cat.comp[0][0][0];  // basis {id, d}
        cc[0 * 2 + 0][0] = 1;          // id o id = id
        cc[0 * 2 + 1][1] = 1;          // id o d = d
        cc[1 * 2 + 0][1] = 1;          // d o id = d
        // d o d = 0
    } else {
        for (std::size_t i = 0; i < pi; ++i) {
            std::size_t prev = (i + pi - 1) % pi;
            cat.comp[i][i][i][0][0] = 1;     // id o id
            cat.comp[i][i][prev][0][0] = 1;  // d_i o id_i = d_i
            cat.comp[i][prev][prev][0][0] = 1;  // id_{i-1} o d_i = d_i
            // d_{i-1} o d_i = 0: cell stays zero
        }
    }
    ZCategorySuspension s;
    s.obj.resize(pi);
    for (std::size_t i = 0; i < pi; ++i) s.obj[i] = (i + pi - 1) % pi;
    s.basis.assign(pi, std::vector<IntMatrix>(pi));
    for (std::size_t c = 0; c < pi; ++c)
        for (std::size_t d = 0; d < pi; ++d) {
            std::size_t r = cat.hom[c][d].size();
            s.basis[c][d] = IntMatrix::identity(r);
        }
    cat.suspension = s;
    return cat;
}

/// The stable coefficient category of 2-periodic complexes of abelian groups:
/// objects S^i Z/a for a = 0 (meaning Z) and 2 <= a <= torsion_bound, i = 0,1.
/// Hom groups are cyclic with the canonical generators
///   id          : Z -> Z                         (free)
///   red_b       : Z -> Z/b                       (order b)
///   bock_a      : Z/a -> S Z                     (order a)
///   g_{a,b}     : Z/a -> Z/b, degree 0           (order gcd(a,b))
///   sigma_{a,b} : Z/a -> S Z/b                   (order gcd(a,b))
/// and their suspensions. Composition constants (kappa on the canonical
/// generator of the composite pair, writing (x,y) = gcd):
///   g_{b,c}     o g_{a,b}     = b(a,c)/((a,b)(b,c)) * g_{a,c}
///   g_{a,b}     o red_a       = (b/(a,b))           * red_b
///   bock_b      o g_{a,b}     = (a/(a,b))           * bock_a
///   sigma_{b,c} o g_{a,b}     = (a/(a,b))           * sigma_{a,c}
///   S g_{b,c}   o sigma_{a,b} = (c/(b,c))           * sigma_{a,c}
///   S red_c     o bock_a      = sigma_{a,c}
///   S bock      o sigma       = 0,   S sigma o sigma = 0,
///   bock_b o red_b = 0,  sigma_{b,c} o red_b = 0.
inline ZCategory pure_periodic_cat(long torsion_bound) {
    if (torsion_bound < 2) torsion_bound = 2;
    std::vector<long> torsions;  // 0 encodes Z
    torsions.push_back(0);
    for (long a = 2; a <= torsion_bound; ++a) torsions.push_back(a);

    std::size_t m = torsions.size();
    ZCategory cat;
    cat.allocate(2 * m);
    auto obj_of = [&](std::size_t deg, std::size_t ai) { return deg * m + ai; };
    for (std::size_t deg = 0; deg < 2; ++deg)
        for (std::size_t ai = 0; ai < m; ++ai) {
            std::string base = torsions[ai] == 0 ? "Z" : "Z/" + std::to_string(torsions[ai]);
            cat.objects[obj_of(deg, ai)] = (deg == 1 ? "S" : "") + base;
        }

    auto gcd_l = [](long a, long b) { return std::gcd(a, b); };
    // generator order and presence for a -> b in degree shift delta
    auto gen_of = [&](long a, long b, int delta) -> std::optional<HomGen> {
        if (a == 0 && b == 0)
            return delta == 0 ? std::optional<HomGen>(HomGen{"id", Int(0)}) : std::nullopt;
        if (a == 0)
            return delta == 0
                       ? std::optional<HomGen>(HomGen{"red_" + std::to_string(b), Int(b)})
                       : std::nullopt;
        if (b == 0)
            return delta == 1
                       ? std::optional<HomGen>(HomGen{"bock_" + std::to_string(a), Int(a)})
                       : std::nullopt;
        if (gcd_l(a, b) == 1) return std::nullopt;  // Z/gcd is trivial
        std::string nm = (delta == 0 ? "g_" : "sigma_") + std::to_string(a) + "_" +
                         std::to_string(b);
        return HomGen{nm, Int(gcd_l(a, b))};
    };

    for (std::size_t di = 0; di < 2; ++di)
        for (std::size_t ai = 0; ai < m; ++ai)
            for (std::size_t dj = 0; dj < 2; ++dj)
                for (std::size_t bi = 0; bi < m; ++bi) {
                    int delta = static_cast<int>((dj + 2 - di) % 2);
                    auto g = gen_of(torsions[ai], torsions[bi], delta);
                    if (g) cat.hom[obj_of(di, ai)][obj_of(dj, bi)].push_back(*g);
                }
    for (std::size_t di = 0; di < 2; ++di)
        for (std::size_t ai = 0; ai < m; ++ai) cat.id_idx[obj_of(di, ai)] = 0;
    cat.allocate_comp();

    // kappa table: compose x: a -> b (delta1) then y: b -> c (delta2).
    enum GenType { ID, RED, BOCK, G, SIGMA, NONE };
    auto type_of = [&](long a, long b, int delta) -> GenType {
        if (a == 0 && b == 0) return delta == 0 ? ID : NONE;
        if (a == 0) return delta == 0 ? RED : NONE;
        if (b == 0) return delta == 1 ? BOCK : NONE;
        if (gcd_l(a, b) == 1) return NONE;
        return delta == 0 ? G : SIGMA;
    };
    auto kappa = [&](long a, long b, long c, int d1, int d2) -> Int {
        if (type_of(a, c, (d1 + d2) % 2) == NONE) return 0;
        GenType tx = type_of(a, b, d1), ty = type_of(b, c, d2);
        if (tx == NONE || ty == NONE) return 0;
        if (tx == ID || ty == ID) return 1;
        if (tx == RED && ty == G) return Int(c / gcd_l(b, c));
        if (tx == G && ty == G)
            return Int(b) * gcd_l(a, c) / (Int(gcd_l(a, b)) * gcd_l(b, c));
        if (tx == G && ty == BOCK) return Int(a / gcd_l(a, b));
        if (tx == G && ty == SIGMA) return Int(a / gcd_l(a, b));
        if (tx == SIGMA && ty == G) return Int(c / gcd_l(b, c));
        if (tx == BOCK && ty == RED) return 1;  // S red_c o bock_a = sigma_{a,c}
        return 0;  // sigma o sigma, bock o red, and all absent composites
    };

    for (std::size_t di = 0; di < 2; ++di)
        for (std::size_t ai = 0; ai < m; ++ai)
            for (std::size_t dj = 0; dj < 2; ++dj)
                for (std::size_t bi = 0; bi < m; ++bi)
                    for (std::size_t dk = 0; dk < 2; ++dk)
                        for (std::size_t ci = 0; ci < m; ++ci) {
                            std::size_t oc = obj_of(di, ai), od = obj_of(dj, bi),
                                        oe = obj_of(dk, ci);
                            if (cat.hom[oc][od].empty() || cat.hom[od][oe].empty()) continue;
                            int d1 = static_cast<int>((dj + 2 - di) % 2);
                            int d2 = static_cast<int>((dk + 2 - dj) % 2);
                            Int k = kappa(torsions[ai], torsions[bi], torsions[ci], d1, d2);
                            if (k == 0) continue;
                            if (cat.hom[oc][oe].empty())
                                throw std::logic_error("pure_periodic_cat: dropping nonzero");
                            cat.comp[oc][od][oe][0][0] = k;
                        }

    ZCategorySuspension s;
    s.obj.resize(2 * m);
    for (std::size_t di = 0; di < 2; ++di)
        for (std::size_t ai = 0; ai < m; ++ai) s.obj[obj_of(di, ai)] = obj_of(1 - di, ai);
    s.basis.assign(2 * m, std::vector<IntMatrix>(2 * m));
    for (std::size_t c = 0; c < 2 * m; ++c)
        for (std::size_t d = 0; d < 2 * m; ++d)
            s.basis[c][d] = IntMatrix::identity(cat.hom[c][d].size());
    cat.suspension = s;
    return cat;
}

}  // namespace uctkit
