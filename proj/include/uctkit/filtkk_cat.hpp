#pragma once

#include "uctkit/gorenstein.hpp"

#include <optional>
#include <string>
#include <utility>

namespace uctkit {

/// Lattice point (a, b) on the fat diagonal a <= b <= a+n-1, taken modulo the
/// periodicity (a, b) ~ (a+n+1, b+n+1). Canonical representatives have
/// 1 <= a <= n+1.
struct FatDiagonalPoint {
    long a = 0, b = 0;
    bool operator==(const FatDiagonalPoint& o) const = default;
};

namespace filt {

inline long floor_div_l(long a, long b) {
    long q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline bool on_fat_diagonal(long n, long a, long b) { return a <= b && b <= a + n - 1; }

inline FatDiagonalPoint canonical_point(long n, long a, long b) {
    if (!on_fat_diagonal(n, a, b))
        throw std::invalid_argument("filtkk: point off the fat diagonal");
    long k = floor_div_l(a - 1, n + 1);
    return FatDiagonalPoint{a - k * (n + 1), b - k * (n + 1)};
}

/// Unique translate of (a', b') landing in the box of (a, b), if any:
/// a <= a'+k(n+1) <= b and b <= b'+k(n+1) <= a+n-1.
inline std::optional<std::pair<long, long>> displacement(long n, long a, long b, long a2,
                                                         long b2) {
    // both box side lengths are < n+1, so at most one k fits
    for (long k = floor_div_l(a - a2, n + 1) - 1; k <= floor_div_l(b - a2, n + 1) + 1; ++k) {
        long ta = a2 + k * (n + 1), tb = b2 + k * (n + 1);
        if (a <= ta && ta <= b && b <= tb && tb <= a + n - 1)
            return std::make_pair(ta - a, tb - b);
    }
    return std::nullopt;
}

inline std::size_t object_index(long n, const FatDiagonalPoint& p) {
    return static_cast<std::size_t>((p.a - 1) * n + (p.b - p.a));
}

inline FatDiagonalPoint object_point(long n, std::size_t idx) {
    long a = static_cast<long>(idx) / n + 1;
    long b = a + static_cast<long>(idx) % n;
    return FatDiagonalPoint{a, b};
}

}  // namespace filt

/// The coefficient category of filtrated K-theory over X = {1,...,n}:
/// objects A_{a,b} on the fat diagonal modulo (a,b) -> (a+n+1, b+n+1), all
/// Hom groups free of rank <= 1, composition of canonical generators equal to
/// the canonical generator of the total displacement (or zero when the target
/// leaves the box).
inline ZCategory filtkk_cat(long n) {
    if (n < 1) throw std::invalid_argument("filtkk_cat: need n >= 1");
    std::size_t count = static_cast<std::size_t>(n * (n + 1));
    ZCategory cat;
    cat.allocate(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto p = filt::object_point(n, i);
        cat.objects[i] = "A(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
    }
    for (std::size_t c = 0; c < count; ++c) {
        auto pc = filt::object_point(n, c);
        for (std::size_t d = 0; d < count; ++d) {
            auto pd = filt::object_point(n, d);
            auto disp = filt::displacement(n, pc.a, pc.b, pd.a, pd.b);
            if (disp)
                cat.hom[c][d].push_back(
                    HomGen{"al" + cat.objects[c] + "->" + cat.objects[d], Int(0)});
        }
        cat.id_idx[c] = 0;
    }
    cat.allocate_comp();
    for (std::size_t c = 0; c < count; ++c) {
        auto pc = filt::object_point(n, c);
        for (std::size_t d = 0; d < count; ++d) {
            if (cat.hom[c][d].empty()) continue;
            auto pd = filt::object_point(n, d);
            auto d1 = *filt::displacement(n, pc.a, pc.b, pd.a, pd.b);
            for (std::size_t e = 0; e < count; ++e) {
                if (cat.hom[d][e].empty() || cat.hom[c][e].empty()) continue;
                auto pe = filt::object_point(n, e);
                auto d2 = *filt::displacement(n, pd.a, pd.b, pe.a, pe.b);
                long ta = d1.first + d2.first, tb = d1.second + d2.second;
                // total displacement must stay inside the box of (a, b)
                if (ta <= pc.b - pc.a && tb <= pc.a + n - 1 - pc.b)
                    cat.comp[c][d][e][0][0] = 1;
            }
        }
    }

    ZCategorySuspension s;
    s.obj.resize(count);
    for (std::size_t c = 0; c < count; ++c) {
        auto p = filt::object_point(n, c);
        s.obj[c] = filt::object_index(n, filt::canonical_point(n, p.b + 1, p.a + n));
    }
    s.basis.assign(count, std::vector<IntMatrix>(count));
    for (std::size_t c = 0; c < count; ++c)
        for (std::size_t d = 0; d < count; ++d) {
            std::size_t r = cat.hom[c][d].size();
            s.basis[c][d] = IntMatrix::identity(r);
            if (cat.hom[s.obj[c]][s.obj[d]].size() != r)
                throw InternalInvariantViolation("filtkk_cat: suspension rank mismatch");
        }
    cat.suspension = s;
    return cat;
}

/// The Serre certificate for filtkk_cat(n): S sends A_{a,b} to the farthest
/// corner A_{b, a+n-1} of its box, lambda picks the coefficient of the
/// canonical generator.
inline SerreData filtkk_serre(const ZCategory& cat, long n) {
    std::size_t count = cat.size();
    SerreData s;
    s.s_obj.resize(count);
    for (std::size_t c = 0; c < count; ++c) {
        auto p = filt::object_point(n, c);
        s.s_obj[c] = filt::object_index(n, filt::canonical_point(n, p.b, p.a + n - 1));
    }
    s.s_basis.assign(count, std::vector<IntMatrix>(count));
    for (std::size_t c = 0; c < count; ++c)
        for (std::size_t d = 0; d < count; ++d)
            s.s_basis[c][d] = IntMatrix::identity(cat.hom[c][d].size());
    s.lambda.resize(count);
    for (std::size_t c = 0; c < count; ++c)
        s.lambda[c].assign(cat.hom[c][s.s_obj[c]].size(), Int(1));
    return s;
}

/// Serre certificate for periodic_complex_cat(pi): S = degree shift,
/// lambda(d_i) = 1 (and lambda(id) = 0 in the pi = 1 case).
inline SerreData periodic_complex_serre(const ZCategory& cat) {
    if (!cat.suspension) throw std::invalid_argument("periodic_complex_serre: no shift");
    std::size_t n = cat.size();
    SerreData s;
    s.s_obj = cat.suspension->obj;
    s.s_basis = cat.suspension->basis;
    s.lambda.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sc = s.s_obj[c];
        s.lambda[c].assign(cat.hom[c][sc].size(), Int(0));
        for (std::size_t i = 0; i < cat.hom[c][sc].size(); ++i)
            if (cat.hom[c][sc][i].name[0] == 'd') s.lambda[c][i] = 1;
    }
    return s;
}

/// Serre certificate for a groupoid category: S = id and lambda picks the
/// coefficient of the identity.
inline SerreData groupoid_serre(const ZCategory& cat) {
    std::size_t n = cat.size();
    SerreData s;
    s.s_obj.resize(n);
    for (std::size_t c = 0; c < n; ++c) s.s_obj[c] = c;
    s.s_basis.assign(n, std::vector<IntMatrix>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            s.s_basis[c][d] = IntMatrix::identity(cat.hom[c][d].size());
    s.lambda.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        s.lambda[c].assign(cat.hom[c][c].size(), Int(0));
        s.lambda[c][cat.id_idx[c]] = 1;
    }
    return s;
}

}  // namespace uctkit
