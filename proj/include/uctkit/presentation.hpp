#pragma once
#ifdef UCTKIT_COMPILE_TRACE
#include <iostream>
#endif

#include "uctkit/gorenstein.hpp"
#include "uctkit/zcategory.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace uctkit {

struct QuiverArrow {
    std::string name;
    std::size_t src, dst;
};

/// Z-linear combination of parallel paths. A path is the list of arrow
/// indices in application order (first arrow first); the empty path is the
/// identity of `src`.
struct PathTerm {
    std::vector<std::size_t> path;
    Int coeff;
};

struct Relation {
    std::size_t src, dst;
    std::vector<PathTerm> terms;
};

struct Presentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    std::vector<Relation> relations;
};

struct RankNotStabilized : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentRelations : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompiledCategory {
    ZCategory cat;
    std::vector<MorphismElt> arrow_classes;  // class of each single-arrow path

    /// Class of an arbitrary path through the compiled composition tables.
    MorphismElt path_class(const Presentation& p, std::size_t src,
                           const std::vector<std::size_t>& path) const {
        MorphismElt acc = cat.identity_elt(src);
        for (std::size_t a : path) acc = cat.compose(arrow_classes[a], acc);
        return acc;
    }
};

namespace detail {

using Path = std::vector<std::size_t>;

struct PairPool {
    std::vector<Path> paths;            // insertion order = length-lex order
    std::map<Path, std::size_t> index;
    std::vector<std::map<std::size_t, Int>> rows;  // sparse relation rows
    std::set<std::map<std::size_t, Int>> row_set;

    std::size_t add(const Path& p) {
        auto it = index.find(p);
        if (it != index.end()) return it->second;
        paths.push_back(p);
        index[p] = paths.size() - 1;
        return paths.size() - 1;
    }
    bool add_row(std::map<std::size_t, Int> row) {
        // normalize: strip zeros, make leading (largest index) coefficient positive
        for (auto it = row.begin(); it != row.end();)
            it = it->second == 0 ? row.erase(it) : std::next(it);
        if (row.empty()) return false;
        if (row.rbegin()->second < 0)
            for (auto& [k, v] : row) v = -v;
        if (row_set.count(row)) return false;
        row_set.insert(row);
        rows.push_back(std::move(row));
        return true;
    }
};

}  // namespace detail

/// Bounded path-rewriting compiler: quotients the path category by the
/// relations using linear algebra on paths up to a growing length cap, with
/// externally supplied Hom rank bounds as stabilization certificates. The
/// result has free Hom groups with canonical bases ordered by
/// length-then-arrow-names, passes validate_category, and re-verifies every
/// input relation in its own composition tables.
inline CompiledCategory compile_presentation(
    const Presentation& pres, const std::vector<std::vector<std::size_t>>& rank_bounds,
    std::size_t degree_cap = 0) {
    std::size_t nv = pres.vertices.size();
    if (degree_cap == 0) degree_cap = 2 * nv + 8;

    // arrow names must be unique: basis ordering depends on them
    {
        std::set<std::string> names;
        for (const auto& a : pres.arrows)
            if (!names.insert(a.name).second)
                throw std::invalid_argument("compile_presentation: duplicate arrow name " +
                                            a.name);
    }

    auto path_src = [&](const detail::Path& p, std::size_t fallback) {
        return p.empty() ? fallback : pres.arrows[p.front()].src;
    };
    auto path_dst = [&](const detail::Path& p, std::size_t fallback) {
        return p.empty() ? fallback : pres.arrows[p.back()].dst;
    };
    (void)path_src;

    // length-lex order on paths via arrow names
    auto path_less = [&](const detail::Path& a, const detail::Path& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return pres.arrows[a[i]].name < pres.arrows[b[i]].name;
        return false;
    };

    std::size_t max_rel_deg = 1;
    for (const auto& r : pres.relations)
        for (const auto& t : r.terms) max_rel_deg = std::max(max_rel_deg, t.path.size());

    for (std::size_t cap = std::max<std::size_t>(max_rel_deg + 1, 3); cap <= degree_cap;
         ++cap) {
        std::vector<std::vector<detail::PairPool>> pools(
            nv, std::vector<detail::PairPool>(nv));
        for (std::size_t c = 0; c < nv; ++c) pools[c][c].add({});

        // current basis per pair, recomputed after linear changes
        std::vector<std::vector<std::vector<std::size_t>>> basis(
            nv, std::vector<std::vector<std::size_t>>(nv));
        auto recompute_basis = [&](std::size_t c, std::size_t d) {
            detail::PairPool& pp = pools[c][d];
            std::size_t np = pp.paths.size();
            IntMatrix rels(np, pp.rows.size());
            for (std::size_t j = 0; j < pp.rows.size(); ++j)
                for (const auto& [k, v] : pp.rows[j]) rels.at(k, j) = v;
            FpAbGroup q(np, rels);
            std::size_t rank = q.free_rank();
            // candidate order: length-lex
            std::vector<std::size_t> order(np);
            for (std::size_t i = 0; i < np; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                return path_less(pp.paths[x], pp.paths[y]);
            });
            std::vector<std::size_t> chosen;
            IntMatrix sel(np, 0);
            for (std::size_t oi = 0; oi < np && chosen.size() < rank; ++oi) {
                std::vector<Int> e(np, Int(0));
                e[order[oi]] = 1;
                IntMatrix cand = sel.hstack(IntMatrix::col_vector(e));
                FpAbGroup test(np, rels.hstack(cand));
                if (test.canon().torsion == q.canon().torsion &&
                    test.free_rank() == rank - chosen.size() - 1) {
                    chosen.push_back(order[oi]);
                    sel = cand;
                }
            }
            basis[c][d] = chosen;
        };

        bool overflow = false;
        for (bool changed = true; changed && !overflow;) {
            changed = false;
            for (std::size_t c = 0; c < nv; ++c)
                for (std::size_t d = 0; d < nv; ++d) recompute_basis(c, d);

            // (a) extension: arrow o basis path
            for (std::size_t c = 0; c < nv; ++c)
                for (std::size_t d = 0; d < nv; ++d)
                    for (std::size_t bi : basis[c][d]) {
                        detail::Path q = pools[c][d].paths[bi];  // copy: pool may grow
                        if (q.size() + 1 > cap) continue;
                        for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
                            if (pres.arrows[a].src != d) continue;
                            detail::Path w = q;
                            w.push_back(a);
                            std::size_t before = pools[c][pres.arrows[a].dst].paths.size();
                            pools[c][pres.arrows[a].dst].add(w);
                            if (pools[c][pres.arrows[a].dst].paths.size() != before)
                                changed = true;
                        }
                    }

            // (b) relator embeddings: basis path u into each relation source
            for (const auto& rel : pres.relations)
                for (std::size_t c = 0; c < nv; ++c) {
                    for (std::size_t bi : basis[c][rel.src]) {
                        detail::Path u = pools[c][rel.src].paths[bi];  // copy
                        std::map<std::size_t, Int> row;
                        bool fits = true;
                        for (const auto& term : rel.terms) {
                            if (u.size() + term.path.size() > cap) {
                                fits = false;
                                break;
                            }
                            detail::Path w = u;
                            w.insert(w.end(), term.path.begin(), term.path.end());
                            row[pools[c][rel.dst].add(w)] += term.coeff;
                        }
                        if (fits && pools[c][rel.dst].add_row(row)) changed = true;
                    }
                }

            // (c) transport: post-compose every known row with every arrow
            for (std::size_t c = 0; c < nv; ++c)
                for (std::size_t d = 0; d < nv; ++d) {
                    detail::PairPool& pp = pools[c][d];
                    for (std::size_t ri = 0; ri < pp.rows.size(); ++ri) {
                        auto row = pp.rows[ri];  // copy: pool may grow
                        std::size_t longest = 0;
                        for (const auto& [k, v] : row)
                            longest = std::max(longest, pp.paths[k].size());
                        if (longest + 1 > cap) continue;
                        for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
                            if (pres.arrows[a].src != d) continue;
                            std::map<std::size_t, Int> moved;
                            for (const auto& [k, v] : row) {
                                detail::Path w = pp.paths[k];
                                w.push_back(a);
                                moved[pools[c][pres.arrows[a].dst].add(w)] += v;
                            }
                            if (pools[c][pres.arrows[a].dst].add_row(moved)) changed = true;
                        }
                    }
                }

            std::size_t total = 0, total_rows = 0;
            for (std::size_t c = 0; c < nv; ++c)
                for (std::size_t d = 0; d < nv; ++d) {
                    total += pools[c][d].paths.size();
                    total_rows += pools[c][d].rows.size();
                }
#ifdef UCTKIT_COMPILE_TRACE
            std::cerr << "cap " << cap << ": paths " << total << " rows " << total_rows
                      << (changed ? " (changed)" : " (stable)") << "\n";
#endif
            if (total > 200000) overflow = true;
        }
        if (overflow)
            throw RankNotStabilized("compile_presentation: path pool overflow at cap " +
                                    std::to_string(cap));

        // final quotient data per pair
        struct Final {
            FpAbGroup q;
            IntMatrix rels, basis_cols;
            std::vector<std::size_t> basis_paths;
        };
        std::vector<std::vector<Final>> fin(nv, std::vector<Final>(nv));
        bool cap_ok = true;
        bool torsion = false, id_dead = false;
        for (std::size_t c = 0; c < nv && cap_ok; ++c)
            for (std::size_t d = 0; d < nv; ++d) {
                detail::PairPool& pp = pools[c][d];
                recompute_basis(c, d);
                std::size_t np = pp.paths.size();
                IntMatrix rels(np, pp.rows.size());
                for (std::size_t j = 0; j < pp.rows.size(); ++j)
                    for (const auto& [k, v] : pp.rows[j]) rels.at(k, j) = v;
                FpAbGroup q(np, rels);
                if (!q.is_free()) {
                    torsion = true;
                    cap_ok = false;
                    break;
                }
                if (q.free_rank() != rank_bounds[c][d] ||
                    basis[c][d].size() != rank_bounds[c][d]) {
                    cap_ok = false;
                    break;
                }
                IntMatrix bc(np, basis[c][d].size());
                for (std::size_t j = 0; j < basis[c][d].size(); ++j)
                    bc.at(basis[c][d][j], j) = 1;
                fin[c][d] = Final{q, rels, bc, basis[c][d]};
            }
        if (torsion)
            throw InconsistentRelations(
                "compile_presentation: relations force torsion in a Hom group");
        // an identity collapsing to zero is inconsistent regardless of the cap
        for (std::size_t c = 0; c < nv; ++c) {
            std::vector<Int> e(pools[c][c].paths.size(), Int(0));
            e[pools[c][c].index.at({})] = 1;
            IntMatrix rels(pools[c][c].paths.size(), pools[c][c].rows.size());
            for (std::size_t j = 0; j < pools[c][c].rows.size(); ++j)
                for (const auto& [k, v] : pools[c][c].rows[j]) rels.at(k, j) = v;
            if (FpAbGroup(e.size(), rels).is_zero_element(e))
                throw InconsistentRelations("compile_presentation: id_" + pres.vertices[c] +
                                            " collapses to zero");
        }
        // the identity must also survive as a basis element of End(c)
        for (std::size_t c = 0; c < nv && cap_ok; ++c) {
            bool found = false;
            for (std::size_t bi : basis[c][c])
                if (pools[c][c].paths[bi].empty()) found = true;
            if (!found) cap_ok = false;
        }
        if (!cap_ok) continue;  // try a larger cap

        // expression of a pool path over the basis: solve [rels | basis] x = e
        auto express = [&](std::size_t c, std::size_t d,
                           std::size_t pidx) -> std::optional<std::vector<Int>> {
            const Final& f = fin[c][d];
            std::vector<Int> e(pools[c][d].paths.size(), Int(0));
            e[pidx] = 1;
            auto sol = solve(f.rels.hstack(f.basis_cols), e);
            if (!sol) return std::nullopt;
            std::vector<Int> out(f.basis_paths.size());
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*sol)[f.rels.cols() + i];
            return out;
        };

        // class of (arrow o basis path), needed to fold arbitrary paths
        auto apply_arrow = [&](std::size_t c, std::size_t d, const std::vector<Int>& expr,
                               std::size_t a) -> std::optional<std::vector<Int>> {
            std::size_t e = pres.arrows[a].dst;
            std::vector<Int> out(fin[c][e].basis_paths.size(), Int(0));
            for (std::size_t i = 0; i < expr.size(); ++i) {
                if (expr[i] == 0) continue;
                detail::Path w = pools[c][d].paths[fin[c][d].basis_paths[i]];
                w.push_back(a);
                auto it = pools[c][e].index.find(w);
                if (it == pools[c][e].index.end()) return std::nullopt;
                auto ew = express(c, e, it->second);
                if (!ew) return std::nullopt;
                for (std::size_t k = 0; k < out.size(); ++k) out[k] += expr[i] * (*ew)[k];
            }
            return out;
        };

        // fold a whole path from the identity expression
        auto fold_path = [&](std::size_t c, const detail::Path& p)
            -> std::optional<std::pair<std::size_t, std::vector<Int>>> {
            std::size_t cur = c;
            auto idx = pools[c][cur].index.find({});
            auto expr = express(c, cur, idx->second);
            if (!expr) return std::nullopt;
            for (std::size_t a : p) {
                auto next = apply_arrow(c, cur, *expr, a);
                if (!next) return std::nullopt;
                cur = pres.arrows[a].dst;
                expr = next;
            }
            return std::make_pair(cur, *expr);
        };

        // assemble the category
        ZCategory cat;
        cat.allocate(nv);
        cat.objects = pres.vertices;
        bool assembled = true;
        for (std::size_t c = 0; c < nv; ++c)
            for (std::size_t d = 0; d < nv; ++d)
                for (std::size_t bi : fin[c][d].basis_paths) {
                    const detail::Path& p = pools[c][d].paths[bi];
                    std::string nm;
                    if (p.empty())
                        nm = "id_" + pres.vertices[c];
                    else
                        for (std::size_t a : p)
                            nm += (nm.empty() ? "" : ".") + pres.arrows[a].name;
                    cat.hom[c][d].push_back(HomGen{nm, Int(0)});
                }
        for (std::size_t c = 0; c < nv; ++c) {
            std::size_t pos = 0;
            for (std::size_t j = 0; j < fin[c][c].basis_paths.size(); ++j)
                if (pools[c][c].paths[fin[c][c].basis_paths[j]].empty()) pos = j;
            cat.id_idx[c] = pos;
        }
        cat.allocate_comp();
        for (std::size_t c = 0; c < nv && assembled; ++c)
            for (std::size_t d = 0; d < nv && assembled; ++d)
                for (std::size_t e = 0; e < nv && assembled; ++e) {
                    std::size_t nf = cat.hom[c][d].size();
                    for (std::size_t gi = 0; gi < cat.hom[d][e].size() && assembled; ++gi)
                        for (std::size_t fi = 0; fi < nf; ++fi) {
                            detail::Path w = pools[c][d].paths[fin[c][d].basis_paths[fi]];
                            const detail::Path& g =
                                pools[d][e].paths[fin[d][e].basis_paths[gi]];
                            w.insert(w.end(), g.begin(), g.end());
                            auto res = fold_path(c, w);
                            if (!res) {
                                assembled = false;
                                break;
                            }
                            cat.comp[c][d][e][gi * nf + fi] = res->second;
                        }
                }
        if (!assembled) continue;  // need a larger cap

        CompiledCategory out;
        out.cat = std::move(cat);
        for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
            auto res = fold_path(pres.arrows[a].src, {a});
            if (!res) {
                assembled = false;
                break;
            }
            out.arrow_classes.push_back(
                MorphismElt{pres.arrows[a].src, pres.arrows[a].dst, res->second});
        }
        if (!assembled) continue;

        // certification: the compiled tables must validate and satisfy the
        // input relations
        auto vrep = validate_category(out.cat);
        if (!vrep.ok())
            throw InternalInvariantViolation("compile_presentation: " + vrep.failures[0]);
        for (const auto& rel : pres.relations) {
            MorphismElt acc = out.cat.zero_elt(rel.src, rel.dst);
            for (const auto& term : rel.terms) {
                MorphismElt t = out.path_class(pres, rel.src, term.path);
                for (std::size_t k = 0; k < acc.coeffs.size(); ++k)
                    acc.coeffs[k] += term.coeff * t.coeffs[k];
            }
            if (!out.cat.is_zero(acc))
                throw InternalInvariantViolation(
                    "compile_presentation: relation fails in compiled tables");
        }
        return out;
    }
    throw RankNotStabilized("compile_presentation: rank bounds not confirmed within cap");
}

// ---------------------------------------------------------------------------
// The equivariant-KK coefficient category (three suspension orbits)
// ---------------------------------------------------------------------------

struct KoehlerCategory {
    Presentation presentation;
    CompiledCategory compiled;
    std::size_t end_ring_rank = 0;  // Z-rank of End(A2), from the reduction oracle
};

/// Compiles the three-orbit quiver with relations rho1..rho5 at a prime p.
/// Rank bounds: End ranks p, p and the reduction-oracle rank of
/// Z[s,t]/(N(s)+N(t)-p, (1-s)(1-t)); off-diagonal ranks 1 and p-1.
inline KoehlerCategory koehler_cat(int p) {
    if (p < 2) throw std::invalid_argument("koehler_cat: need a prime p >= 2");
    Presentation pres;
    pres.vertices = {"A0", "A1", "A2", "SA0", "SA1", "SA2"};
    enum { A0, A1, A2, SA0, SA1, SA2 };
    auto arrow = [&](const std::string& n, std::size_t s, std::size_t d) {
        pres.arrows.push_back(QuiverArrow{n, s, d});
        return pres.arrows.size() - 1;
    };
    std::size_t t0 = arrow("t0", A0, A0), s1 = arrow("s1", A1, A1);
    std::size_t s2 = arrow("s2", A2, A2), t2 = arrow("t2", A2, A2);
    std::size_t a10 = arrow("a10", A0, A1), a01 = arrow("a01", A1, A0);
    std::size_t a20 = arrow("a20", A0, A2), a02 = arrow("a02", A2, A0);
    std::size_t a21s = arrow("a21s", A1, SA2), a12s = arrow("a12s", A2, SA1);
    std::size_t St0 = arrow("St0", SA0, SA0), Ss1 = arrow("Ss1", SA1, SA1);
    std::size_t Ss2 = arrow("Ss2", SA2, SA2), St2 = arrow("St2", SA2, SA2);
    std::size_t Sa10 = arrow("Sa10", SA0, SA1), Sa01 = arrow("Sa01", SA1, SA0);
    std::size_t Sa20 = arrow("Sa20", SA0, SA2), Sa02 = arrow("Sa02", SA2, SA0);
    std::size_t Sa21 = arrow("Sa21", SA1, A2), Sa12 = arrow("Sa12", SA2, A1);

    auto zero2 = [&](std::size_t x, std::size_t y, std::size_t s, std::size_t d) {
        pres.relations.push_back(Relation{s, d, {PathTerm{{x, y}, Int(1)}}});
    };
    // rho1: neighbouring alpha-compositions vanish
    zero2(Sa10, Sa21, SA0, A2);
    zero2(a10, a21s, A0, SA2);
    zero2(a12s, Sa01, A2, SA0);
    zero2(Sa12, a01, SA2, A0);
    zero2(Sa21, a02, SA1, A0);
    zero2(a21s, Sa02, A1, SA0);
    zero2(a20, a12s, A0, SA1);
    zero2(Sa20, Sa12, SA0, A1);
    zero2(a02, a10, A2, A1);
    zero2(Sa02, Sa10, SA2, SA1);
    zero2(a01, a20, A1, A2);
    zero2(Sa01, Sa20, SA1, SA2);

    auto norm_terms = [&](std::size_t loop, Int sign) {
        std::vector<PathTerm> terms;
        for (int i = 0; i < p; ++i) {
            detail::Path pw(static_cast<std::size_t>(i), loop);
            terms.push_back(PathTerm{pw, sign});
        }
        return terms;
    };
    auto rel_eq = [&](std::vector<PathTerm> lhs, std::vector<PathTerm> rhs, std::size_t s,
                      std::size_t d) {
        for (auto& t : rhs) {
            t.coeff = -t.coeff;
            lhs.push_back(t);
        }
        pres.relations.push_back(Relation{s, d, std::move(lhs)});
    };
    // rho2: a01 o a10 = N(t0), a10 o a01 = N(s1), and suspended copies
    rel_eq({PathTerm{{a10, a01}, Int(1)}}, norm_terms(t0, Int(1)), A0, A0);
    rel_eq({PathTerm{{a01, a10}, Int(1)}}, norm_terms(s1, Int(1)), A1, A1);
    rel_eq({PathTerm{{Sa10, Sa01}, Int(1)}}, norm_terms(St0, Int(1)), SA0, SA0);
    rel_eq({PathTerm{{Sa01, Sa10}, Int(1)}}, norm_terms(Ss1, Int(1)), SA1, SA1);
    // rho3: a02 o a20 = id - t0, a20 o a02 = id - t2, and suspended copies
    rel_eq({PathTerm{{a20, a02}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{t0}, Int(-1)}}, A0, A0);
    rel_eq({PathTerm{{a02, a20}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{t2}, Int(-1)}}, A2, A2);
    rel_eq({PathTerm{{Sa20, Sa02}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{St0}, Int(-1)}}, SA0, SA0);
    rel_eq({PathTerm{{Sa02, Sa20}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{St2}, Int(-1)}}, SA2, SA2);
    // rho4: the s-side squares
    rel_eq({PathTerm{{a21s, Sa12}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{s1}, Int(-1)}}, A1, A1);
    rel_eq({PathTerm{{a12s, Sa21}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{s2}, Int(-1)}}, A2, A2);
    rel_eq({PathTerm{{Sa21, a12s}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{Ss1}, Int(-1)}}, SA1, SA1);
    rel_eq({PathTerm{{Sa12, a21s}, Int(1)}},
           {PathTerm{{}, Int(1)}, PathTerm{{Ss2}, Int(-1)}}, SA2, SA2);
    // rho5: N(t2) + N(s2) = p, and the suspended copy
    {
        auto terms = norm_terms(t2, Int(1));
        for (auto& t : norm_terms(s2, Int(1))) terms.push_back(t);
        terms.push_back(PathTerm{{}, Int(-p)});
        pres.relations.push_back(Relation{A2, A2, std::move(terms)});
        auto sterms = norm_terms(St2, Int(1));
        for (auto& t : norm_terms(Ss2, Int(1))) sterms.push_back(t);
        sterms.push_back(PathTerm{{}, Int(-p)});
        pres.relations.push_back(Relation{SA2, SA2, std::move(sterms)});
    }

    // rank bounds; End(A2) rank from the monomial reduction oracle
    Poly r1 = Poly::norm_sum(0, p) + Poly::norm_sum(1, p) - Poly::constant(p);
    Poly r2 = (Poly::constant(1) - Poly::var(0)) * (Poly::constant(1) - Poly::var(1));
    std::size_t r_end2 = reduce_ring(2, {r1, r2}, 2 * p + 2).ring.rank();

    std::size_t P = static_cast<std::size_t>(p);
    std::vector<std::vector<std::size_t>> bounds(6, std::vector<std::size_t>(6, 0));
    bounds[A0] = {P, 1, P - 1, 0, 0, 0};
    bounds[A1] = {1, P, 0, 0, 0, P - 1};
    bounds[A2] = {P - 1, 0, r_end2, 0, P - 1, 0};
    bounds[SA0] = {0, 0, 0, P, 1, P - 1};
    bounds[SA1] = {0, 0, P - 1, 1, P, 0};
    bounds[SA2] = {0, P - 1, 0, P - 1, 0, r_end2};

    KoehlerCategory out;
    out.presentation = pres;
    out.end_ring_rank = r_end2;
    out.compiled = compile_presentation(pres, bounds);

    // suspension: swap the orbits, translate basis paths arrow-by-arrow
    std::vector<std::size_t> sigma_arrow(pres.arrows.size());
    auto pair_up = [&](std::size_t x, std::size_t y) {
        sigma_arrow[x] = y;
        sigma_arrow[y] = x;
    };
    pair_up(t0, St0);
    pair_up(s1, Ss1);
    pair_up(s2, Ss2);
    pair_up(t2, St2);
    pair_up(a10, Sa10);
    pair_up(a01, Sa01);
    pair_up(a20, Sa20);
    pair_up(a02, Sa02);
    pair_up(a21s, Sa21);
    pair_up(a12s, Sa12);

    ZCategory& cat = out.compiled.cat;
    ZCategorySuspension s;
    s.obj = {SA0, SA1, SA2, A0, A1, A2};
    s.basis.assign(6, std::vector<IntMatrix>(6));
    for (std::size_t c = 0; c < 6; ++c)
        for (std::size_t d = 0; d < 6; ++d) {
            std::size_t rank = cat.hom[c][d].size();
            IntMatrix m(cat.hom[s.obj[c]][s.obj[d]].size(), rank);
            for (std::size_t i = 0; i < rank; ++i) {
                // basis name encodes the path; translate it
                std::string nm = cat.hom[c][d][i].name;
                detail::Path translated;
                if (nm.rfind("id_", 0) != 0) {
                    std::size_t pos = 0;
                    while (pos < nm.size()) {
                        std::size_t dot = nm.find('.', pos);
                        std::string part = nm.substr(pos, dot == std::string::npos
                                                              ? std::string::npos
                                                              : dot - pos);
                        for (std::size_t a = 0; a < pres.arrows.size(); ++a)
                            if (pres.arrows[a].name == part) {
                                translated.push_back(sigma_arrow[a]);
                                break;
                            }
                        if (dot == std::string::npos) break;
                        pos = dot + 1;
                    }
                }
                MorphismElt cls = out.compiled.path_class(pres, s.obj[c], translated);
                m.set_col(i, cls.coeffs);
            }
            s.basis[c][d] = m;
        }
    cat.suspension = s;
    auto vrep = validate_category(cat);
    if (!vrep.ok())
        throw InternalInvariantViolation("koehler_cat: suspension fails validation: " +
                                         vrep.failures[0]);
    return out;
}

/// Boundary certificate data for koehler_cat: S = id, mu_d = identity.
inline BoundaryData koehler_boundary_data(const ZCategory& cat) {
    BoundaryData b;
    std::size_t n = cat.size();
    b.s_obj.resize(n);
    for (std::size_t c = 0; c < n; ++c) b.s_obj[c] = c;
    b.s_basis.assign(n, std::vector<IntMatrix>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
            b.s_basis[c][d] = IntMatrix::identity(cat.hom[c][d].size());
    b.mu.resize(n);
    for (std::size_t d = 0; d < n; ++d) b.mu[d] = IntMatrix::identity(cat.hom[d][d].size());
    return b;
}

}  // namespace uctkit
