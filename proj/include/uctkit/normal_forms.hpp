#pragma once

#include "uctkit/int_matrix.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace uctkit {

/// U*A*V = D with U, V unimodular and D diagonal, nonnegative,
/// d1 | d2 | ... , zeros last. D is the canonical Smith form.
struct SmithForm {
    IntMatrix u, d, v;
    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (d.at(i, i) != 0) f.push_back(d.at(i, i));
        return f;
    }
};

namespace detail {

// Floor division; remainder lands in [0, |b|).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

// Pivot = smallest nonzero |entry| in the trailing submatrix, ties broken by
// lowest row then lowest column. Deterministic, so transforms are reproducible.
inline bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            const Int& x = d.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& a) {
    std::size_t r = a.rows(), c = a.cols();
    SmithForm s{IntMatrix::identity(r), a, IntMatrix::identity(c)};
    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& v = s.v;

    std::size_t n = std::min(r, c);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pi, pj;
        if (!detail::find_pivot(d, k, pi, pj)) break;
        d.swap_rows(k, pi);
        u.swap_rows(k, pi);
        d.swap_cols(k, pj);
        v.swap_cols(k, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < r; ++i) {
                if (d.at(i, k) == 0) continue;
                Int q = d.at(i, k) / d.at(k, k);
                if (q != 0)
                    for (std::size_t j = 0; j < c; ++j) d.at(i, j) -= q * d.at(k, j);
                for (std::size_t j = 0; j < r; ++j) u.at(i, j) -= q * u.at(k, j);
                if (d.at(i, k) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < c; ++j) {
                if (d.at(k, j) == 0) continue;
                Int q = d.at(k, j) / d.at(k, k);
                if (q != 0)
                    for (std::size_t i = 0; i < r; ++i) d.at(i, j) -= q * d.at(i, k);
                for (std::size_t i = 0; i < c; ++i) v.at(i, j) -= q * v.at(i, k);
                if (d.at(k, j) != 0) clean = false;
            }
            if (clean) {
                // Divisibility fix-up: d_k must divide the trailing block.
                bool fixed = true;
                for (std::size_t i = k + 1; i < r && fixed; ++i)
                    for (std::size_t j = k + 1; j < c && fixed; ++j)
                        if (d.at(i, j) % d.at(k, k) != 0) {
                            for (std::size_t t = 0; t < c; ++t) d.at(k, t) += d.at(i, t);
                            for (std::size_t t = 0; t < r; ++t) u.at(k, t) += u.at(i, t);
                            fixed = false;
                        }
                if (fixed) break;
            }
            std::size_t qi, qj;
            detail::find_pivot(d, k, qi, qj);
            d.swap_rows(k, qi);
            u.swap_rows(k, qi);
            d.swap_cols(k, qj);
            v.swap_cols(k, qj);
        }
        if (d.at(k, k) < 0) {
            for (std::size_t j = 0; j < c; ++j) d.at(k, j) = -d.at(k, j);
            for (std::size_t j = 0; j < r; ++j) u.at(k, j) = -u.at(k, j);
        }
    }
    return s;
}

/// Row Hermite normal form: returns H = U*A, U unimodular, H in upper row
/// echelon with positive pivots and entries above each pivot in [0, pivot).
/// Unique for the row lattice of A.
inline IntMatrix row_hermite(const IntMatrix& a, IntMatrix* transform = nullptr) {
    std::size_t r = a.rows(), c = a.cols();
    IntMatrix h = a;
    IntMatrix u = IntMatrix::identity(r);
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = row; i < r; ++i) {
                if (h.at(i, col) == 0) continue;
                if (best == r || abs(h.at(i, col)) < abs(h.at(best, col))) best = i;
            }
            if (best == r) break;
            h.swap_rows(row, best);
            u.swap_rows(row, best);
            bool clean = true;
            for (std::size_t i = row + 1; i < r; ++i) {
                if (h.at(i, col) == 0) continue;
                Int q = h.at(i, col) / h.at(row, col);
                if (q != 0) {
                    for (std::size_t j = 0; j < c; ++j) h.at(i, j) -= q * h.at(row, j);
                    for (std::size_t j = 0; j < r; ++j) u.at(i, j) -= q * u.at(row, j);
                }
                if (h.at(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, col) == 0) continue;
        if (h.at(row, col) < 0) {
            for (std::size_t j = 0; j < c; ++j) h.at(row, j) = -h.at(row, j);
            for (std::size_t j = 0; j < r; ++j) u.at(row, j) = -u.at(row, j);
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = detail::floor_div(h.at(i, col), h.at(row, col));
            if (q != 0) {
                for (std::size_t j = 0; j < c; ++j) h.at(i, j) -= q * h.at(row, j);
                for (std::size_t j = 0; j < r; ++j) u.at(i, j) -= q * u.at(row, j);
            }
        }
        ++row;
    }
    if (transform) *transform = u;
    return h;
}

/// Column Hermite normal form: H = A*V with V unimodular; the transpose
/// convention of row_hermite. Column lattice of H equals that of A.
inline IntMatrix col_hermite(const IntMatrix& a, IntMatrix* transform = nullptr) {
    IntMatrix ut;
    IntMatrix h = row_hermite(a.transpose(), transform ? &ut : nullptr).transpose();
    if (transform) *transform = ut.transpose();
    return h;
}

/// Canonical generator matrix of the column lattice: column HNF, zero columns
/// dropped. Two matrices generate the same subgroup of Z^n iff these agree.
inline IntMatrix lattice_canonical(const IntMatrix& a) {
    IntMatrix h = col_hermite(a);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool nz = false;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) { nz = true; break; }
        if (nz) keep.push_back(j);
    }
    return h.select_cols(keep);
}

inline bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    return lattice_canonical(a) == lattice_canonical(b);
}

/// Basis of {x : A x = 0} as columns; independent, canonical.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    IntMatrix v;
    IntMatrix h = col_hermite(a, &v);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        bool nz = false;
        for (std::size_t i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) { nz = true; break; }
        if (!nz) zero_cols.push_back(j);
    }
    return lattice_canonical(v.select_cols(zero_cols));
}

/// One integral solution of A x = b, or nullopt if none exists.
inline std::optional<std::vector<Int>> solve(const IntMatrix& a, const std::vector<Int>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    IntMatrix v;
    IntMatrix h = col_hermite(a, &v);
    std::vector<Int> y(h.cols());
    std::vector<Int> rem = b;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        std::size_t p = 0;
        while (p < h.rows() && h.at(p, j) == 0) ++p;
        if (p == h.rows()) break;  // zero column; later ones are zero too
        Int q = rem[p] / h.at(p, j);
        if (rem[p] % h.at(p, j) != 0) return std::nullopt;
        y[j] = q;
        if (q != 0)
            for (std::size_t i = 0; i < h.rows(); ++i) rem[i] -= q * h.at(i, j);
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    return v.mul_vec(y);
}

/// Solutions of A X = B columnwise, or nullopt if some column is unsolvable.
inline std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto s = solve(a, b.col(j));
        if (!s) return std::nullopt;
        x.set_col(j, *s);
    }
    return x;
}

inline bool in_lattice(const IntMatrix& gens, const std::vector<Int>& v) {
    return solve(gens, v).has_value();
}

/// Hermite solve of the spec: one solution plus a kernel basis.
struct HermiteSolveResult {
    std::optional<std::vector<Int>> solution;
    IntMatrix kernel;  // columns form a basis of ker A
};

inline HermiteSolveResult hermite_solve(const IntMatrix& a, const std::vector<Int>& b) {
    return HermiteSolveResult{solve(a, b), kernel_basis(a)};
}

/// Generators (columns) of {x : A x lies in the column lattice of B}.
inline IntMatrix preimage_lattice(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() && b.cols() != 0)
        throw std::invalid_argument("preimage_lattice: row mismatch");
    IntMatrix stacked = a.hstack(b);
    IntMatrix k = kernel_basis(stacked);
    IntMatrix proj = k.submatrix(0, 0, a.cols(), k.cols());
    return lattice_canonical(proj);
}

inline IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
    return lattice_canonical(a.hstack(b));
}

/// Completes the (independent, saturated) columns of B to a basis of Z^n.
/// Returns an n x n unimodular matrix whose first B.cols() columns span the
/// same lattice as B. Throws if B is not a direct summand.
inline IntMatrix complete_to_basis(const IntMatrix& b) {
    std::size_t n = b.rows();
    SmithForm s = smith_normal_form(b);
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (s.d.at(i, i) != 0 && s.d.at(i, i) != 1)
            throw std::invalid_argument("complete_to_basis: columns not saturated");
    // b = u^{-1} d v^{-1}; the first rank columns of u^{-1} span the lattice.
    auto uinv = solve_matrix(s.u, IntMatrix::identity(n));
    if (!uinv) throw std::logic_error("complete_to_basis: transform not invertible");
    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
        if (s.d.at(i, i) != 0) ++rank;
    // Reorder so the lattice columns come first (they already do).
    (void)rank;
    return *uinv;
}

}  // namespace uctkit
