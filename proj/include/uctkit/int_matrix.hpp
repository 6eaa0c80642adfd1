#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace uctkit {

using Int = boost::multiprecision::cpp_int;

/// Dense matrix over Z with arbitrary-precision entries, row-major.
/// All arithmetic is exact; dimension mismatches throw std::invalid_argument.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw std::invalid_argument("IntMatrix: entries length != rows*cols");
    }

    /// Row-of-rows literal, convenient in tests: IntMatrix::of({{2,4},{6,8}}).
    static IntMatrix of(std::initializer_list<std::initializer_list<long long>> data) {
        std::size_t r = data.size();
        std::size_t c = r == 0 ? 0 : data.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : data) {
            if (row.size() != c) throw std::invalid_argument("IntMatrix::of: ragged rows");
            std::size_t j = 0;
            for (long long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

    static IntMatrix col_vector(const std::vector<Int>& v) {
        IntMatrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
        return m;
    }

    static IntMatrix diagonal(const std::vector<Int>& d) {
        IntMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<Int>& entries() const { return a_; }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::mul: dimension mismatch");
        IntMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = at(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += x * o.at(k, j);
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix::add: dimension mismatch");
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
        return s;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix::sub: dimension mismatch");
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
        return s;
    }

    IntMatrix operator*(const Int& c) const {
        IntMatrix s(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] * c;
        return s;
    }

    IntMatrix operator-() const { return *this * Int(-1); }

    std::vector<Int> mul_vec(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("IntMatrix::mul_vec: dimension mismatch");
        std::vector<Int> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    void set_col(std::size_t j, const std::vector<Int>& v) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    /// Columns of `o` appended on the right.
    IntMatrix hstack(const IntMatrix& o) const {
        if (rows_ != o.rows_ && cols_ != 0 && o.cols_ != 0)
            throw std::invalid_argument("IntMatrix::hstack: row mismatch");
        std::size_t r = cols_ == 0 ? o.rows_ : rows_;
        IntMatrix m(r, cols_ + o.cols_);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
        }
        return m;
    }

    IntMatrix vstack(const IntMatrix& o) const {
        if (cols_ != o.cols_ && rows_ != 0 && o.rows_ != 0)
            throw std::invalid_argument("IntMatrix::vstack: col mismatch");
        std::size_t c = rows_ == 0 ? o.cols_ : cols_;
        IntMatrix m(rows_ + o.rows_, c);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(rows_ + i, j) = o.at(i, j);
        return m;
    }

    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        IntMatrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
        return m;
    }

    IntMatrix select_cols(const std::vector<std::size_t>& idx) const {
        IntMatrix m(rows_, idx.size());
        for (std::size_t j = 0; j < idx.size(); ++j)
            for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
        return m;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            s += i == 0 ? "[" : " [";
            for (std::size_t j = 0; j < cols_; ++j) {
                s += at(i, j).str();
                if (j + 1 < cols_) s += ",";
            }
            s += "]";
            if (i + 1 < rows_) s += "\n";
        }
        return s + "]";
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) return false;
    Int d = det(m);
    return d == 1 || d == -1;
}

}  // namespace uctkit
