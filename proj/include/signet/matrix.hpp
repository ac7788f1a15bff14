#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "ratfunc.hpp"

namespace signet {

// Exact quotient in an integral domain: a/b with b | a.
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }
inline RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) { return a / b; }
inline CycNumber exact_quotient(const CycNumber& a, const CycNumber& b) { return a / b; }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c, T(0)) {}
    Matrix(size_t r, size_t c, const T& fill) : r_(r), c_(c), a_(r * c, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        for (const auto& row : rows) {
            require(row.size() == c_, "ragged_matrix", "matrix rows differ in length");
            for (const auto& x : row) a_.push_back(x);
        }
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (size_t i = 0; i < m.r_; ++i) {
            require(rows[i].size() == m.c_, "ragged_matrix", "matrix rows differ in length");
            for (size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix diagonal(const std::vector<T>& d) {
        Matrix m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }
    T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
    const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix adjoint() const {
        Matrix t(c_, r_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t(j, i) = conj((*this)(i, j));
        return t;
    }
    Matrix block(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Matrix b(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }
    void set_block(size_t r0, size_t c0, const Matrix& b) {
        for (size_t i = 0; i < b.r_; ++i)
            for (size_t j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
    Matrix column(size_t j) const { return block(0, j, r_, 1); }
    Matrix columns(const std::vector<size_t>& idx) const {
        Matrix m(r_, idx.size());
        for (size_t i = 0; i < r_; ++i)
            for (size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
        return m;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!signet::is_zero(x)) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m(*this);
        for (auto& x : m.a_) x = -x;
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, "dimension_mismatch", "matrix sum shape mismatch");
        Matrix m(a);
        for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.c_ == b.r_, "dimension_mismatch", "matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (size_t i = 0; i < a.r_; ++i)
            for (size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (signet::is_zero(x)) continue;
                for (size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator*(const T& s, const Matrix& b) {
        Matrix m(b);
        for (auto& x : m.a_) x = s * x;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    template <class F>
    auto map(F f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> m(r_, c_);
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
        return m;
    }

private:
    size_t r_ = 0, c_ = 0;
    std::vector<T> a_;
};

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    require(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0, "dimension_mismatch",
            "hconcat row mismatch");
    size_t r = a.cols() ? a.rows() : b.rows();
    Matrix<T> m(r, a.cols() + b.cols());
    if (a.cols()) m.set_block(0, 0, a);
    if (b.cols()) m.set_block(0, a.cols(), b);
    return m;
}

template <class T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
    require(a.cols() == b.cols(), "dimension_mismatch", "vconcat column mismatch");
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

// Fraction-free determinant with row pivoting; valid over any integral domain.
template <class T>
T det_bareiss(Matrix<T> m) {
    require(m.square(), "not_square", "determinant of a non-square matrix");
    size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m(k, k))) {
            size_t p = k + 1;
            while (p < n && is_zero(m(p, k))) ++p;
            if (p == n) return T(0);
            for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return neg ? -d : d;
}

template <class T>
T det(const Matrix<T>& m) {
    return det_bareiss(m);
}

// Leading principal minors mu_0 = 1, ..., mu_n.
template <class T>
std::vector<T> principal_minors(const Matrix<T>& m) {
    require(m.square(), "not_square", "principal minors need a square matrix");
    std::vector<T> mu{T(1)};
    for (size_t k = 1; k <= m.rows(); ++k) mu.push_back(det_bareiss(m.block(0, 0, k, k)));
    return mu;
}

// Row reduced echelon form over a field; returns pivot columns.
template <class T>
std::vector<size_t> rref_in_place(Matrix<T>& m) {
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        T inv = T(1) / m(r, c);
        for (size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class T>
size_t rank(Matrix<T> m) {
    return rref_in_place(m).size();
}

// Columns spanning the right kernel.
template <class T>
Matrix<T> kernel(Matrix<T> m) {
    size_t n = m.cols();
    auto piv = rref_in_place(m);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<size_t> free;
    for (size_t c = 0; c < n; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix<T> k(n, free.size());
    for (size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = T(1);
        for (size_t r = 0; r < piv.size(); ++r) k(piv[r], f) = -m(r, free[f]);
    }
    return k;
}

// Canonical basis of the column span: reduced column echelon form.
template <class T>
Matrix<T> column_echelon(const Matrix<T>& m) {
    Matrix<T> t = m.transpose();
    size_t r = rref_in_place(t).size();
    return t.block(0, 0, r, t.cols()).transpose();
}

template <class T>
bool same_span(const Matrix<T>& a, const Matrix<T>& b) {
    return column_echelon(a) == column_echelon(b);
}

// Columns of the intersection of two column spans.
template <class T>
Matrix<T> intersect_spans(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> ab = hconcat(a, -b);
    Matrix<T> k = kernel(ab);
    Matrix<T> x = a * k.block(0, 0, a.cols(), k.cols());
    return column_echelon(x);
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
    require(m.square(), "not_square", "inverse of a non-square matrix");
    size_t n = m.rows();
    Matrix<T> aug = hconcat(m, Matrix<T>::identity(n));
    auto piv = rref_in_place(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

// Solves m x = b for one solution, if any.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& m, const Matrix<T>& b) {
    Matrix<T> aug = hconcat(m, b);
    auto piv = rref_in_place(aug);
    for (auto c : piv)
        if (c >= m.cols()) return std::nullopt;
    Matrix<T> x(m.cols(), b.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, m.cols() + j);
    return x;
}

template <class T>
bool is_hermitian(const Matrix<T>& m, int eps = 1) {
    if (!m.square()) return false;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = i; j < m.cols(); ++j) {
            T c = conj(m(j, i));
            if (eps < 0) c = -c;
            if (!(m(i, j) == c)) return false;
        }
    return true;
}

}  // namespace signet
