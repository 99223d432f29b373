#pragma once

#include "stokes/rational.hpp"

#include <cassert>
#include <complex>
#include <initializer_list>
#include <vector>

namespace stokes {

template <class T>
bool is_zero_entry(const T& x) { return x == T(0); }

inline bool is_zero_entry(const Rational& x) { return sgn(x) == 0; }

// Dense row-major matrix. T is Rational, double or std::complex<double>.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = static_cast<int>(rows.size());
        c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
        for (const auto& row : rows) {
            assert(static_cast<int>(row.size()) == c_);
            for (const auto& x : row) a_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix col(int j) const {
        Matrix v(r_, 1);
        for (int i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
        return v;
    }

    Matrix cols_range(int j0, int count) const {
        Matrix v(r_, count);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < count; ++j) v(i, j) = (*this)(i, j0 + j);
        return v;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        assert(a.r_ == b.r_ && a.c_ == b.c_);
        Matrix s = a;
        for (size_t k = 0; k < s.a_.size(); ++k) s.a_[k] += b.a_[k];
        return s;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        assert(a.r_ == b.r_ && a.c_ == b.c_);
        Matrix s = a;
        for (size_t k = 0; k < s.a_.size(); ++k) s.a_[k] -= b.a_[k];
        return s;
    }

    friend Matrix operator*(const T& x, const Matrix& a) {
        Matrix s = a;
        for (auto& e : s.a_) e *= x;
        return s;
    }

    // Skips zero entries of the left factor; companion and banded
    // matrices are mostly zero.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.c_ == b.r_);
        Matrix p(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero_entry(x)) continue;
                for (int j = 0; j < b.c_; ++j) p(i, j) += x * b(k, j);
            }
        return p;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<T>& data() const { return a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using MatrixQ = Matrix<Rational>;
using MatrixD = Matrix<double>;
using MatrixC = Matrix<std::complex<double>>;

template <class T>
Matrix<T> power(const Matrix<T>& m, int e) {
    Matrix<T> r = Matrix<T>::identity(m.rows());
    for (int i = 0; i < e; ++i) r = m * r;
    return r;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

template <class T>
bool is_unit_upper_triangular(const Matrix<T>& s) {
    if (!s.square()) return false;
    for (int i = 0; i < s.rows(); ++i) {
        if (!(s(i, i) == T(1))) return false;
        for (int j = 0; j < i; ++j)
            if (!is_zero_entry(s(i, j))) return false;
    }
    return true;
}

inline MatrixD to_double(const MatrixQ& m) {
    MatrixD d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
    return d;
}

inline MatrixC to_complex(const MatrixD& m) {
    MatrixC c(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
    return c;
}

}  // namespace stokes
