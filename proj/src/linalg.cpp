#include "stokes/linalg.hpp"
#include "stokes/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace stokes {

std::string Inertia::str() const {
    return "(" + std::to_string(pos) + "," + std::to_string(zero) + "," + std::to_string(neg) + ")";
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(MatrixQ& a) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int p = -1;
        for (int i = row; i < a.rows(); ++i)
            if (sgn(a(i, col)) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (int j = col; j < a.cols(); ++j) a(row, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || sgn(a(i, col)) == 0) continue;
            Rational f = a(i, col);
            for (int j = col; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

Eigen::MatrixXd to_eigen(const MatrixD& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

Eigen::MatrixXcd to_eigen(const MatrixC& m) {
    Eigen::MatrixXcd e(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

template <class E>
double scale_of(const E& e) {
    double s = 0;
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j) s = std::max(s, std::abs(e(i, j)));
    return std::max(s, 1.0);
}

}  // namespace

int rank(const MatrixQ& a) {
    MatrixQ b = a;
    return static_cast<int>(rref(b).size());
}

MatrixQ nullspace(const MatrixQ& a) {
    MatrixQ b = a;
    auto piv = rref(b);
    std::vector<bool> is_piv(a.cols(), false);
    for (int c : piv) is_piv[c] = true;
    int dim = a.cols() - static_cast<int>(piv.size());
    MatrixQ ns(a.cols(), dim);
    int k = 0;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_piv[free]) continue;
        ns(free, k) = 1;
        for (size_t r = 0; r < piv.size(); ++r) ns(piv[r], k) = -b(static_cast<int>(r), free);
        ++k;
    }
    return ns;
}

MatrixQ column_basis(const MatrixQ& a) {
    MatrixQ b = a;
    auto piv = rref(b);
    MatrixQ out(a.rows(), static_cast<int>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) out(i, static_cast<int>(k)) = a(i, piv[k]);
    return out;
}

MatrixQ hconcat(const MatrixQ& a, const MatrixQ& b) {
    int rows = std::max(a.rows(), b.rows());
    MatrixQ m(rows, a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    return m;
}

MatrixQ intersect_spans(const MatrixQ& u, const MatrixQ& v) {
    MatrixQ uv = hconcat(u, Rational(-1) * v);
    MatrixQ ns = nullspace(uv);
    MatrixQ w(u.rows(), ns.cols());
    for (int k = 0; k < ns.cols(); ++k)
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j) w(i, k) += u(i, j) * ns(j, k);
    return column_basis(w);
}

MatrixQ inverse(const MatrixQ& a) {
    if (!a.square()) fail("Singular", "inverse of a non-square matrix");
    int n = a.rows();
    MatrixQ aug = hconcat(a, MatrixQ::identity(n));
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) fail("Singular", "matrix is not invertible");
    return aug.cols_range(n, n);
}

MatrixQ inverse_unit_upper(const MatrixQ& s) {
    int n = s.rows();
    MatrixQ x = MatrixQ::identity(n);
    // Back substitution column by column: S X = E.
    for (int j = 0; j < n; ++j)
        for (int i = j - 1; i >= 0; --i) {
            Rational acc = 0;
            for (int k = i + 1; k <= j; ++k)
                if (sgn(s(i, k)) != 0) acc += s(i, k) * x(k, j);
            x(i, j) = -acc;
        }
    return x;
}

PolyQ charpoly(const MatrixQ& a) {
    int n = a.rows();
    MatrixQ h = a;
    for (int j = 0; j + 2 < n; ++j) {
        int p = -1;
        for (int i = j + 1; i < n; ++i)
            if (sgn(h(i, j)) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != j + 1) {
            for (int c = 0; c < n; ++c) std::swap(h(p, c), h(j + 1, c));
            for (int r = 0; r < n; ++r) std::swap(h(r, p), h(r, j + 1));
        }
        for (int r = j + 2; r < n; ++r) {
            if (sgn(h(r, j)) == 0) continue;
            Rational t = h(r, j) / h(j + 1, j);
            for (int c = 0; c < n; ++c) h(r, c) -= t * h(j + 1, c);
            for (int c = 0; c < n; ++c) h(c, j + 1) += t * h(c, r);
        }
    }
    std::vector<PolyQ> p(n + 1);
    p[0] = PolyQ::constant(1);
    for (int m = 1; m <= n; ++m) {
        PolyQ x_minus = PolyQ({Rational(-h(m - 1, m - 1)), Rational(1)});
        PolyQ acc = x_minus * p[m - 1];
        Rational prod = 1;
        for (int i = m - 1; i >= 1; --i) {
            prod *= h(i, i - 1);
            if (sgn(prod) == 0) break;
            acc = acc - Rational(prod * h(i - 1, m - 1)) * p[i - 1];
        }
        p[m] = acc;
    }
    return p[n];
}

Inertia inertia(const MatrixQ& sym) {
    int n = sym.rows();
    MatrixQ a = sym;
    Inertia res;
    auto swap_rc = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
        for (int r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    };
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (sgn(a(i, i)) != 0) { p = i; break; }
        if (p < 0) {
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (sgn(a(i, j)) != 0) { pi = i; pj = j; break; }
            if (pi < 0) {
                res.zero += n - k;
                return res;
            }
            for (int c = 0; c < n; ++c) a(pi, c) += a(pj, c);
            for (int r = 0; r < n; ++r) a(r, pi) += a(r, pj);
            p = pi;
        }
        swap_rc(p, k);
        Rational d = a(k, k);
        (sgn(d) > 0 ? res.pos : res.neg)++;
        for (int r = k + 1; r < n; ++r) {
            if (sgn(a(r, k)) == 0) continue;
            Rational t = a(r, k) / d;
            for (int c = k + 1; c < n; ++c) a(r, c) -= t * a(k, c);
        }
        for (int r = k + 1; r < n; ++r) a(r, k) = a(k, r) = 0;
    }
    return res;
}

// ---- numeric ----

int rank(const MatrixD& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a));
    double s = scale_of(to_eigen(a));
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol * s) ++r;
    return r;
}

int rank(const MatrixC& a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    auto e = to_eigen(a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e);
    double s = scale_of(e);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol * s) ++r;
    return r;
}

MatrixD nullspace(const MatrixD& a, double tol) {
    auto e = to_eigen(a);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullV);
    int r = rank(a, tol);
    int dim = a.cols() - r;
    MatrixD ns(a.cols(), dim);
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < a.cols(); ++i) ns(i, k) = svd.matrixV()(i, r + k);
    return ns;
}

MatrixD nullspace(const MatrixD& a, int dim) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullV);
    MatrixD ns(a.cols(), dim);
    int r = a.cols() - dim;
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < a.cols(); ++i) ns(i, k) = svd.matrixV()(i, r + k);
    return ns;
}

MatrixC nullspace(const MatrixC& a, int dim) {
    auto e = to_eigen(a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeFullV);
    MatrixC ns(a.cols(), dim);
    int r = a.cols() - dim;
    for (int k = 0; k < dim; ++k)
        for (int i = 0; i < a.cols(); ++i) ns(i, k) = svd.matrixV()(i, r + k);
    return ns;
}

MatrixD range_basis(const MatrixD& a, int dim) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(a), Eigen::ComputeFullU);
    MatrixD b(a.rows(), dim);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < dim; ++j) b(i, j) = svd.matrixU()(i, j);
    return b;
}

MatrixC range_basis(const MatrixC& a, int dim) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(a), Eigen::ComputeFullU);
    MatrixC b(a.rows(), dim);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < dim; ++j) b(i, j) = svd.matrixU()(i, j);
    return b;
}

MatrixD inverse(const MatrixD& a) {
    auto e = to_eigen(a);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
    if (!lu.isInvertible()) fail("Singular", "matrix is not invertible");
    Eigen::MatrixXd inv = lu.inverse();
    MatrixD out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = inv(i, j);
    return out;
}

std::vector<std::complex<double>> eigenvalues(const MatrixD& a) {
    if (a.rows() == 0) return {};
    Eigen::EigenSolver<Eigen::MatrixXd> es(to_eigen(a), false);
    std::vector<std::complex<double>> ev;
    for (int i = 0; i < es.eigenvalues().size(); ++i) ev.push_back(es.eigenvalues()(i));
    return ev;
}

Inertia inertia(const MatrixD& sym, double tol) {
    Inertia res;
    if (sym.rows() == 0) return res;
    auto e = to_eigen(sym);
    Eigen::MatrixXd s = 0.5 * (e + e.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
    double sc = scale_of(s);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double v = es.eigenvalues()(i);
        if (v > tol * sc) ++res.pos;
        else if (v < -tol * sc) ++res.neg;
        else ++res.zero;
    }
    return res;
}

Inertia inertia_hermitian(const MatrixC& h, double tol) {
    Inertia res;
    if (h.rows() == 0) return res;
    auto e = to_eigen(h);
    Eigen::MatrixXcd s = 0.5 * (e + e.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s, Eigen::EigenvaluesOnly);
    double sc = scale_of(s);
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double v = es.eigenvalues()(i);
        if (v > tol * sc) ++res.pos;
        else if (v < -tol * sc) ++res.neg;
        else ++res.zero;
    }
    return res;
}

MatrixC conj(const MatrixC& a) {
    MatrixC c = a;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
    return c;
}

}  // namespace stokes
