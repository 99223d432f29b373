#pragma once

#include "stokes/matrix.hpp"
#include "stokes/poly.hpp"

#include <complex>
#include <string>
#include <vector>

namespace stokes {

struct Inertia {
    int pos = 0, zero = 0, neg = 0;
    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.pos == b.pos && a.zero == b.zero && a.neg == b.neg;
    }
    friend bool operator!=(const Inertia& a, const Inertia& b) { return !(a == b); }
    Inertia& operator+=(const Inertia& o) {
        pos += o.pos; zero += o.zero; neg += o.neg;
        return *this;
    }
    std::string str() const;
};

// ---- exact ----
int rank(const MatrixQ& a);
// Columns form a basis of {x : a x = 0}.
MatrixQ nullspace(const MatrixQ& a);
// A maximal independent subset of the columns of a.
MatrixQ column_basis(const MatrixQ& a);
MatrixQ inverse(const MatrixQ& a);
MatrixQ inverse_unit_upper(const MatrixQ& s);
PolyQ charpoly(const MatrixQ& a);
// Sylvester inertia of a symmetric matrix by congruence diagonalization.
Inertia inertia(const MatrixQ& sym);
// Basis (columns) of the intersection of two column spans.
MatrixQ intersect_spans(const MatrixQ& u, const MatrixQ& v);
MatrixQ hconcat(const MatrixQ& a, const MatrixQ& b);

// ---- numeric ----
constexpr double kRankTol = 1e-8;

int rank(const MatrixD& a, double tol = kRankTol);
int rank(const MatrixC& a, double tol = kRankTol);
MatrixD nullspace(const MatrixD& a, double tol = kRankTol);
// Orthonormal basis of the d-dimensional approximate kernel.
MatrixD nullspace(const MatrixD& a, int dim);
MatrixC nullspace(const MatrixC& a, int dim);
MatrixD inverse(const MatrixD& a);
// Orthonormal basis of the span of the dim leading left singular vectors.
MatrixD range_basis(const MatrixD& a, int dim);
MatrixC range_basis(const MatrixC& a, int dim);
std::vector<std::complex<double>> eigenvalues(const MatrixD& a);
Inertia inertia(const MatrixD& sym, double tol = 1e-6);
Inertia inertia_hermitian(const MatrixC& h, double tol = 1e-6);

MatrixC conj(const MatrixC& a);

}  // namespace stokes
