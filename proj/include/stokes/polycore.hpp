#pragma once

#include "stokes/matrix.hpp"
#include "stokes/number.hpp"
#include "stokes/poly.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace stokes {

struct SignedFactor {
    long r;  // factor x^r - 1
    int e;   // exponent +1 or -1
};

struct AngleMult {
    Number angle;  // beta in [0,1), root exp(-2 pi i beta)
    int mult;
    friend bool operator==(const AngleMult& a, const AngleMult& b) {
        return a.angle == b.angle && a.mult == b.mult;
    }
};

// Sorted by angle, angles pairwise distinct.
struct AngleMultiset {
    std::vector<AngleMult> items;

    int total() const;
    bool exact() const;
    // Angles repeated by multiplicity, ascending.
    std::vector<Number> flatten() const;
    static AngleMultiset from_list(std::vector<Number> angles);
    friend bool operator==(const AngleMultiset& a, const AngleMultiset& b) { return a.items == b.items; }
};

PolyQ expand_signed_product(const std::vector<SignedFactor>& factors);

// Inclusion-exclusion over residues modulo the lcm of the r's.
AngleMultiset signed_product_angles(const std::vector<SignedFactor>& factors);

long euler_phi(long d);
PolyQ cyclotomic(long d);

// Factorization into cyclotomic polynomials: list of (d, multiplicity), or
// nothing when p is not such a product.
std::optional<std::vector<std::pair<long, int>>> cyclotomic_factors(const PolyQ& p);

// Exact angles when p is a product of cyclotomic polynomials.
std::optional<AngleMultiset> cyclotomic_angles(const PolyQ& p);

// Exact decision whether every complex root of p lies on S^1.
bool roots_on_unit_circle(const PolyQ& p);

// Squarefree decomposition p = lead * prod s_i^i; entry i-1 holds s_i.
std::vector<PolyQ> squarefree_decomposition(const PolyQ& p);

// Complex roots of a real polynomial (companion eigenvalues).
std::vector<std::complex<double>> numeric_roots(const PolyD& p);

AngleMultiset unit_circle_angles(const PolyQ& p, double tol = 1e-9);
AngleMultiset unit_circle_angles(const PolyD& p, double tol = 1e-9, double cluster_tol = 1e-7);

// Angle of a unit complex number in [0,1), z = exp(-2 pi i beta).
double angle_of(std::complex<double> z);
std::complex<double> unit_from_angle(double beta);

struct PalindromeClass {
    int k = 0;  // 1, 2, or 0 for none
    Number p0;
};

PalindromeClass palindrome_class(const PolyQ& p, double tol = 1e-9);
PalindromeClass palindrome_class(const PolyD& p, double tol = 1e-9);

template <class T>
Matrix<T> companion_matrix(const Poly<T>& p) {
    int n = p.degree();
    Matrix<T> r(n, n);
    for (int j = 0; j < n; ++j) r(0, j) = -p[n - 1 - j];
    for (int i = 1; i < n; ++i) r(i, i - 1) = T(1);
    return r;
}

// Element of Q(zeta_d), zeta_d = exp(-2 pi i / d), stored modulo Phi_d.
class Cyclo {
public:
    Cyclo() : d_(1) {}
    Cyclo(long d, PolyQ c);
    static Cyclo rational(long d, const Rational& q);
    // zeta_d^e
    static Cyclo root(long d, long e);

    long order() const { return d_; }
    bool is_zero() const { return c_.is_zero(); }
    std::complex<double> value() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.d_ == b.d_ && a.c_ == b.c_; }

private:
    long d_;
    PolyQ c_;
};

// Vectors v_0..v_l of a Jordan chain of the companion matrix of p for the
// root kappa; (kappa^{-1} R - E) v_j = j v_{j-1} is verified.
std::vector<std::vector<std::complex<double>>> jordan_chain_vectors(
    const PolyD& p, std::complex<double> kappa, int l, double tol = 1e-9);

// Exact variant for kappa = exp(-2 pi i angle) with rational angle.
std::vector<std::vector<Cyclo>> jordan_chain_vectors(const PolyQ& p, const Rational& angle, int l);

}  // namespace stokes
