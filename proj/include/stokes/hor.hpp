#pragma once

#include "stokes/irrtype.hpp"
#include "stokes/linalg.hpp"
#include "stokes/number.hpp"
#include "stokes/poly.hpp"
#include "stokes/polycore.hpp"
#include "stokes/spectra.hpp"

#include <optional>
#include <random>
#include <vector>

namespace stokes {

// A point of the scalar HOR family. beta is nondecreasing in [0,1];
// beta = 1 stays 1 and maps to kappa = 1.
struct HorScal {
    int k = 1;
    std::vector<Number> beta;

    int n() const { return static_cast<int>(beta.size()); }
    bool exact() const;
};

// Throws NotInFamily when the ordering or the k-symmetry fails.
void validate(const HorScal& b);

// gamma_j = (j - k/2)/n
HorScal gamma_base(int k, int n);

// Exact when the angles are rational and Galois closed (a product of
// cyclotomic polynomials), nothing otherwise.
std::optional<PolyQ> scal_to_poly_exact(const HorScal& b);
PolyD scal_to_poly_numeric(const HorScal& b);

// Places the roots at 1 at both ends according to k; n is the degree.
HorScal scal_from_angles(const AngleMultiset& angles, int k, int n);

HorScal poly_to_scal(const PolyQ& p, int k);
HorScal poly_to_scal(const PolyD& p, int k, double tol = 1e-9);

template <class T>
struct HorMatrixT {
    int k = 1;
    Poly<T> p;
    Matrix<T> S;
    int n() const { return p.degree(); }
};

using HorMatrixQ = HorMatrixT<Rational>;
using HorMatrixD = HorMatrixT<double>;

// Banded unit upper triangular matrix with S_ij = p_{n-(j-i)}.
template <class T>
Matrix<T> banded_matrix(const Poly<T>& p) {
    int n = p.degree();
    Matrix<T> s = Matrix<T>::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s(i, j) = p[n - (j - i)];
    return s;
}

HorMatrixQ poly_to_matrix(const PolyQ& p, int k);
HorMatrixD poly_to_matrix(const PolyD& p, int k, double tol = 1e-9);

// Recognizes a banded matrix of either family.
std::optional<HorMatrixQ> hor_from_matrix(const MatrixQ& s);
std::optional<HorMatrixD> hor_from_matrix(const MatrixD& s, double tol = 1e-9);

template <class T>
Matrix<T> r_matrix(const HorMatrixT<T>& h) {
    return companion_matrix(h.p);
}

std::vector<Number> recipe_spectrum(const HorScal& b);

struct KappaGroup {
    Number kappa;               // angle in [0,1)
    std::vector<int> indices;   // 0-based positions j with exp(-2 pi i beta_j) = kappa
    SppLadder ladder;
};

// Throws NotArithmeticGroup when a group is not an arithmetic progression.
std::vector<KappaGroup> recipe_groups(const HorScal& b);
Spp recipe_spectral_pairs(const HorScal& b);

// Witness ordering alpha_1..alpha_n when one exists.
std::optional<std::vector<Number>> is_realizable_spectrum(std::vector<Number> candidate, int n, int k);

// Largest gap between size-sorted consecutive spectral numbers.
Number max_gap(std::vector<Number> spectrum);

// ((-1)^n p(-x), k~) with k~ = k + n mod 2.
std::pair<PolyQ, int> negate_poly_transform(const PolyQ& p, int k);
std::pair<PolyD, int> negate_poly_transform(const PolyD& p, int k);

struct PowerIdentity {
    bool power_ok = false;     // (-1)^k S^{-1} S^t = R^n
    bool respects_ok = false;  // R^t S^t R = S^t
    MatrixD power_residual;
    MatrixD respects_residual;
    bool ok() const { return power_ok && respects_ok; }
};

PowerIdentity verify_power_identity(const HorMatrixQ& h);
PowerIdentity verify_power_identity(const HorMatrixD& h, double tol = 1e-8);

template <class T>
struct PlFactors {
    std::vector<Matrix<T>> factors;
    bool ok = false;
};

PlFactors<Rational> pl_factor_product(const MatrixQ& s, int k);
PlFactors<double> pl_factor_product(const MatrixD& s, int k, double tol = 1e-8);

struct EnhancementEntry {
    Number kappa;            // angle in [0,1)
    SppLadder ladder;
    TypeList types;          // irreducible summands attributed to this entry
    bool representative;     // counts the types once per conjugate pair
    bool phase_ok = false;
    double phase_error = 0;  // radians
};

// One entry per eigenvalue of R. Throws PhaseViolation when the phase
// law fails.
std::vector<EnhancementEntry> hor_enhancement(const HorScal& b, bool throw_on_violation = true);
TypeList enhancement_types(const std::vector<EnhancementEntry>& e);

struct SignaturePair {
    Inertia predicted;
    Inertia computed;
    double margin = 0;  // numeric only: smallest |eigenvalue| of the form over its largest entry
    bool agree() const { return predicted == computed; }
};

SignaturePair is_signature(const HorScal& b, const MatrixQ& s);
SignaturePair is_signature(const HorScal& b, const MatrixD& s, double tol = 1e-6);

struct DualBasis {
    MatrixQ matrix;
    bool shape_ok = false;
};

DualBasis dual_basis_matrix(const HorMatrixQ& h);

// ---- sampling ----

// Uniform point of the family through the simplex parametrization.
HorScal random_hor_scal(int n, int k, std::mt19937_64& rng);
// Random product of cyclotomic polynomials of degree n in the family k.
PolyQ random_cyclotomic_hor(int n, int k, std::mt19937_64& rng);

}  // namespace stokes
