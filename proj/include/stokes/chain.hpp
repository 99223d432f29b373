#pragma once

#include "stokes/linalg.hpp"
#include "stokes/number.hpp"
#include "stokes/poly.hpp"
#include "stokes/polycore.hpp"

#include <vector>

namespace stokes {

// f = x_0^{a_0} + x_0 x_1^{a_1} + ... + x_{m-1} x_m^{a_m}
struct ChainSing {
    std::vector<long> a;
    std::vector<long> r;       // r_k = a_0 ... a_k
    std::vector<long> mu;      // mu_k = r_k - mu_{k-1}
    std::vector<Rational> w;   // w_k = mu_{k-1} / r_k
    long milnor = 0;

    int m() const { return static_cast<int>(a.size()) - 1; }
};

// Throws BadExponents.
ChainSing chain_invariants(const std::vector<long>& a);

// rho(a_0..a_{k-1}) = a_0...a_{k-1} - a_1...a_{k-1} + ... + (-1)^k
long rho(const std::vector<long>& a);

struct StokesPoly {
    PolyQ p;
    int k = 1;
    AngleMultiset angles;  // delta / r_m, all simple
};

StokesPoly stokes_poly(const std::vector<long>& a);

// Spectrum from the generating function of the weights; throws BadWeights
// unless every weight lies in (0,1).
std::vector<Rational> qh_spectrum(const std::vector<Rational>& w);

using Monomial = std::vector<int>;

Rational weighted_degree(const Monomial& b, const std::vector<Rational>& w);

// Throws ReductionRequired unless a_0 >= 3 and a_j >= 2.
std::vector<Monomial> jacobi_basis(const std::vector<long>& a);
std::vector<Rational> spectrum_from_basis(const std::vector<long>& a);

// Exponent vector of the Laurent monomial g(j).
std::vector<int> chain_step(const std::vector<long>& a, int j);

struct ChainGraph {
    std::vector<Monomial> vertices;   // in chain order
    std::vector<int> labels;          // labels[i] joins vertices i and i+1
    std::vector<Rational> increments; // weighted degree of each edge
};

// Throws ChainBroken.
ChainGraph chain_graph(const std::vector<long>& a);

// Spectrum of the Stokes matrix, in the order of the recipe.
std::vector<Rational> stokes_spectrum(const std::vector<long>& a);

struct ShiftReport {
    bool holds = false;
    std::vector<Rational> sp_stokes;  // recipe order
    std::vector<Rational> sp_f;       // ascending
    Rational shift;                   // (m-1)/2
    bool chain_order_ok = false;      // only checked when the basis route applies
    bool basis_route = false;
};

ShiftReport verify_spectrum_shift(const std::vector<long>& a);

struct Reduction {
    int suspensions = 0;
    Rational shift;  // Sp(reduced) = Sp(f) + shift
    std::vector<long> reduced;
};

// Throws NotReducible when an exponent 1 sits where no reduction applies.
Reduction reduce_chain(const std::vector<long>& a);

template <class T>
struct TensorResult {
    Matrix<T> S;
    bool monodromy_ok = false;
};

TensorResult<Rational> thom_sebastiani(const MatrixQ& s1, const MatrixQ& s2);
TensorResult<double> thom_sebastiani(const MatrixD& s1, const MatrixD& s2, double tol = 1e-9);

std::vector<Rational> qh_ts_spectrum(const std::vector<Rational>& w1, const std::vector<Rational>& w2);

}  // namespace stokes
