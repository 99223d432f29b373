#pragma once

#include "stokes/linalg.hpp"
#include "stokes/number.hpp"

#include <complex>
#include <string>
#include <vector>

namespace stokes {

enum class Family { F1, F2real, F2complex, F2hyper, F4hyper };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Irreducible Seifert form pair Seif(lambda, ., n, .). On-circle eigenvalues
// are stored as angles: lambda = exp(-2 pi i * angle).
struct IrrType {
    Family family = Family::F1;
    Number lambda;                   // angle in [0,1)
    std::complex<double> lambda_c;   // eigenvalue for the hyperbolic families
    int size = 1;
    int eps = 0;                     // F1 only
    Number zeta;                     // angle, F2complex only

    static IrrType f1(int lambda_sign, int size, int eps);
    static IrrType f2real(int lambda_sign, int size);
    // Normalizes to the representative with Im lambda < 0.
    static IrrType f2complex(const Number& lambda_angle, int size, const Number& zeta_angle);
    static IrrType hyperbolic(std::complex<double> lambda, int size);

    // lambda as +1 / -1 for F1 and F2real.
    int lambda_sign() const;
    // Checks the invariants of the family (parity, zeta^2 relation).
    bool valid() const;
    std::string str() const;
};

bool operator==(const IrrType& a, const IrrType& b);
inline bool operator!=(const IrrType& a, const IrrType& b) { return !(a == b); }

// Circular comparison of angles modulo 1.
bool angles_equal(const Number& a, const Number& b, double tol = 1e-7);

using TypeList = std::vector<IrrType>;

void sort_types(TypeList& t);
bool same_types(TypeList a, TypeList b);
std::string types_str(TypeList t);

// Signature of I_s on one irreducible summand.
Inertia type_signature(const IrrType& t);
int type_dimension(const IrrType& t);

}  // namespace stokes
