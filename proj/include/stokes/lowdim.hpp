#pragma once

#include "stokes/irrtype.hpp"
#include "stokes/number.hpp"
#include "stokes/poly.hpp"
#include "stokes/spectra.hpp"

#include <array>
#include <string>
#include <vector>

namespace stokes {

// S(a) = ((1,a1,a3),(0,1,a2),(0,0,1))
using T3Point = std::array<Number, 3>;

enum class Stratum3 {
    Identity,
    InteriorPos,
    BoundaryPosSphere,
    Exceptional,
    BoundaryIndCone,
    InteriorInd,
    Jordan3Boundary,
    Outside
};

std::string stratum_name(Stratum3 s);

Number f3(const T3Point& a);
bool member3(const T3Point& a);

MatrixQ s3_matrix(const std::array<Rational, 3>& a);
MatrixD s3_matrix(const std::array<double, 3>& a);

struct Class3 {
    Stratum3 stratum = Stratum3::Outside;
    Number f;
    TypeList types;          // empty outside T(3,R)
    std::vector<Number> charpoly;  // coefficients of (x-1)(x^2-(f-2)x+1), low to high
    Inertia is_signature;    // of S + S^t
    bool charpoly_ok = false;  // agrees with the monodromy
};

// Floats use tol for the boundary tests f = 0 and f = 4.
Class3 classify3(const T3Point& a, double tol = 1e-9);

// theta in [0,1/2] with cos(2 pi theta) = c, exact at the rational values.
Number cos_angle(const Number& c);

struct Solve2 {
    Number beta1;
    Number alpha1;
    Spp spp;
    TypeList types;
};

// Throws OutOfT when |a| > 2.
Solve2 solve2(const Number& a);

struct Line3 {
    std::vector<Number> beta;
    std::vector<Number> alpha;
    Spp spp;
};

// Point S(p1,p1,p1) of the first HOR family; throws OutOfFamily unless
// p1 lies in [-1,3].
Line3 hor1_line3(const Number& p1);

}  // namespace stokes
