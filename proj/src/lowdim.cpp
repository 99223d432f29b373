#include "stokes/lowdim.hpp"
#include "stokes/errors.hpp"
#include "stokes/hor.hpp"
#include "stokes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;

bool all_exact(const T3Point& a) { return a[0].exact() && a[1].exact() && a[2].exact(); }

bool near(const Number& x, const Number& y, double tol) {
    if (x.exact() && y.exact()) return x == y;
    return std::fabs(x.value() - y.value()) <= tol;
}

bool is_exceptional(const T3Point& a, double tol) {
    static const int pts[4][3] = {{2, 2, 2}, {-2, -2, 2}, {-2, 2, -2}, {2, -2, -2}};
    for (const auto& p : pts) {
        bool hit = true;
        for (int i = 0; i < 3; ++i)
            if (!near(a[i], Number(p[i]), tol)) hit = false;
        if (hit) return true;
    }
    return false;
}

Inertia is_inertia(const T3Point& a) {
    if (all_exact(a)) {
        MatrixQ s = s3_matrix(std::array<Rational, 3>{a[0].rational(), a[1].rational(), a[2].rational()});
        return inertia(s + s.transpose());
    }
    MatrixD s = s3_matrix(std::array<double, 3>{a[0].value(), a[1].value(), a[2].value()});
    return inertia(s + s.transpose(), 1e-7);
}

}  // namespace

std::string stratum_name(Stratum3 s) {
    switch (s) {
        case Stratum3::Identity: return "Identity";
        case Stratum3::InteriorPos: return "InteriorPos";
        case Stratum3::BoundaryPosSphere: return "BoundaryPosSphere";
        case Stratum3::Exceptional: return "Exceptional";
        case Stratum3::BoundaryIndCone: return "BoundaryIndCone";
        case Stratum3::InteriorInd: return "InteriorInd";
        case Stratum3::Jordan3Boundary: return "Jordan3Boundary";
        case Stratum3::Outside: return "Outside";
    }
    return "?";
}

Number f3(const T3Point& a) {
    return Number(4) + a[0] * a[1] * a[2] - (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
}

bool member3(const T3Point& a) {
    Number f = f3(a);
    return f >= Number(0) && f <= Number(4);
}

MatrixQ s3_matrix(const std::array<Rational, 3>& a) {
    MatrixQ s = MatrixQ::identity(3);
    s(0, 1) = a[0];
    s(1, 2) = a[1];
    s(0, 2) = a[2];
    return s;
}

MatrixD s3_matrix(const std::array<double, 3>& a) {
    MatrixD s = MatrixD::identity(3);
    s(0, 1) = a[0];
    s(1, 2) = a[1];
    s(0, 2) = a[2];
    return s;
}

Number cos_angle(const Number& c) {
    if (c.exact()) {
        const Rational& q = c.rational();
        if (q == 1) return Number(0);
        if (q == Rational(1, 2)) return Number(Rational(1, 6));
        if (q == 0) return Number(Rational(1, 4));
        if (q == Rational(-1, 2)) return Number(Rational(1, 3));
        if (q == -1) return Number(Rational(1, 2));
    }
    double v = std::clamp(c.value(), -1.0, 1.0);
    return Number(std::acos(v) / (2 * kPi));
}

Class3 classify3(const T3Point& a, double tol) {
    Class3 c;
    c.f = f3(a);
    Number g = c.f - Number(2);
    c.charpoly = {Number(-1), g + Number(1), -(g + Number(1)), Number(1)};
    c.is_signature = is_inertia(a);
    bool zero_a = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
    bool f_is_0 = near(c.f, Number(0), tol);
    bool f_is_4 = near(c.f, Number(4), tol);
    IrrType one = IrrType::f1(1, 1, 1);
    if (zero_a) {
        c.stratum = Stratum3::Identity;
        c.types = {one, one, one};
    } else if (f_is_4) {
        c.stratum = Stratum3::Jordan3Boundary;
        c.types = {IrrType::f1(1, 3, 1)};
    } else if (f_is_0) {
        if (is_exceptional(a, tol)) {
            c.stratum = Stratum3::Exceptional;
            c.types = {one, IrrType::f2real(-1, 1)};
        } else if (c.is_signature == Inertia{2, 1, 0}) {
            c.stratum = Stratum3::BoundaryPosSphere;
            c.types = {one, IrrType::f1(-1, 2, 1)};
        } else {
            c.stratum = Stratum3::BoundaryIndCone;
            c.types = {one, IrrType::f1(-1, 2, -1)};
        }
    } else if (c.f < Number(0) || c.f > Number(4)) {
        c.stratum = Stratum3::Outside;
    } else {
        Number theta = cos_angle(g / Number(2));
        bool pos = c.is_signature == Inertia{3, 0, 0};
        c.stratum = pos ? Stratum3::InteriorPos : Stratum3::InteriorInd;
        Number zeta = -theta / Number(2) + (pos ? Number(0) : Number(Rational(1, 2)));
        c.types = {one, IrrType::f2complex(theta, 1, zeta)};
    }
    sort_types(c.types);
    if (all_exact(a)) {
        MatrixQ s = s3_matrix(std::array<Rational, 3>{a[0].rational(), a[1].rational(), a[2].rational()});
        PolyQ p = charpoly(inverse_unit_upper(s) * s.transpose());
        c.charpoly_ok = true;
        for (int j = 0; j <= 3; ++j)
            if (Number(p[j]) != c.charpoly[j]) c.charpoly_ok = false;
    } else {
        MatrixD s = s3_matrix(std::array<double, 3>{a[0].value(), a[1].value(), a[2].value()});
        MatrixD m = inverse(s) * s.transpose();
        // trace and determinant fix the cubic (x-1)(x^2-(f-2)x+1)
        double tr = m(0, 0) + m(1, 1) + m(2, 2);
        c.charpoly_ok = std::fabs(tr - (c.f.value() - 1)) < 1e-7 * std::max(1.0, std::fabs(tr));
    }
    return c;
}

Solve2 solve2(const Number& a) {
    if (a > Number(2) || a < Number(-2)) fail("OutOfT", "|a| > 2, S is not in T(2,R)");
    Solve2 s;
    s.beta1 = cos_angle(-a / Number(2));
    s.alpha1 = Number(2) * s.beta1 - Number(Rational(1, 2));
    bool edge = a == Number(2) || a == Number(-2);
    if (edge) {
        s.spp = Spp{{Number(Rational(-1, 2)), 2}, {Number(Rational(1, 2)), 0}};
        s.types = {IrrType::f1(-1, 2, 1)};
    } else {
        s.spp = Spp{{s.alpha1, 1}, {-s.alpha1, 1}};
        if (a.is_zero()) s.types = {IrrType::f1(1, 1, 1), IrrType::f1(1, 1, 1)};
        else s.types = {IrrType::f2complex(s.alpha1.mod(Number(1)), 1, -s.alpha1 / Number(2))};
    }
    return s;
}

Line3 hor1_line3(const Number& p1) {
    if (p1 < Number(-1) || p1 > Number(3)) fail("OutOfFamily", "p1 outside [-1,3]");
    Line3 l;
    Number b1 = cos_angle((Number(1) - p1) / Number(2));
    l.beta = {b1, Number(Rational(1, 2)), Number(1) - b1};
    Number a1 = Number(3) * b1 - Number(Rational(1, 2));
    l.alpha = {a1, Number(0), -a1};
    HorScal h{1, l.beta};
    l.spp = recipe_spectral_pairs(h);
    return l;
}

}  // namespace stokes
