#include "stokes/irrtype.hpp"
#include "stokes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace stokes {

std::string family_name(Family f) {
    switch (f) {
        case Family::F1: return "F1";
        case Family::F2real: return "F2real";
        case Family::F2complex: return "F2complex";
        case Family::F2hyper: return "F2hyper";
        case Family::F4hyper: return "F4hyper";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : {Family::F1, Family::F2real, Family::F2complex, Family::F2hyper, Family::F4hyper})
        if (family_name(f) == s) return f;
    fail("ParseError", "unknown family '" + s + "'");
}

namespace {

Number half_angle(int sign) { return sign > 0 ? Number(0) : Number(Rational(1, 2)); }

Number wrap(const Number& a) { return a.mod(Number(1)); }

std::string angle_str(const Number& a) {
    if (a.is_zero()) return "1";
    if (a == Number(Rational(1, 2))) return "-1";
    return "exp(-2pi*i*" + a.str() + ")";
}

std::string complex_str(std::complex<double> z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real();
    if (z.imag() != 0) os << (z.imag() < 0 ? "-" : "+") << std::fabs(z.imag()) << "i";
    return os.str();
}

}  // namespace

bool angles_equal(const Number& a, const Number& b, double tol) {
    if (a.exact() && b.exact()) return frac(a.rational()) == frac(b.rational());
    double d = std::fabs(wrap(a - b).value());
    return std::min(d, 1 - d) <= tol;
}

IrrType IrrType::f1(int lambda_sign, int size, int eps) {
    IrrType t;
    t.family = Family::F1;
    t.lambda = half_angle(lambda_sign);
    t.size = size;
    t.eps = eps;
    return t;
}

IrrType IrrType::f2real(int lambda_sign, int size) {
    IrrType t;
    t.family = Family::F2real;
    t.lambda = half_angle(lambda_sign);
    t.size = size;
    return t;
}

IrrType IrrType::f2complex(const Number& lambda_angle, int size, const Number& zeta_angle) {
    IrrType t;
    t.family = Family::F2complex;
    t.size = size;
    t.lambda = wrap(lambda_angle);
    t.zeta = wrap(zeta_angle);
    // Im lambda < 0 exactly when the angle lies in (0, 1/2).
    if (t.lambda > Number(Rational(1, 2))) {
        t.lambda = wrap(-t.lambda);
        t.zeta = wrap(-t.zeta);
    }
    return t;
}

IrrType IrrType::hyperbolic(std::complex<double> lambda, int size) {
    IrrType t;
    t.family = std::fabs(lambda.imag()) < 1e-12 ? Family::F2hyper : Family::F4hyper;
    t.lambda_c = lambda;
    t.size = size;
    return t;
}

int IrrType::lambda_sign() const { return lambda.is_zero() ? 1 : -1; }

bool IrrType::valid() const {
    switch (family) {
        case Family::F1:
            if (eps != 1 && eps != -1) return false;
            return lambda_sign() == 1 ? size % 2 == 1 : size % 2 == 0;
        case Family::F2real:
            return lambda_sign() == 1 ? size % 2 == 0 : size % 2 == 1;
        case Family::F2complex: {
            if (!(lambda > Number(0) && lambda < Number(Rational(1, 2)))) return false;
            // zeta^2 = conj(lambda) (-1)^(n+1)
            Number want = -lambda + Number(ratio(size + 1, 2));
            return angles_equal(Number(2) * zeta, want);
        }
        case Family::F2hyper:
            return std::fabs(lambda_c.imag()) < 1e-12 && std::fabs(lambda_c.real()) > 1;
        case Family::F4hyper:
            return std::abs(lambda_c) > 1 && lambda_c.imag() > 0;
    }
    return false;
}

std::string IrrType::str() const {
    std::string n = std::to_string(size);
    switch (family) {
        case Family::F1: return "Seif(" + angle_str(lambda) + ",1," + n + "," + std::to_string(eps) + ")";
        case Family::F2real: return "Seif(" + angle_str(lambda) + ",2," + n + ")";
        case Family::F2complex: return "Seif(" + angle_str(lambda) + ",2," + n + "," + angle_str(zeta) + ")";
        case Family::F2hyper: return "Seif(" + complex_str(lambda_c) + ",2," + n + ")";
        case Family::F4hyper: return "Seif(" + complex_str(lambda_c) + ",4," + n + ")";
    }
    return "?";
}

bool operator==(const IrrType& a, const IrrType& b) {
    if (a.family != b.family || a.size != b.size) return false;
    switch (a.family) {
        case Family::F1: return a.eps == b.eps && angles_equal(a.lambda, b.lambda);
        case Family::F2real: return angles_equal(a.lambda, b.lambda);
        case Family::F2complex: return angles_equal(a.lambda, b.lambda) && angles_equal(a.zeta, b.zeta);
        case Family::F2hyper:
        case Family::F4hyper: return std::abs(a.lambda_c - b.lambda_c) <= 1e-7 * std::max(1.0, std::abs(a.lambda_c));
    }
    return false;
}

void sort_types(TypeList& t) {
    auto key = [](const IrrType& x) {
        double l = x.family == Family::F2hyper || x.family == Family::F4hyper ? x.lambda_c.real() : x.lambda.value();
        double z = x.family == Family::F4hyper ? x.lambda_c.imag() : x.zeta.value();
        return std::make_tuple(static_cast<int>(x.family), x.size, l, x.eps, z);
    };
    std::stable_sort(t.begin(), t.end(), [&](const IrrType& a, const IrrType& b) { return key(a) < key(b); });
}

bool same_types(TypeList a, TypeList b) {
    if (a.size() != b.size()) return false;
    // Greedy matching keeps tolerance-equal items from depending on sort order.
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool found = false;
        for (size_t j = 0; j < b.size(); ++j)
            if (!used[j] && x == b[j]) {
                used[j] = found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

std::string types_str(TypeList t) {
    sort_types(t);
    std::string s;
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (!s.empty()) s += " + ";
        if (j - i > 1) s += std::to_string(j - i) + "*";
        s += t[i].str();
        i = j;
    }
    return s.empty() ? "0" : s;
}

int type_dimension(const IrrType& t) {
    switch (t.family) {
        case Family::F1: return t.size;
        case Family::F4hyper: return 4 * t.size;
        default: return 2 * t.size;
    }
}

Inertia type_signature(const IrrType& t) {
    int n = t.size;
    auto mod4 = [](int x) { return ((x % 4) + 4) % 4; };
    switch (t.family) {
        case Family::F1:
            if (t.lambda_sign() == 1) {
                if (mod4(n) == mod4(t.eps)) return {(n + 1) / 2, 0, (n - 1) / 2};
                return {(n - 1) / 2, 0, (n + 1) / 2};
            }
            if (mod4(n - 1) == mod4(t.eps)) return {n / 2, 1, (n - 2) / 2};
            return {(n - 2) / 2, 1, n / 2};
        case Family::F2real:
            if (t.lambda_sign() == 1) return {n, 0, n};
            return {n - 1, 2, n - 1};
        case Family::F2complex: {
            if (n % 2 == 0) return {n, 0, n};
            // zeta_L = (conj(lambda)+1)/|lambda+1| i^(n+1); with the angle of
            // lambda in (0,1/2) its angle is -lambda/2 - (n+1)/4.
            Number zl = -t.lambda / Number(2) - Number(ratio(n + 1, 4));
            if (angles_equal(t.zeta, zl)) return {n - 1, 0, n + 1};
            return {n + 1, 0, n - 1};
        }
        case Family::F2hyper: return {n, 0, n};
        case Family::F4hyper: return {2 * n, 0, 2 * n};
    }
    return {};
}

}  // namespace stokes
