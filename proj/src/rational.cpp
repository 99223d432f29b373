#include "stokes/rational.hpp"
#include "stokes/number.hpp"
#include "stokes/errors.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace stokes {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool valid_integer(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer parse_integer(const std::string& s) {
    if (!valid_integer(s)) fail("ParseError", "not an integer: '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = trim(text);
    if (s.empty()) fail("ParseError", "empty rational");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Integer num = parse_integer(trim(s.substr(0, slash)));
        Integer den = parse_integer(trim(s.substr(slash + 1)));
        if (den == 0) fail("ParseError", "zero denominator in '" + s + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) return Rational(parse_integer(s));
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = 0;
    if (exp != std::string::npos) e10 = parse_integer(s.substr(exp + 1)).get_si();
    std::string digits = mant;
    if (dot != std::string::npos) {
        e10 -= static_cast<long>(mant.size() - dot - 1);
        digits.erase(dot, 1);
    }
    if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
    Rational q(parse_integer(digits));
    Integer p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
    if (e10 >= 0) q *= p10; else q /= p10;
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

Rational mod(const Rational& q, const Rational& m) {
    Rational t = q / m;
    return q - Rational(floor_of(t)) * m;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p()) fail("Overflow", "not a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

// ---- Number ----

const Rational& Number::rational() const {
    if (!exact()) fail("InexactValue", "exact value requested from a float");
    return std::get<Rational>(v_);
}

double Number::value() const {
    return exact() ? std::get<Rational>(v_).get_d() : std::get<double>(v_);
}

Number Number::operator-() const {
    if (exact()) return Number(Rational(-std::get<Rational>(v_)));
    return Number(-std::get<double>(v_));
}

Number operator+(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return Number(Rational(a.rational() + b.rational()));
    return Number(a.value() + b.value());
}

Number operator-(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return Number(Rational(a.rational() - b.rational()));
    return Number(a.value() - b.value());
}

Number operator*(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return Number(Rational(a.rational() * b.rational()));
    return Number(a.value() * b.value());
}

Number operator/(const Number& a, const Number& b) {
    if (b.exact() && b.rational() == 0) fail("DivisionByZero", "division by exact zero");
    if (a.exact() && b.exact()) return Number(Rational(a.rational() / b.rational()));
    return Number(a.value() / b.value());
}

bool operator==(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return a.rational() == b.rational();
    return std::fabs(a.value() - b.value()) <= Number::kTol;
}

bool operator<(const Number& a, const Number& b) {
    if (a.exact() && b.exact()) return a.rational() < b.rational();
    return a.value() < b.value() - Number::kTol;
}

bool Number::is_integer() const {
    if (exact()) return stokes::is_integer(rational());
    double v = value();
    return std::fabs(v - std::round(v)) <= kTol;
}

Number Number::mod(const Number& m) const {
    if (exact() && m.exact()) return Number(stokes::mod(rational(), m.rational()));
    double mv = m.value();
    double r = value() - std::floor(value() / mv) * mv;
    if (r >= mv - kTol || r < kTol) r = 0.0;
    return Number(r);
}

Number Number::floor() const {
    if (exact()) return Number(Rational(floor_of(rational())));
    return Number(std::floor(value() + kTol));
}

std::string Number::str(int precision) const {
    if (exact()) return rational().get_str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, value());
    return buf;
}

std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.str(); }

}  // namespace stokes
