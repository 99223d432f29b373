#pragma once

#include "stokes/rational.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace stokes {

// Real scalar that stays exact as long as every operand is exact.
class Number {
public:
    static constexpr double kTol = 1e-9;

    Number() : v_(Rational(0)) {}
    Number(const Rational& q) : v_(q) { std::get<Rational>(v_).canonicalize(); }
    Number(int i) : v_(Rational(i)) {}
    Number(long i) : v_(Rational(i)) {}
    explicit Number(double d) : v_(d) {}

    bool exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rational() const;
    double value() const;

    Number operator-() const;
    friend Number operator+(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator/(const Number& a, const Number& b);
    Number& operator+=(const Number& b) { return *this = *this + b; }
    Number& operator-=(const Number& b) { return *this = *this - b; }

    // Exact comparison when both sides are exact, otherwise |a-b| <= kTol.
    friend bool operator==(const Number& a, const Number& b);
    friend bool operator!=(const Number& a, const Number& b) { return !(a == b); }
    // Strict order consistent with ==.
    friend bool operator<(const Number& a, const Number& b);
    friend bool operator>(const Number& a, const Number& b) { return b < a; }
    friend bool operator<=(const Number& a, const Number& b) { return !(b < a); }
    friend bool operator>=(const Number& a, const Number& b) { return !(a < b); }

    bool is_zero() const { return *this == Number(0); }
    bool is_integer() const;
    // Representative modulo m in [0,m); inexact values snap to 0 near m.
    Number mod(const Number& m) const;
    Number floor() const;

    std::string str(int precision = 12) const;

private:
    std::variant<Rational, double> v_;
};

std::ostream& operator<<(std::ostream& os, const Number& x);

}  // namespace stokes
