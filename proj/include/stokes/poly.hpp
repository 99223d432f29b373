#pragma once

#include "stokes/matrix.hpp"
#include "stokes/rational.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace stokes {

// Univariate polynomial, coefficients low to high; no trailing zeros.
template <class T>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<T> c) : c_(std::move(c)) { trim(); }
    Poly(std::initializer_list<T> c) : c_(c) { trim(); }

    static Poly constant(const T& x) { return Poly(std::vector<T>{x}); }
    static Poly monomial(int d, const T& x = T(1)) {
        std::vector<T> c(d + 1, T(0));
        c[d] = x;
        return Poly(c);
    }
    // x^r - 1
    static Poly binomial(int r) {
        std::vector<T> c(r + 1, T(0));
        c[0] = T(-1);
        c[r] = T(1);
        return Poly(c);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](int j) const { return j >= 0 && j < static_cast<int>(c_.size()) ? c_[j] : T(0); }
    const T& lead() const { return c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (int j = degree(); j >= 0; --j) acc = acc * x + U(c_[j]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<T> d(c_.size() - 1);
        for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * T(static_cast<long>(j));
        return Poly(d);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t j = 0; j < a.c_.size(); ++j) c[j] += a.c_[j];
        for (size_t j = 0; j < b.c_.size(); ++j) c[j] += b.c_[j];
        return Poly(c);
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (size_t j = 0; j < a.c_.size(); ++j) c[j] += a.c_[j];
        for (size_t j = 0; j < b.c_.size(); ++j) c[j] -= b.c_[j];
        return Poly(c);
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero_entry(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(c);
    }
    friend Poly operator*(const T& x, const Poly& a) {
        std::vector<T> c = a.c_;
        for (auto& e : c) e *= x;
        return Poly(c);
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Quotient and remainder; requires exact division of coefficients by lead().
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        std::vector<T> r = c_;
        int dd = d.degree();
        if (degree() < dd) return {Poly(), *this};
        std::vector<T> q(degree() - dd + 1, T(0));
        for (int i = degree(); i >= dd; --i) {
            if (is_zero_entry(r[i])) continue;
            T f = r[i] / d.lead();
            q[i - dd] = f;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
        }
        r.resize(dd > 0 ? dd : 0);
        return {Poly(q), Poly(r)};
    }

    Poly monic() const { return is_zero() ? *this : (T(1) / lead()) * (*this); }

    // p(-x)
    Poly reflect() const {
        std::vector<T> c = c_;
        for (size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
        return Poly(c);
    }

private:
    void trim() {
        while (!c_.empty() && is_zero_entry(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using PolyQ = Poly<Rational>;
using PolyD = Poly<double>;

PolyQ gcd(const PolyQ& a, const PolyQ& b);

std::string to_string(const PolyQ& p);

inline PolyD to_double(const PolyQ& p) {
    std::vector<double> c;
    for (const auto& x : p.coeffs()) c.push_back(x.get_d());
    return PolyD(c);
}

}  // namespace stokes
