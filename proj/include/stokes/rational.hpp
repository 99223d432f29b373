#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stokes {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p/q", "p", and decimal literals such as "-0.25".
// p/q in lowest terms.
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

Integer floor_of(const Rational& q);

// q - floor(q), in [0,1).
Rational frac(const Rational& q);

// Representative of q modulo m in [0,m).
Rational mod(const Rational& q, const Rational& m);

bool is_integer(const Rational& q);

long to_long(const Rational& q);

}  // namespace stokes
