#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cuboid::algebra {

// GMP keeps mpq_class canonical: lowest terms, positive denominator, 0 = 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms; integers print bare unless full_form is set.
std::string to_string(const Rational& q, bool full_form = false);

/// Accepts "p", "p/q", with optional leading sign. Throws Error(Parse).
Rational parse_rational(std::string_view text);

int sign(const Rational& q);
Rational abs(const Rational& q);
Rational pow(const Rational& q, int e);

}  // namespace cuboid::algebra
