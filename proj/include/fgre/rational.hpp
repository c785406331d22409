#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace fgre {

/// Arbitrary precision rational, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws Error(kInvalidInput).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::size_t hash_value(const Rational& r);

}  // namespace fgre
