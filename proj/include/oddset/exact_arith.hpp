#pragma once

// Number-theoretic predicates over Rational.

#include <span>
#include <string_view>

#include "oddset/rational.hpp"

namespace oddset {

enum class RationalClass {
  odd_integer,
  even_integer,
  strict_half_integer,  // x in Z + 1/2
  dyadic_non_half,      // power-of-two denominator >= 4
  non_dyadic,
};

std::string_view to_string(RationalClass c);

RationalClass classify_rational(const Rational& x);

inline bool is_odd_integer(const Rational& x) { return classify_rational(x) == RationalClass::odd_integer; }

/// True for x in (1/2)Z, i.e. integers and strict half-integers.
bool is_half_lattice(const Rational& x);

bool is_dyadic(const Rational& x);

/// Largest odd divisor of a positive integer. Strips factors of two only.
BigInt odd_part(const BigInt& value);

/// lcm of the odd parts of all denominators. Throws std::invalid_argument on
/// an empty list.
BigInt odd_denominator_lcm(std::span<const Rational> xs);

/// The rational of minimum denominator strictly inside (lo, hi); ties on the
/// denominator go to the smallest absolute numerator. Computed by Stern-Brocot
/// descent with whole runs of same-direction moves taken at once.
/// Throws std::invalid_argument unless lo < hi.
Rational best_rational_in_interval(const Rational& lo, const Rational& hi);

/// Exact value of a decimal literal ("-12.0625", "3", ".5") or a string in the
/// rational grammar ("7/3").
Rational parse_decimal(std::string_view text);

}  // namespace oddset
