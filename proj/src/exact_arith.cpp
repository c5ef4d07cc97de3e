#include "oddset/exact_arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace oddset {

std::string_view to_string(RationalClass c) {
  switch (c) {
    case RationalClass::odd_integer: return "odd-integer";
    case RationalClass::even_integer: return "even-integer";
    case RationalClass::strict_half_integer: return "strict-half-integer";
    case RationalClass::dyadic_non_half: return "dyadic-non-half";
    case RationalClass::non_dyadic: return "non-dyadic";
  }
  return "unknown";
}

namespace {

bool is_power_of_two(const BigInt& v) { return v > 0 && mpz_popcount(v.get_mpz_t()) == 1; }

}  // namespace

RationalClass classify_rational(const Rational& x) {
  if (x.is_small()) {
    const std::int64_t den = x.small_denominator();
    if (den == 1) return (x.small_numerator() & 1) ? RationalClass::odd_integer : RationalClass::even_integer;
    if (den == 2) return RationalClass::strict_half_integer;
    return (den & (den - 1)) == 0 ? RationalClass::dyadic_non_half : RationalClass::non_dyadic;
  }
  const BigInt den = x.denominator();
  if (den == 1) return mpz_odd_p(x.numerator().get_mpz_t()) ? RationalClass::odd_integer : RationalClass::even_integer;
  if (den == 2) return RationalClass::strict_half_integer;
  return is_power_of_two(den) ? RationalClass::dyadic_non_half : RationalClass::non_dyadic;
}

bool is_half_lattice(const Rational& x) {
  const auto c = classify_rational(x);
  return c == RationalClass::odd_integer || c == RationalClass::even_integer || c == RationalClass::strict_half_integer;
}

bool is_dyadic(const Rational& x) { return classify_rational(x) != RationalClass::non_dyadic; }

BigInt odd_part(const BigInt& value) {
  if (value <= 0) throw std::invalid_argument("odd_part needs a positive integer");
  BigInt out;
  const auto twos = mpz_scan1(value.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(out.get_mpz_t(), value.get_mpz_t(), twos);
  return out;
}

BigInt odd_denominator_lcm(std::span<const Rational> xs) {
  if (xs.empty()) throw std::invalid_argument("odd_denominator_lcm of an empty list");
  BigInt acc = 1;
  for (const auto& x : xs) {
    if (x.is_small() && x.small_denominator() <= 2) continue;
    BigInt part = odd_part(x.denominator());
    mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), part.get_mpz_t());
  }
  return acc;
}

namespace {

// Simplest rational in the open interval (lo, hi) with 0 <= lo < hi, where an
// absent hi means +infinity. Each loop iteration is one maximal run of
// Stern-Brocot moves: the integer part taken from floor(lo), then a flip to
// the reciprocal interval.
Rational simplest_nonnegative(Rational lo, std::optional<Rational> hi) {
  // Continued-fraction terms of the answer, accumulated as a convergent.
  BigInt p_prev = 1, q_prev = 0;  // h_{-1}, k_{-1}
  BigInt p_cur = 0, q_cur = 1;    // placeholder before the first term
  bool first = true;
  auto push = [&](const BigInt& term) {
    if (first) {
      p_prev = 1;
      q_prev = 0;
      p_cur = term;
      q_cur = 1;
      first = false;
      return;
    }
    BigInt p_next = term * p_cur + p_prev;
    BigInt q_next = term * q_cur + q_prev;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
  };

  while (true) {
    const BigInt whole = floor(lo);
    const Rational next_int = Rational(whole + 1, BigInt(1));
    if (!hi || next_int < *hi) {
      push(whole + 1);
      break;
    }
    // (lo, hi) lies inside (whole, whole + 1]; descend into the reciprocal.
    push(whole);
    const Rational base(whole, BigInt(1));
    const Rational lo_frac = lo - base;
    const Rational hi_frac = *hi - base;
    Rational new_lo = Rational(1) / hi_frac;
    std::optional<Rational> new_hi;
    if (!lo_frac.is_zero()) new_hi = Rational(1) / lo_frac;
    lo = std::move(new_lo);
    hi = std::move(new_hi);
  }
  return Rational(p_cur, q_cur);
}

}  // namespace

Rational best_rational_in_interval(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw std::invalid_argument("best_rational_in_interval needs lo < hi, got (" + lo.to_string() + ", " +
                                hi.to_string() + ")");
  }
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

Rational parse_decimal(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return Rational::parse(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto dot = body.find('.');
  std::string whole(body.substr(0, dot));
  std::string frac = dot == std::string_view::npos ? std::string() : std::string(body.substr(dot + 1));
  auto all_digits = [](const std::string& s) { return s.find_first_not_of("0123456789") == std::string::npos; };
  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  }
  BigInt num("0" + whole + frac, 10);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  if (negative) num = -num;
  return Rational(num, den);
}

}  // namespace oddset
