#pragma once

// Exact rational scalar.
//
// Values whose numerator and denominator fit in a signed 64-bit word are kept
// inline; anything larger is promoted to a shared, immutable GMP rational and
// demoted again as soon as a result fits. Every value is canonical:
// gcd(|num|, den) = 1, den >= 1, and zero is 0/1.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace oddset {

using BigInt = mpz_class;

class Rational {
 public:
  Rational() noexcept = default;

  template <std::signed_integral T>
  Rational(T value) noexcept : num_(static_cast<std::int64_t>(value)) {  // NOLINT
    if constexpr (sizeof(T) >= sizeof(std::int64_t)) {
      if (value == std::numeric_limits<T>::min()) *this = from_big(BigInt(std::to_string(value)), 1);
    }
  }

  template <std::unsigned_integral T>
  Rational(T value) noexcept {  // NOLINT
    if (value <= static_cast<std::uint64_t>(kSmallMax)) {
      num_ = static_cast<std::int64_t>(value);
    } else {
      *this = from_big(BigInt(std::to_string(value)), 1);
    }
  }

  /// Canonicalizes num/den. Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const mpq_class& value);

  /// Parses the canonical grammar: optional '-', digits, optional '/digits'.
  /// Non-reduced input such as "2/4" is accepted and reduced.
  static Rational parse(std::string_view text);

  std::string to_string() const;

  BigInt numerator() const;
  BigInt denominator() const;
  mpq_class to_mpq() const;
  double to_double() const;

  bool is_small() const noexcept { return !big_; }
  // Only meaningful when is_small().
  std::int64_t small_numerator() const noexcept { return num_; }
  std::int64_t small_denominator() const noexcept { return den_; }

  int sign() const noexcept;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_integer() const noexcept { return !big_ && den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs) { return *this = *this + rhs; }
  Rational& operator-=(const Rational& rhs) { return *this = *this - rhs; }
  Rational& operator*=(const Rational& rhs) { return *this = *this * rhs; }
  Rational& operator/=(const Rational& rhs) { return *this = *this / rhs; }

  friend Rational operator+(const Rational& lhs, const Rational& rhs);
  friend Rational operator-(const Rational& lhs, const Rational& rhs);
  friend Rational operator*(const Rational& lhs, const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& lhs, const Rational& rhs);

  friend bool operator==(const Rational& lhs, const Rational& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  static constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

 private:
  static Rational from_big(const BigInt& num, const BigInt& den);
  static Rational from_mpq(mpq_class value);
  static Rational from_i128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

Rational abs(const Rational& x);
BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace oddset

namespace Eigen {

template <>
struct NumTraits<oddset::Rational> : GenericNumTraits<oddset::Rational> {
  using Real = oddset::Rational;
  using NonInteger = oddset::Rational;
  using Nested = oddset::Rational;
  using Literal = oddset::Rational;

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };

  // Exact arithmetic: no rounding tolerance anywhere.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
