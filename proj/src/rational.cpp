#include "oddset/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace oddset {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = Rational::kSmallMax;

bool fits(i128 v) { return v >= -kMax && v <= kMax; }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b));
}

BigInt to_big(i128 v) {
  u128 u = uabs(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt out = hi << 64;
  out += static_cast<unsigned long>(u & ~std::uint64_t{0});
  if (v < 0) out = -out;
  return out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_i128(num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_big(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_big(const BigInt& num, const BigInt& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class value) {
  Rational out;
  const auto& n = value.get_num();
  const auto& d = value.get_den();
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    out.num_ = n.get_si();
    out.den_ = d.get_si();
  } else {
    out.big_ = std::make_shared<const mpq_class>(std::move(value));
    out.num_ = 0;
    out.den_ = 1;
  }
  return out;
}

// Canonicalizes num/den (den != 0) computed in 128-bit arithmetic.
Rational Rational::from_i128(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(uabs(num), static_cast<u128>(den));
  if (g != 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (fits(num) && fits(den)) {
    Rational out;
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = static_cast<std::int64_t>(den);
    return out;
  }
  Rational out;
  out.big_ = std::make_shared<const mpq_class>(to_big(num), to_big(den));
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num_text) || !digits(den_text)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("rational '" + std::string(text) + "' has zero denominator");
  if (negative) num = -num;
  return from_big(num, den);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

BigInt Rational::numerator() const {
  if (big_) return big_->get_num();
  return BigInt(static_cast<long>(num_));
}

BigInt Rational::denominator() const {
  if (big_) return big_->get_den();
  return BigInt(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational out = *this;
  out.num_ = -num_;
  return out;
}

Rational operator+(const Rational& lhs, const Rational& rhs) {
  if (lhs.big_ || rhs.big_) return Rational::from_mpq(lhs.to_mpq() + rhs.to_mpq());
  const std::int64_t a = lhs.num_, b = lhs.den_, c = rhs.num_, d = rhs.den_;
  if (b == 1 && d == 1) return Rational::from_i128(static_cast<i128>(a) + c, 1);
  const auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(d)));
  if (g == 1) {
    // gcd(num, b*d) is already 1; from_i128 still reduces, which is a no-op.
    return Rational::from_i128(static_cast<i128>(a) * d + static_cast<i128>(c) * b, static_cast<i128>(b) * d);
  }
  const i128 t = static_cast<i128>(a) * (d / g) + static_cast<i128>(c) * (b / g);
  if (t == 0) return Rational();
  const auto g2 = static_cast<std::int64_t>(gcd64(static_cast<std::int64_t>(t % g), g));
  return Rational::from_i128(t / g2, static_cast<i128>(b / g) * (d / g2));
}

Rational operator-(const Rational& lhs, const Rational& rhs) { return lhs + (-rhs); }

Rational operator*(const Rational& lhs, const Rational& rhs) {
  if (lhs.big_ || rhs.big_) return Rational::from_mpq(lhs.to_mpq() * rhs.to_mpq());
  if (lhs.num_ == 0 || rhs.num_ == 0) return Rational();
  const auto g1 = static_cast<std::int64_t>(gcd64(lhs.num_, rhs.den_));
  const auto g2 = static_cast<std::int64_t>(gcd64(rhs.num_, lhs.den_));
  return Rational::from_i128(static_cast<i128>(lhs.num_ / g1) * (rhs.num_ / g2),
                             static_cast<i128>(lhs.den_ / g2) * (rhs.den_ / g1));
}

Rational operator/(const Rational& lhs, const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (lhs.big_ || rhs.big_) return Rational::from_mpq(lhs.to_mpq() / rhs.to_mpq());
  Rational inverse;
  inverse.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
  inverse.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
  return lhs * inverse;
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
  // Canonical form: a big value never equals a small one.
  if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
  if (lhs.big_ || rhs.big_) return false;
  return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.big_ || rhs.big_) {
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
  const i128 l = static_cast<i128>(lhs.num_) * rhs.den_;
  const i128 r = static_cast<i128>(rhs.num_) * lhs.den_;
  return l <=> r;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

BigInt floor(const Rational& x) {
  BigInt out;
  const mpq_class q = x.to_mpq();
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& x) {
  BigInt out;
  const mpq_class q = x.to_mpq();
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace oddset
