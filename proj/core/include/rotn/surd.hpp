#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "rotn/errors.hpp"

namespace rotn {

struct CertifiedFloat;

/// Exact element (p + q*sqrt(D)) / r of a real quadratic field.
///
/// Values are canonical on construction: gcd(p, q, r) = 1, r > 0, and a
/// rational value (q = 0) carries radicand 0 so that it mixes freely with
/// any field. Two irrational operands must share the same square-free D.
class SurdReal {
 public:
  SurdReal() : p_(0), q_(0), r_(1) {}
  SurdReal(long value) : p_(value), q_(0), r_(1) {}  // NOLINT(google-explicit-constructor)
  SurdReal(int value) : SurdReal(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  explicit SurdReal(const mpz_class& value) : p_(value), q_(0), r_(1) {}

  static SurdReal rational(const mpz_class& num, const mpz_class& den);
  /// (p + q*sqrt(radicand)) / r. The radicand must be square-free and >= 2
  /// unless q == 0.
  static SurdReal make(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                       std::int64_t radicand);

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }
  const mpz_class& r() const { return r_; }
  std::int64_t radicand() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  /// Exact sign: -1, 0 or +1.
  int sign() const;
  mpz_class floor() const;
  SurdReal frac() const { return *this - SurdReal(floor()); }
  SurdReal conjugate() const;
  SurdReal reciprocal() const;
  SurdReal abs() const { return sign() < 0 ? -*this : *this; }

  SurdReal operator-() const;
  SurdReal& operator+=(const SurdReal& rhs);
  SurdReal& operator-=(const SurdReal& rhs);
  SurdReal& operator*=(const SurdReal& rhs);
  SurdReal& operator/=(const SurdReal& rhs);

  friend SurdReal operator+(SurdReal lhs, const SurdReal& rhs) { return lhs += rhs; }
  friend SurdReal operator-(SurdReal lhs, const SurdReal& rhs) { return lhs -= rhs; }
  friend SurdReal operator*(SurdReal lhs, const SurdReal& rhs) { return lhs *= rhs; }
  friend SurdReal operator/(SurdReal lhs, const SurdReal& rhs) { return lhs /= rhs; }

  friend bool operator==(const SurdReal& a, const SurdReal& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
  }
  friend std::strong_ordering operator<=>(const SurdReal& a, const SurdReal& b);

  /// Floating shadow with a rigorous absolute error radius.
  CertifiedFloat to_certified() const;
  double to_double() const;

  /// Human readable exact form, e.g. "(-2 + 1*sqrt(10))/6" or "1/2".
  std::string str() const;

 private:
  SurdReal(mpz_class p, mpz_class q, mpz_class r, std::int64_t d);
  void canonicalize();
  std::int64_t field_with(const SurdReal& other) const;

  mpz_class p_;
  mpz_class q_;
  mpz_class r_;
  std::int64_t d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const SurdReal& x);

/// Sign of a + b*sqrt(d) for integers a, b and a non-square d > 0.
int sign_of_surd(const mpz_class& a, const mpz_class& b, std::int64_t d);

/// Splits n > 0 as n = s^2 * k with k square-free; returns {s, k}.
/// Throws DomainError if n has a prime factor too large to resolve by trial
/// division below 10^7.
std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& n);

}  // namespace rotn
