#include "rotn/surd.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "rotn/certified.hpp"

namespace rotn {

namespace {

// Bits of the fixed-point window used to build certified shadows.
constexpr unsigned long kShadowBits = 96;

bool is_square_free_radicand(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t f = 2; f * f <= d; ++f) {
    if (d % (f * f) == 0) return false;
  }
  return true;
}

// floor(b * sqrt(d)) for non-square d > 0.
mpz_class floor_scaled_root(const mpz_class& b, std::int64_t d) {
  if (b == 0) return 0;
  mpz_class sq = b * b * mpz_class(static_cast<long>(d));
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  if (b > 0) return root;
  return -root - 1;
}

}  // namespace

int sign_of_surd(const mpz_class& a, const mpz_class& b, std::int64_t d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  mpz_class lhs = a * a;
  mpz_class rhs = b * b * mpz_class(static_cast<long>(d));
  const int c = cmp(lhs, rhs);
  if (c == 0) throw ArithmeticInvariantError("sign_of_surd: radicand is a perfect square");
  return c > 0 ? sa : sb;
}

std::pair<mpz_class, mpz_class> square_free_split(const mpz_class& n) {
  if (n <= 0) throw DomainError("square_free_split: argument must be positive");
  mpz_class rest = n;
  mpz_class square_part = 1;
  const unsigned long limit = 10'000'000;
  for (unsigned long f = 2; f <= limit; ++f) {
    const mpz_class ff = mpz_class(f) * f;
    if (ff > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), f * f) != 0) {
      rest /= ff;
      square_part *= f;
    }
  }
  if (rest > 1 && mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
    square_part *= root;
    rest = 1;
  }
  // Any square factor left would need a prime above the trial bound, which
  // forces the cofactor past limit^2.
  if (rest > mpz_class(limit) * limit) {
    throw DomainError("square_free_split: cofactor too large to certify square-free");
  }
  return {square_part, rest};
}

SurdReal::SurdReal(mpz_class p, mpz_class q, mpz_class r, std::int64_t d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
  canonicalize();
}

SurdReal SurdReal::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("SurdReal::rational: zero denominator");
  return SurdReal(num, 0, den, 0);
}

SurdReal SurdReal::make(const mpz_class& p, const mpz_class& q, const mpz_class& r,
                        std::int64_t radicand) {
  if (r == 0) throw DomainError("SurdReal::make: zero denominator");
  if (q != 0 && !is_square_free_radicand(radicand)) {
    throw DomainError("SurdReal::make: radicand " + std::to_string(radicand) +
                      " is not a square-free integer >= 2");
  }
  return SurdReal(p, q, r, q == 0 ? 0 : radicand);
}

void SurdReal::canonicalize() {
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_ == 0) d_ = 0;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r_.get_mpz_t());
  if (g > 1) {
    mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r_.get_mpz_t(), r_.get_mpz_t(), g.get_mpz_t());
  }
}

std::int64_t SurdReal::field_with(const SurdReal& other) const {
  if (d_ == 0) return other.d_;
  if (other.d_ == 0 || other.d_ == d_) return d_;
  throw DomainError("SurdReal: operands live in different fields (sqrt(" + std::to_string(d_) +
                    ") vs sqrt(" + std::to_string(other.d_) + "))");
}

int SurdReal::sign() const { return sign_of_surd(p_, q_, d_); }

mpz_class SurdReal::floor() const {
  mpz_class numerator = p_;
  if (q_ != 0) numerator += floor_scaled_root(q_, d_);
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), numerator.get_mpz_t(), r_.get_mpz_t());
  return out;
}

SurdReal SurdReal::conjugate() const { return SurdReal(p_, -q_, r_, d_); }

SurdReal SurdReal::reciprocal() const {
  // r / (p + q sqrt D) = r (p - q sqrt D) / (p^2 - q^2 D)
  mpz_class norm = p_ * p_ - q_ * q_ * mpz_class(static_cast<long>(d_));
  if (norm == 0) throw DomainError("SurdReal::reciprocal: division by zero");
  return SurdReal(r_ * p_, -(r_ * q_), norm, d_);
}

SurdReal SurdReal::operator-() const { return SurdReal(-p_, -q_, r_, d_); }

SurdReal& SurdReal::operator+=(const SurdReal& rhs) {
  const std::int64_t d = field_with(rhs);
  if (r_ == rhs.r_) {
    p_ += rhs.p_;
    q_ += rhs.q_;
  } else {
    p_ = p_ * rhs.r_ + rhs.p_ * r_;
    q_ = q_ * rhs.r_ + rhs.q_ * r_;
    r_ *= rhs.r_;
  }
  d_ = d;
  canonicalize();
  return *this;
}

SurdReal& SurdReal::operator-=(const SurdReal& rhs) { return *this += -rhs; }

SurdReal& SurdReal::operator*=(const SurdReal& rhs) {
  const std::int64_t d = field_with(rhs);
  mpz_class np = p_ * rhs.p_ + q_ * rhs.q_ * mpz_class(static_cast<long>(d));
  mpz_class nq = p_ * rhs.q_ + q_ * rhs.p_;
  p_ = std::move(np);
  q_ = std::move(nq);
  r_ *= rhs.r_;
  d_ = d;
  canonicalize();
  return *this;
}

SurdReal& SurdReal::operator/=(const SurdReal& rhs) {
  field_with(rhs);
  return *this *= rhs.reciprocal();
}

std::strong_ordering operator<=>(const SurdReal& a, const SurdReal& b) {
  if (a == b) return std::strong_ordering::equal;
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

CertifiedFloat SurdReal::to_certified() const {
  if (q_ == 0 && mpz_sizeinbase(r_.get_mpz_t(), 2) < 50 && mpz_sizeinbase(p_.get_mpz_t(), 2) < 50) {
    // Both fit a double exactly, so one correctly rounded division.
    const double v = p_.get_d() / r_.get_d();
    return {v, std::abs(v) * std::numeric_limits<double>::epsilon()};
  }
  // floor(x * 2^k) pins x to a window of width 2^-k; the conversion of that
  // integer to double truncates by at most one ulp.
  mpz_class scale = 1;
  scale <<= kShadowBits;
  SurdReal scaled(p_ * scale, q_ * scale, r_, d_);
  mpz_class window = scaled.floor();
  const double approx = std::ldexp(window.get_d(), -static_cast<int>(kShadowBits));
  const double ulp = std::nextafter(std::abs(approx), std::numeric_limits<double>::infinity()) -
                     std::abs(approx);
  const double radius = std::ldexp(1.0, -static_cast<int>(kShadowBits)) + 2.0 * ulp;
  return {approx, radius};
}

double SurdReal::to_double() const { return to_certified().approx; }

std::string SurdReal::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_.get_str();
    if (r_ != 1) os << "/" << r_.get_str();
    return os.str();
  }
  const bool wrap = r_ != 1;
  if (wrap) os << "(";
  if (p_ != 0) os << p_.get_str() << (q_ < 0 ? " - " : " + ");
  else if (q_ < 0) os << "-";
  mpz_class aq = ::abs(q_);
  if (aq != 1) os << aq.get_str() << "*";
  os << "sqrt(" << d_ << ")";
  if (wrap) os << ")/" << r_.get_str();
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SurdReal& x) { return os << x.str(); }

}  // namespace rotn
