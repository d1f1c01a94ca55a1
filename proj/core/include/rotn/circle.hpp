#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rotn/certified.hpp"
#include "rotn/cf.hpp"
#include "rotn/surd.hpp"

namespace rotn {

enum class Precision {
  exact_only,      // every position is carried in SurdReal arithmetic
  certified_fast,  // double shadows with radius, escalating on ambiguity
};

/// A point of the circle [0, 1) held exactly.
struct CirclePoint {
  SurdReal position;

  CirclePoint() = default;
  explicit CirclePoint(SurdReal pos);

  static CirclePoint half() { return CirclePoint(SurdReal::rational(1, 2)); }
  double approx() const { return position.to_double(); }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

/// A point (x, s) of the skew product S^1 x Z.
struct SkewPoint {
  CirclePoint base;
  std::int64_t level = 0;
};

/// Fractional part of x + n*alpha, exact; n may be negative.
CirclePoint rotate(const CirclePoint& x, const CFNumber& alpha, std::int64_t n);

/// f = chi_[0,1/2) - chi_[1/2,1); the point 1/2 maps to -1.
int sign_f(const CirclePoint& x);

/// T(x, s) = (x + alpha, s + f(x)).
SkewPoint skew_step(const SkewPoint& p, const CFNumber& alpha);

/// T^n for signed n.
SkewPoint skew_iterate(const SkewPoint& p, const CFNumber& alpha, std::int64_t n,
                       Precision precision = Precision::certified_fast);

/// Walks the orbit t^n(seed) one step at a time.
///
/// The position at time n is seed + n*alpha - wraps with an integer wrap
/// count, so nothing accumulates by repeated floating addition. In
/// certified_fast mode each decision (wrap, side of 1/2) is taken on a
/// double shadow whose error radius grows like |n| * ulp and falls back to
/// exact arithmetic when the radius straddles the threshold.
///
/// With TiePolicy::forbid the cursor asserts that no orbit point other than
/// the seed lands exactly on 0 or 1/2.
class OrbitCursor {
 public:
  OrbitCursor(CirclePoint seed, const CFNumber& alpha,
              Precision precision = Precision::certified_fast,
              EscalationStats* stats = nullptr, TiePolicy boundaries = TiePolicy::forbid);

  std::int64_t time() const { return n_; }
  /// floor(seed + n*alpha); position = seed + n*alpha - wraps.
  std::int64_t wraps() const { return wraps_; }
  void advance();
  void retreat();
  void seek(std::int64_t n);

  /// f(t^n seed).
  int sign() const { return sign_; }
  CertifiedFloat shadow() const;
  SurdReal position() const;

  /// Exact ordering of t^n(seed) against `threshold`; ties are legitimate.
  std::strong_ordering compare(const SurdReal& threshold, const CertifiedFloat& threshold_shadow) const;

  const CFNumber& alpha() const { return alpha_; }
  const CirclePoint& seed() const { return seed_; }

 private:
  CertifiedFloat shadow_with(std::int64_t n, std::int64_t wraps) const;
  SurdReal exact_with(std::int64_t n, std::int64_t wraps) const;
  void refresh_sign();

  CirclePoint seed_;
  CFNumber alpha_;
  Precision precision_;
  EscalationStats* stats_;
  TiePolicy boundaries_;

  CertifiedFloat seed_shadow_;
  CertifiedFloat alpha_shadow_;

  std::int64_t n_ = 0;
  std::int64_t wraps_ = 0;
  std::optional<SurdReal> exact_;  // maintained in exact_only mode
  int sign_ = 1;
};

/// S_n(x) with S_0 = 0 and, for n < 0, S_n = -sum_{k=1}^{|n|} f(t^{-k} x),
/// so that T^n(x, s) = (t^n x, s + S_n(x)) for every integer n.
std::int64_t birkhoff(const CirclePoint& x, const CFNumber& alpha, std::int64_t n,
                      Precision precision = Precision::certified_fast);

/// Visits every n = 0..horizon (or 0..-horizon when backward) with the
/// cursor positioned at t^n x and the running sum S_n(x).
void scan_orbit(const CirclePoint& x, const CFNumber& alpha, std::int64_t horizon, bool backward,
                Precision precision, EscalationStats* stats,
                const std::function<void(std::int64_t n, std::int64_t sum, const OrbitCursor&)>& visit);

/// Times n <= horizon with S_n(x) = m and the positions t^(n + shift)(x).
struct VisitSet {
  std::int64_t m = 0;
  std::int64_t horizon = 0;
  std::int64_t shift = 0;
  std::vector<std::int64_t> times;
  std::vector<CertifiedFloat> positions;

  bool empty() const { return times.empty(); }
  /// Exact position for entry i, recomputed from the seed.
  CirclePoint exact_position(const CirclePoint& x, const CFNumber& alpha, std::size_t i) const;
};

VisitSet visit_set(const CirclePoint& x, const CFNumber& alpha, std::int64_t m, std::int64_t horizon,
                   std::int64_t shift = 0, Precision precision = Precision::certified_fast,
                   EscalationStats* stats = nullptr);

/// Largest circular gap between sorted points, wrap-around included.
SurdReal max_gap(std::span<const CirclePoint> points);
double max_gap(std::vector<double> points);

}  // namespace rotn
