#include "rotn/circle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace rotn {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr std::int64_t kMaxExactDoubleInt = std::int64_t{1} << 53;

const SurdReal& one() {
  static const SurdReal value(1);
  return value;
}
const SurdReal& half() {
  static const SurdReal value = SurdReal::rational(1, 2);
  return value;
}
const CertifiedFloat& one_shadow() {
  static const CertifiedFloat value = one().to_certified();
  return value;
}
const CertifiedFloat& zero_shadow() {
  static const CertifiedFloat value{0.0, 0.0};
  return value;
}
const CertifiedFloat& half_shadow() {
  static const CertifiedFloat value = half().to_certified();
  return value;
}

[[noreturn]] void boundary_hit(std::int64_t n, const char* where) {
  throw ArithmeticInvariantError("orbit point t^" + std::to_string(n) + "(x) lies exactly on " +
                                 where + "; irrational orbits cannot do this after the seed");
}

}  // namespace

CirclePoint::CirclePoint(SurdReal pos) : position(std::move(pos)) {
  if (position.sign() < 0 || position >= one()) {
    throw DomainError("CirclePoint: position " + position.str() + " is outside [0, 1)");
  }
}

CirclePoint rotate(const CirclePoint& x, const CFNumber& alpha, std::int64_t n) {
  return CirclePoint((x.position + alpha.value() * SurdReal(static_cast<long>(n))).frac());
}

int sign_f(const CirclePoint& x) { return x.position < half() ? +1 : -1; }

SkewPoint skew_step(const SkewPoint& p, const CFNumber& alpha) {
  return {rotate(p.base, alpha, 1), p.level + sign_f(p.base)};
}

SkewPoint skew_iterate(const SkewPoint& p, const CFNumber& alpha, std::int64_t n, Precision precision) {
  return {rotate(p.base, alpha, n), p.level + birkhoff(p.base, alpha, n, precision)};
}

OrbitCursor::OrbitCursor(CirclePoint seed, const CFNumber& alpha, Precision precision,
                         EscalationStats* stats, TiePolicy boundaries)
    : seed_(std::move(seed)),
      alpha_(alpha),
      precision_(precision),
      stats_(stats),
      boundaries_(boundaries),
      seed_shadow_(seed_.position.to_certified()),
      alpha_shadow_(alpha_.value().to_certified()) {
  if (precision_ == Precision::exact_only) exact_ = seed_.position;
  refresh_sign();
}

CertifiedFloat OrbitCursor::shadow_with(std::int64_t n, std::int64_t wraps) const {
  if (n >= kMaxExactDoubleInt || n <= -kMaxExactDoubleInt) {
    throw DomainError("OrbitCursor: |n| beyond 2^53 is not supported by the float path");
  }
  const double nd = static_cast<double>(n);
  const double wd = static_cast<double>(wraps);
  const double offset = seed_shadow_.approx - wd;
  const double approx = std::fma(nd, alpha_shadow_.approx, offset);
  const double radius = seed_shadow_.radius + std::abs(nd) * alpha_shadow_.radius +
                        2.0 * kUnitRoundoff * (std::abs(nd) * alpha_shadow_.approx + std::abs(wd) + 2.0);
  return {approx, radius};
}

SurdReal OrbitCursor::exact_with(std::int64_t n, std::int64_t wraps) const {
  return seed_.position + alpha_.value() * SurdReal(static_cast<long>(n)) -
         SurdReal(static_cast<long>(wraps));
}

CertifiedFloat OrbitCursor::shadow() const {
  if (exact_) return exact_->to_certified();
  return shadow_with(n_, wraps_);
}

SurdReal OrbitCursor::position() const {
  if (exact_) return *exact_;
  return exact_with(n_, wraps_);
}

std::strong_ordering OrbitCursor::compare(const SurdReal& threshold,
                                          const CertifiedFloat& threshold_shadow) const {
  if (exact_) return *exact_ <=> threshold;
  return certified_compare(
      shadow_with(n_, wraps_), threshold_shadow, threshold, [this] { return exact_with(n_, wraps_); },
      stats_, TiePolicy::allow);
}

void OrbitCursor::refresh_sign() {
  std::strong_ordering side = compare(half(), half_shadow());
  if (side == std::strong_ordering::equal && n_ != 0 && boundaries_ == TiePolicy::forbid) {
    boundary_hit(n_, "1/2");
  }
  sign_ = side == std::strong_ordering::less ? +1 : -1;
}

void OrbitCursor::advance() {
  const std::int64_t next = n_ + 1;
  std::strong_ordering wrap = std::strong_ordering::equal;
  if (exact_) {
    *exact_ += alpha_.value();
    wrap = *exact_ <=> one();
    if (wrap != std::strong_ordering::less) *exact_ -= one();
  } else {
    wrap = certified_compare(
        shadow_with(next, wraps_), one_shadow(), one(),
        [this, next] { return exact_with(next, wraps_); }, stats_, TiePolicy::allow);
  }
  if (wrap != std::strong_ordering::less) ++wraps_;
  if (wrap == std::strong_ordering::equal && next != 0 && boundaries_ == TiePolicy::forbid) {
    boundary_hit(next, "0");
  }
  n_ = next;
  refresh_sign();
}

void OrbitCursor::retreat() {
  const std::int64_t prev = n_ - 1;
  std::strong_ordering side = std::strong_ordering::equal;
  if (exact_) {
    *exact_ -= alpha_.value();
    side = exact_->sign() <=> 0;
    if (side == std::strong_ordering::less) *exact_ += one();
  } else {
    side = certified_compare(
        shadow_with(prev, wraps_), zero_shadow(), SurdReal(0),
        [this, prev] { return exact_with(prev, wraps_); }, stats_, TiePolicy::allow);
  }
  if (side == std::strong_ordering::less) --wraps_;
  if (side == std::strong_ordering::equal && prev != 0 && boundaries_ == TiePolicy::forbid) {
    boundary_hit(prev, "0");
  }
  n_ = prev;
  refresh_sign();
}

void OrbitCursor::seek(std::int64_t n) {
  std::int64_t wraps = 0;
  bool decided = false;
  if (!exact_) {
    CertifiedFloat v = shadow_with(n, 0);
    const double fl = std::floor(v.approx);
    if (stats_ != nullptr) ++stats_->comparisons;
    if (v.lo() >= fl && v.hi() < fl + 1.0) {
      wraps = static_cast<std::int64_t>(fl);
      decided = true;
    } else if (stats_ != nullptr) {
      ++stats_->escalations;
    }
  }
  if (!decided) {
    SurdReal unwrapped = exact_with(n, 0);
    mpz_class fl = unwrapped.floor();
    if (!fl.fits_slong_p()) throw DomainError("OrbitCursor::seek: wrap count exceeds 64 bits");
    wraps = fl.get_si();
    if (unwrapped == SurdReal(fl) && n != 0 && boundaries_ == TiePolicy::forbid) boundary_hit(n, "0");
  }
  n_ = n;
  wraps_ = wraps;
  if (exact_) exact_ = exact_with(n_, wraps_);
  refresh_sign();
}

std::int64_t birkhoff(const CirclePoint& x, const CFNumber& alpha, std::int64_t n, Precision precision) {
  OrbitCursor cursor(x, alpha, precision);
  std::int64_t sum = 0;
  if (n >= 0) {
    for (std::int64_t i = 0; i < n; ++i) {
      sum += cursor.sign();
      cursor.advance();
    }
  } else {
    for (std::int64_t k = 1; k <= -n; ++k) {
      cursor.retreat();
      sum -= cursor.sign();
    }
  }
  return sum;
}

void scan_orbit(const CirclePoint& x, const CFNumber& alpha, std::int64_t horizon, bool backward,
                Precision precision, EscalationStats* stats,
                const std::function<void(std::int64_t, std::int64_t, const OrbitCursor&)>& visit) {
  if (horizon < 0) throw DomainError("scan_orbit: horizon must be >= 0");
  OrbitCursor cursor(x, alpha, precision, stats);
  std::int64_t sum = 0;
  visit(0, 0, cursor);
  for (std::int64_t k = 1; k <= horizon; ++k) {
    if (backward) {
      cursor.retreat();
      sum -= cursor.sign();
    } else {
      sum += cursor.sign();
      cursor.advance();
    }
    visit(cursor.time(), sum, cursor);
  }
}

CirclePoint VisitSet::exact_position(const CirclePoint& x, const CFNumber& alpha, std::size_t i) const {
  return rotate(x, alpha, times.at(i) + shift);
}

VisitSet visit_set(const CirclePoint& x, const CFNumber& alpha, std::int64_t m, std::int64_t horizon,
                   std::int64_t shift, Precision precision, EscalationStats* stats) {
  if (horizon < 0) throw DomainError("visit_set: horizon must be >= 0");
  VisitSet out;
  out.m = m;
  out.horizon = horizon;
  out.shift = shift;
  OrbitCursor shifted(x, alpha, precision, stats);
  if (shift != 0) shifted.seek(shift);
  scan_orbit(x, alpha, horizon, false, precision, stats,
             [&](std::int64_t n, std::int64_t sum, const OrbitCursor& cursor) {
               if (n > 0) shifted.advance();
               if (sum != m) return;
               out.times.push_back(n);
               out.positions.push_back(shift == 0 ? cursor.shadow() : shifted.shadow());
             });
  return out;
}

SurdReal max_gap(std::span<const CirclePoint> points) {
  if (points.empty()) throw DomainError("max_gap: empty point set");
  std::vector<SurdReal> sorted;
  sorted.reserve(points.size());
  for (const auto& p : points) sorted.push_back(p.position);
  std::sort(sorted.begin(), sorted.end());
  SurdReal best = SurdReal(1) - sorted.back() + sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    SurdReal gap = sorted[i] - sorted[i - 1];
    if (gap > best) best = std::move(gap);
  }
  return best;
}

double max_gap(std::vector<double> points) {
  if (points.empty()) throw DomainError("max_gap: empty point set");
  std::sort(points.begin(), points.end());
  double best = 1.0 - points.back() + points.front();
  for (std::size_t i = 1; i < points.size(); ++i) best = std::max(best, points[i] - points[i - 1]);
  return best;
}

}  // namespace rotn
