#pragma once

#include <compare>
#include <cstdint>
#include <functional>

#include "rotn/surd.hpp"

namespace rotn {

/// A double with an absolute error radius: the exact value lies in
/// [approx - radius, approx + radius].
struct CertifiedFloat {
  double approx = 0.0;
  double radius = 0.0;

  /// Lower and upper bounds, rounded outward.
  double lo() const;
  double hi() const;
};

/// Counters for how often the float path had to hand off to exact arithmetic.
struct EscalationStats {
  std::uint64_t comparisons = 0;
  std::uint64_t escalations = 0;
};

enum class TiePolicy {
  forbid,  // an exact tie is an upstream bug and throws ArithmeticInvariantError
  allow,   // ties are legitimate and resolve to std::strong_ordering::equal
};

/// Orders the exact value behind `x` against `threshold`.
///
/// The float interval decides whenever it excludes the threshold's own
/// interval; otherwise `exact` is invoked and the comparison is redone in
/// SurdReal arithmetic. No tuning constant is involved.
std::strong_ordering certified_compare(const CertifiedFloat& x, const SurdReal& threshold,
                                       const std::function<SurdReal()>& exact,
                                       EscalationStats* stats = nullptr,
                                       TiePolicy ties = TiePolicy::forbid);

/// Same, with a precomputed certified shadow for the threshold.
std::strong_ordering certified_compare(const CertifiedFloat& x, const CertifiedFloat& threshold_shadow,
                                       const SurdReal& threshold,
                                       const std::function<SurdReal()>& exact,
                                       EscalationStats* stats = nullptr,
                                       TiePolicy ties = TiePolicy::forbid);

}  // namespace rotn
