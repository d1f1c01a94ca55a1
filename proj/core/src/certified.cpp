#include "rotn/certified.hpp"

#include <cmath>
#include <limits>

namespace rotn {

double CertifiedFloat::lo() const {
  return std::nextafter(approx - radius, -std::numeric_limits<double>::infinity());
}

double CertifiedFloat::hi() const {
  return std::nextafter(approx + radius, std::numeric_limits<double>::infinity());
}

std::strong_ordering certified_compare(const CertifiedFloat& x, const CertifiedFloat& threshold_shadow,
                                       const SurdReal& threshold,
                                       const std::function<SurdReal()>& exact,
                                       EscalationStats* stats, TiePolicy ties) {
  if (stats != nullptr) ++stats->comparisons;
  if (x.lo() > threshold_shadow.hi()) return std::strong_ordering::greater;
  if (x.hi() < threshold_shadow.lo()) return std::strong_ordering::less;

  if (stats != nullptr) ++stats->escalations;
  const std::strong_ordering order = exact() <=> threshold;
  if (order == std::strong_ordering::equal && ties == TiePolicy::forbid) {
    throw ArithmeticInvariantError("certified_compare: exact tie with threshold " + threshold.str() +
                                   " for a value that cannot equal it");
  }
  return order;
}

std::strong_ordering certified_compare(const CertifiedFloat& x, const SurdReal& threshold,
                                       const std::function<SurdReal()>& exact,
                                       EscalationStats* stats, TiePolicy ties) {
  return certified_compare(x, threshold.to_certified(), threshold, exact, stats, ties);
}

}  // namespace rotn
