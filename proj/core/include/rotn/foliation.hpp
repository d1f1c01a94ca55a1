#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rotn/certified.hpp"
#include "rotn/cf.hpp"
#include "rotn/circle.hpp"
#include "rotn/report.hpp"
#include "rotn/surd.hpp"

namespace rotn {

// Leaves of the chain of unit squares R_j, j in Z. A leaf meets each square
// in vertical segments {x} x [0, 1]; going up at x it turns at the top onto
// {b(x)} going down, then leaves through the bottom into R_{j +- 1} going up
// at 1 - b(x).

enum class Direction { up, down };

struct LeafState {
  CirclePoint x;
  std::int64_t rectangle = 0;
  Direction dir = Direction::up;
};

/// b(x) = 1 - alpha - x for x < 1 - alpha, 2 - alpha - x for x > 1 - alpha.
CirclePoint leaf_turn(const CirclePoint& x, const CFNumber& alpha);

/// One literal move of the tracer: an upward segment turns at the top, a
/// downward segment exits through the bottom into the neighbouring square.
LeafState leaf_step(const LeafState& state, const CFNumber& alpha);

/// An upward entry of a leaf into a square.
///
/// `x` is t^time(seed) = seed + time*alpha - wraps, so (time, wraps)
/// recovers the exact coordinate. Rays number their entries from 1 with
/// time = step - 1; other leaves use time = step. `level` is the skew-product coordinate
/// over this point; the square index is level + f(x).
struct LeafEntry {
  std::int64_t step = 0;
  std::int64_t time = 0;
  std::int64_t wraps = 0;
  CertifiedFloat x;
  int sign = 0;  // f(x)
  std::int64_t level = 0;
  std::int64_t rectangle = 0;
};

struct LeafTrace {
  CirclePoint seed;
  std::int64_t seed_level = 0;
  bool backward = false;
  std::int64_t steps = 0;

  /// Entries in visiting order; only the first `store_limit` are kept.
  std::vector<LeafEntry> entries;

  std::int64_t min_level = 0;
  std::int64_t max_level = 0;
  std::int64_t min_rectangle = 0;
  std::int64_t max_rectangle = 0;
  /// First step at which each square index was entered.
  std::map<std::int64_t, std::int64_t> first_entry;

  CirclePoint exact_x(const CFNumber& alpha, const LeafEntry& e) const;
};

struct TraceOptions {
  std::size_t store_limit = 1'000'000;
  Precision precision = Precision::certified_fast;
  EscalationStats* stats = nullptr;
};

using LeafVisitor = std::function<void(const LeafEntry&)>;

/// The ray r_i leaving the singularity (1/2, 0, i) upwards. Entry n >= 1 is
/// (t^{n-1}(1/2), i + 1 + S_n(1/2)).
LeafTrace trace_ray(const CFNumber& alpha, std::int64_t ray, std::int64_t steps,
                    const TraceOptions& options = {}, const LeafVisitor& visit = {});

/// The leaf through the skew point (x0, j0), forward or backward. Entry n has
/// level j0 + S_n(x0) for signed n.
LeafTrace trace_leaf_through(const CFNumber& alpha, const CirclePoint& x0, std::int64_t j0, std::int64_t steps,
                             bool backward, const TraceOptions& options = {}, const LeafVisitor& visit = {});

/// Checks for the orbit of (1+alpha)/2 with alpha = [0; 2m+1, (2m+2)]:
/// the recursions and closed forms for the maxima M_+^k, M_-^k, M_0^k up to
/// k_max against word statistics, the block word's running maximum -1, its
/// agreement with direct simulation for the first `horizon` letters, and
/// max_{1<=n<=horizon} S_n = -1 directly.
CheckReport example_m_formulas(unsigned m, unsigned k_max, std::int64_t horizon = 0);

/// [0; 2m+1, (2m+2)].
CFNumber example_alpha(unsigned m);
/// (1 + alpha) / 2.
CirclePoint example_seed(const CFNumber& alpha);

}  // namespace rotn
