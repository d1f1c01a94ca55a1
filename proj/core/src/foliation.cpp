#include "rotn/foliation.hpp"

#include <algorithm>
#include <string>

#include "rotn/renorm.hpp"
#include "rotn/words.hpp"

namespace rotn {

namespace {

const SurdReal& half() {
  static const SurdReal value = SurdReal::rational(1, 2);
  return value;
}

class TraceBuilder {
 public:
  TraceBuilder(LeafTrace& trace, const TraceOptions& options, const LeafVisitor& visit)
      : trace_(trace), options_(options), visit_(visit) {}

  void record(const OrbitCursor& cursor, std::int64_t step, std::int64_t rectangle) {
    LeafEntry e;
    e.step = step;
    e.time = cursor.time();
    e.wraps = cursor.wraps();
    e.x = cursor.shadow();
    e.sign = cursor.sign();
    e.rectangle = rectangle;
    e.level = rectangle - e.sign;
    if (first_) {
      trace_.min_level = trace_.max_level = e.level;
      trace_.min_rectangle = trace_.max_rectangle = e.rectangle;
      first_ = false;
    } else {
      trace_.min_level = std::min(trace_.min_level, e.level);
      trace_.max_level = std::max(trace_.max_level, e.level);
      trace_.min_rectangle = std::min(trace_.min_rectangle, e.rectangle);
      trace_.max_rectangle = std::max(trace_.max_rectangle, e.rectangle);
    }
    trace_.first_entry.emplace(e.rectangle, e.step);
    if (trace_.entries.size() < options_.store_limit) trace_.entries.push_back(e);
    if (visit_) visit_(e);
  }

 private:
  LeafTrace& trace_;
  const TraceOptions& options_;
  const LeafVisitor& visit_;
  bool first_ = true;
};

// Moves the entry point one square along the leaf. Forward: turn at the top
// onto b(x) = 1 - t(x) and drop into R_{j + f(t(x))}, since b(x) > 1/2
// exactly when t(x) < 1/2. Backward undoes that move.
void move_forward(OrbitCursor& cursor, std::int64_t& rectangle) {
  cursor.advance();
  rectangle += cursor.sign();
}

void move_backward(OrbitCursor& cursor, std::int64_t& rectangle) {
  rectangle -= cursor.sign();
  cursor.retreat();
}

}  // namespace

CirclePoint leaf_turn(const CirclePoint& x, const CFNumber& alpha) {
  const SurdReal cut = SurdReal(1) - alpha.value();
  const std::strong_ordering side = x.position <=> cut;
  if (side == std::strong_ordering::equal) {
    throw DomainError("leaf_turn: x = 1 - alpha is a boundary point of the turn map");
  }
  if (side == std::strong_ordering::less) return CirclePoint(cut - x.position);
  return CirclePoint(SurdReal(2) - alpha.value() - x.position);
}

LeafState leaf_step(const LeafState& state, const CFNumber& alpha) {
  if (state.dir == Direction::up) {
    return {leaf_turn(state.x, alpha), state.rectangle, Direction::down};
  }
  const std::strong_ordering side = state.x.position <=> half();
  if (side == std::strong_ordering::equal) {
    throw ArithmeticInvariantError("leaf_step: downward segment exits exactly at 1/2");
  }
  const std::int64_t next = state.rectangle + (side == std::strong_ordering::greater ? 1 : -1);
  return {CirclePoint(SurdReal(1) - state.x.position), next, Direction::up};
}

CirclePoint LeafTrace::exact_x(const CFNumber& alpha, const LeafEntry& e) const {
  return CirclePoint(seed.position + alpha.value() * SurdReal(static_cast<long>(e.time)) -
                     SurdReal(static_cast<long>(e.wraps)));
}

LeafTrace trace_ray(const CFNumber& alpha, std::int64_t ray, std::int64_t steps, const TraceOptions& options,
                    const LeafVisitor& visit) {
  if (steps < 1) throw DomainError("trace_ray: steps must be >= 1");
  LeafTrace trace;
  trace.seed = CirclePoint::half();
  trace.seed_level = ray + 1;
  trace.steps = steps;
  TraceBuilder builder(trace, options, visit);
  OrbitCursor cursor(trace.seed, alpha, options.precision, options.stats);
  std::int64_t rectangle = ray;
  // Entry n sits at t^{n-1}(1/2); the stored step is n.
  for (std::int64_t n = 1; n <= steps; ++n) {
    if (n > 1) move_forward(cursor, rectangle);
    builder.record(cursor, n, rectangle);
  }
  return trace;
}

LeafTrace trace_leaf_through(const CFNumber& alpha, const CirclePoint& x0, std::int64_t j0, std::int64_t steps,
                             bool backward, const TraceOptions& options, const LeafVisitor& visit) {
  if (steps < 0) throw DomainError("trace_leaf_through: steps must be >= 0");
  LeafTrace trace;
  trace.seed = x0;
  trace.seed_level = j0;
  trace.backward = backward;
  trace.steps = steps;
  TraceBuilder builder(trace, options, visit);
  OrbitCursor cursor(x0, alpha, options.precision, options.stats);
  std::int64_t rectangle = j0 + cursor.sign();
  builder.record(cursor, 0, rectangle);
  for (std::int64_t k = 1; k <= steps; ++k) {
    if (backward) {
      move_backward(cursor, rectangle);
    } else {
      move_forward(cursor, rectangle);
    }
    builder.record(cursor, cursor.time(), rectangle);
  }
  return trace;
}

CFNumber example_alpha(unsigned m) {
  if (m < 2) throw DomainError("example_alpha: m must be >= 2");
  return CFNumber({2 * m + 1}, {2 * m + 2});
}

CirclePoint example_seed(const CFNumber& alpha) {
  return CirclePoint((SurdReal(1) + alpha.value()) / SurdReal(2));
}

CheckReport example_m_formulas(unsigned m, unsigned k_max, std::int64_t horizon) {
  if (k_max < 1) throw DomainError("example_m_formulas: k_max must be >= 1");
  const CFNumber alpha = example_alpha(m);
  const std::vector<RenormLevel> levels = tower(alpha, 2 * static_cast<std::size_t>(k_max) + 1);
  auto plus_max = [&](std::size_t i) { return levels[i - 1].plus.max_prefix(); };
  auto minus_max = [&](std::size_t i) { return levels[i - 1].minus.max_prefix(); };
  auto zero_max = [&](std::size_t i) { return levels[i - 1].zero.max_prefix(); };

  CheckReport report;
  const std::string tag = "m=" + std::to_string(m);
  const mpz_class mm = m;
  auto check = [&](std::size_t k, const std::string& formula, const mpz_class& got, const mpz_class& want) {
    report.add(tag + " k=" + std::to_string(k) + ": " + formula, got == want,
               "stats " + got.get_str() + ", formula " + want.get_str());
  };

  for (std::size_t k = 1; k <= k_max; ++k) {
    const std::size_t even = 2 * k;
    const std::size_t odd = 2 * k + 1;
    check(k, "M^{2k}_+ = M^{2k-1}_+", plus_max(even), plus_max(even - 1));
    check(k, "M^{2k}_- = M^{2k-1}_-", minus_max(even), minus_max(even - 1));
    check(k, "M^{2k}_0 = M^{2k-1}_+", zero_max(even), plus_max(even - 1));
    check(k, "M^{2k+1}_+ = M^{2k}_0 + m + 1", plus_max(odd), zero_max(even) + mm + 1);
    check(k, "M^{2k+1}_- = M^{2k}_0 + m - 1", minus_max(odd), zero_max(even) + mm - 1);
    check(k, "M^{2k+1}_0 = M^{2k}_0 + m", zero_max(odd), zero_max(even) + mm);

    const mpz_class closed = (mm + 1) * mpz_class(static_cast<unsigned long>(k)) - mm;
    check(k, "M^{2k}_+ = (m+1)k - m", plus_max(even), closed);
    check(k, "M^{2k}_- = (m+1)k - m - 2", minus_max(even), closed - 2);
    check(k, "M^{2k}_0 = (m+1)k - m", zero_max(even), closed);
    if (k >= 2) {
      check(k, "M^{2k-1}_+ = (m+1)k - m", plus_max(even - 1), closed);
      check(k, "M^{2k-1}_- = (m+1)k - m - 2", minus_max(even - 1), closed - 2);
      check(k, "M^{2k-1}_0 = (m+1)k - m - 1", zero_max(even - 1), closed - 1);
    }
  }

  // The bracket word [(F^{2j-1}_-)^{m+1} (F^{2j-1}_+)^m (F^{2j}_-)^m], j = 1, 2, ...
  // Its running maximum is checked at every block boundary.
  SignWord brackets;
  for (std::size_t j = 1; j <= k_max; ++j) {
    const RenormLevel& odd_level = levels[2 * j - 2];
    const RenormLevel& even_level = levels[2 * j - 1];
    brackets = concat_all({brackets, SignWord::power(odd_level.minus, m + 1), SignWord::power(odd_level.plus, m),
                           SignWord::power(even_level.minus, m)});
    report.add(tag + " blocks=" + std::to_string(j) + ": running maximum of the bracket word is -1",
               brackets.max_prefix() == -1, "max prefix " + brackets.max_prefix().get_str());
  }

  // The orbit itself: the (m+1)-th return to I_{2j-1} starts at local
  // coordinate 1/2 + (m + 1/2) beta >= 1 - beta, so it collects F_- F_0.
  // F^1_0 is empty, which hides the difference in the first bracket.
  SignWord blocks;
  for (std::size_t j = 1; j <= k_max; ++j) {
    const RenormLevel& odd_level = levels[2 * j - 2];
    const RenormLevel& even_level = levels[2 * j - 1];
    blocks = concat_all({blocks, SignWord::power(odd_level.minus, m + 1), odd_level.zero,
                         SignWord::power(odd_level.plus, m), SignWord::power(even_level.minus, m)});
  }
  report.add(tag + ": running maximum of the orbit word is -1", blocks.max_prefix() == -1,
             "max prefix " + blocks.max_prefix().get_str());

  if (horizon > 0) {
    const CirclePoint x = example_seed(alpha);
    OrbitCursor cursor(x, alpha);
    std::int64_t sum = 0;
    std::int64_t running_max = 0;
    bool first = true;
    std::uint64_t mismatches = 0;
    std::uint64_t first_mismatch = 0;
    std::vector<std::int32_t> forward;
    forward.reserve(static_cast<std::size_t>(horizon) + 1);
    forward.push_back(0);
    const std::uint64_t compared =
        for_each_letter(blocks, static_cast<std::uint64_t>(horizon), [&](int letter) {
          if (letter != cursor.sign() && mismatches++ == 0) {
            first_mismatch = static_cast<std::uint64_t>(cursor.time()) + 1;
          }
          cursor.advance();
          return true;
        });
    report.add(tag + ": orbit word equals the simulated f-values for the first " + std::to_string(compared) +
                   " letters",
               mismatches == 0 && mpz_class(static_cast<unsigned long>(compared)) ==
                                      std::min(mpz_class(static_cast<unsigned long>(horizon)), blocks.length()),
               mismatches == 0 ? "compared " + std::to_string(compared)
                               : "first mismatch at letter " + std::to_string(first_mismatch));

    OrbitCursor fresh(x, alpha);
    for (std::int64_t n = 1; n <= horizon; ++n) {
      sum += fresh.sign();
      fresh.advance();
      forward.push_back(static_cast<std::int32_t>(sum));
      running_max = first ? sum : std::max(running_max, sum);
      first = false;
    }
    report.add(tag + ": max_{1<=n<=" + std::to_string(horizon) + "} S_n((1+alpha)/2) = -1", running_max == -1,
               "observed " + std::to_string(running_max));

    std::int64_t back_sum = 0;
    std::int64_t asym = -1;
    OrbitCursor back(x, alpha);
    for (std::int64_t n = 1; n <= horizon; ++n) {
      back.retreat();
      back_sum -= back.sign();
      if (back_sum != forward[static_cast<std::size_t>(n)] && asym < 0) asym = n;
    }
    report.add(tag + ": S_{-n} = S_n for n <= " + std::to_string(horizon), asym < 0,
               asym < 0 ? std::string{} : "first asymmetry at n = " + std::to_string(asym));
  }
  return report;
}

}  // namespace rotn
