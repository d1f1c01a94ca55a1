#include "rotn/renorm.hpp"

#include <sstream>
#include <string>
#include <utility>

namespace rotn {

namespace {

const SurdReal& half() {
  static const SurdReal value = SurdReal::rational(1, 2);
  return value;
}

std::string level_tag(const RenormLevel& level) { return "level " + std::to_string(level.index); }

struct StepShape {
  unsigned n;
  SurdReal gauss;  // G(|beta|)
};

StepShape check_step_preconditions(const RenormLevel& level, int expected_sign, const char* op) {
  if (level.beta_sign() != expected_sign) {
    throw DomainError(std::string(op) + ": " + level_tag(level) + " has beta of the wrong sign");
  }
  const Coefficient b = level.beta_cf.coefficient(1);
  if (b % 2 == 0 || b < 5) {
    throw DomainError(std::string(op) + ": first coefficient b = " + std::to_string(b) + " of " +
                      level.beta_cf.str() + " must be odd and >= 5");
  }
  const Coefficient c_plus_one = level.beta_cf.coefficient(2);
  if (c_plus_one < 4) {
    throw DomainError(std::string(op) + ": second coefficient " + std::to_string(c_plus_one) + " of " +
                      level.beta_cf.str() + " must be >= 4 (c >= 3)");
  }
  return {(b - 1) / 2, gauss_step(level.beta.abs())};
}

RenormLevel make_child(const RenormLevel& level, const StepShape& shape, int child_sign, SignWord plus,
                       SignWord minus, SignWord zero) {
  const SurdReal gamma = level.beta.abs();
  const SurdReal one_minus_g = SurdReal(1) - shape.gauss;
  const SurdReal half_width = gamma * one_minus_g / SurdReal(2);
  ExactInterval child_interval{level.interval.global(half() - half_width),
                               level.interval.global(half() + half_width)};

  SurdReal child_beta = shape.gauss / one_minus_g;
  if (child_sign < 0) child_beta = -child_beta;

  CFNumber child_cf = alpha_next(level.beta_cf);
  if (child_cf.value() != child_beta.abs()) {
    throw ArithmeticInvariantError("renorm step: G/(1-G) = " + child_beta.abs().str() +
                                   " disagrees with shifted continued fraction " + child_cf.str());
  }
  const Coefficient b_child = child_cf.coefficient(1);
  return RenormLevel{level.index + 1,
                     std::move(child_interval),
                     std::move(child_beta),
                     child_cf,
                     std::move(plus),
                     std::move(minus),
                     std::move(zero),
                     (b_child - 1) / 2};
}

SignWord pow_or_empty(const SignWord& w, std::uint64_t k) {
  return k == 0 ? SignWord::empty() : SignWord::power(w, k);
}

}  // namespace

std::array<CaseRegion, 3> case_regions(const RenormLevel& level) {
  if (level.beta_sign() > 0) {
    const SurdReal cut = SurdReal(1) - level.beta;
    return {CaseRegion{SurdReal(0), half(), ReturnCase::plus}, CaseRegion{half(), cut, ReturnCase::minus},
            CaseRegion{cut, SurdReal(1), ReturnCase::minus_zero}};
  }
  const SurdReal gamma = -level.beta;
  return {CaseRegion{SurdReal(0), gamma, ReturnCase::plus_zero}, CaseRegion{gamma, half(), ReturnCase::plus},
          CaseRegion{half(), SurdReal(1), ReturnCase::minus}};
}

SignWord word_for(const RenormLevel& level, ReturnCase which) {
  switch (which) {
    case ReturnCase::plus:
      return level.plus;
    case ReturnCase::plus_zero:
      return SignWord::concat(level.plus, level.zero);
    case ReturnCase::minus:
      return level.minus;
    case ReturnCase::minus_zero:
      return SignWord::concat(level.minus, level.zero);
  }
  return {};
}

RenormLevel base_level(const CFNumber& alpha) {
  const Coefficient a1 = alpha.coefficient(1);
  if (a1 % 2 == 0 || a1 < 5) {
    throw DomainError("base_level: a_1 = " + std::to_string(a1) + " of " + alpha.str() +
                      " must be odd and >= 5");
  }
  // Coefficients a_2 .. a_{1 + |pre| + |period|} cover every distinct value.
  const std::size_t span = alpha.preperiod().size() + alpha.period().size() + 1;
  for (std::size_t k = 2; k <= span; ++k) {
    const Coefficient a = alpha.coefficient(k);
    if (a % 2 != 0 || a < 6) {
      throw DomainError("base_level: a_" + std::to_string(k) + " = " + std::to_string(a) + " of " +
                        alpha.str() + " must be even and >= 6");
    }
  }
  return RenormLevel{1,
                     ExactInterval{SurdReal(0), SurdReal(1)},
                     alpha.value(),
                     alpha,
                     SignWord::atom(+1),
                     SignWord::atom(-1),
                     SignWord::empty(),
                     (a1 - 1) / 2};
}

RenormLevel step_positive(const RenormLevel& level) {
  const StepShape shape = check_step_preconditions(level, +1, "step_positive");
  const unsigned n = shape.n;
  const SignWord& fp = level.plus;
  const SignWord& fm = level.minus;
  const SignWord& f0 = level.zero;
  SignWord plus = concat_all({fp, pow_or_empty(fm, n), f0, pow_or_empty(fp, n)});
  SignWord minus = concat_all({SignWord::power(fm, n + 1), f0, pow_or_empty(fp, n)});
  SignWord zero = concat_all({fp, SignWord::power(fm, n + 1), f0, pow_or_empty(fp, n)});
  return make_child(level, shape, -1, std::move(plus), std::move(minus), std::move(zero));
}

RenormLevel step_negative(const RenormLevel& level) {
  const StepShape shape = check_step_preconditions(level, -1, "step_negative");
  const unsigned n = shape.n;
  const SignWord& fp = level.plus;
  const SignWord& fm = level.minus;
  const SignWord& f0 = level.zero;
  SignWord plus = concat_all({SignWord::power(fp, n + 1), f0, pow_or_empty(fm, n)});
  SignWord minus = concat_all({fm, pow_or_empty(fp, n), f0, pow_or_empty(fm, n)});
  SignWord zero = concat_all({fm, SignWord::power(fp, n + 1), f0, pow_or_empty(fm, n)});
  return make_child(level, shape, +1, std::move(plus), std::move(minus), std::move(zero));
}

RenormLevel step(const RenormLevel& level) {
  return level.beta_sign() > 0 ? step_positive(level) : step_negative(level);
}

std::vector<RenormLevel> tower(const CFNumber& alpha, std::size_t depth) {
  if (depth == 0) throw DomainError("tower: depth must be >= 1");
  std::vector<RenormLevel> levels;
  levels.reserve(depth);
  levels.push_back(base_level(alpha));
  while (levels.size() < depth) levels.push_back(step(levels.back()));
  return levels;
}

CheckReport verify_level(const RenormLevel& level) {
  CheckReport report;
  const std::string tag = level_tag(level);
  report.add(tag + ": total(F_+) = +1", level.plus.total() == 1, level.plus.total().get_str());
  report.add(tag + ": total(F_-) = -1", level.minus.total() == -1, level.minus.total().get_str());
  report.add(tag + ": total(F_0) = 0", level.zero.total() == 0, level.zero.total().get_str());
  report.add(tag + ": |beta| < 1/5", level.beta.abs() < SurdReal::rational(1, 5), level.beta.str());
  const int expected_sign = level.index % 2 == 1 ? +1 : -1;
  report.add(tag + ": sign(beta) = (-1)^(i+1)", level.beta_sign() == expected_sign);
  report.add(tag + ": |beta| matches its continued fraction", level.beta_cf.value() == level.beta.abs());
  report.add(tag + ": interval symmetric about 1/2",
             level.interval.left + level.interval.right == SurdReal(1));
  report.add(tag + ": interval contains 1/2", level.interval.contains(half()));
  for (const auto* w : {&level.plus, &level.minus}) {
    const bool ok = w->min_prefix() <= w->total() && w->total() <= w->max_prefix();
    report.add(tag + ": min prefix <= total <= max prefix", ok);
  }
  return report;
}

CheckReport verify_bounds(const RenormLevel& parent, const RenormLevel& child) {
  CheckReport report;
  const std::string tag = level_tag(parent) + "->" + std::to_string(child.index);
  const mpz_class n = parent.n_half;
  const mpz_class& Mp = parent.plus.max_prefix();
  const mpz_class& mp = parent.plus.min_prefix();
  const mpz_class& Mm = parent.minus.max_prefix();
  const mpz_class& mm = parent.minus.min_prefix();
  const mpz_class& Mp_new = child.plus.max_prefix();
  const mpz_class& mp_new = child.plus.min_prefix();
  const mpz_class& Mm_new = child.minus.max_prefix();
  const mpz_class& mm_new = child.minus.min_prefix();

  auto describe = [](const mpz_class& lhs, const char* op, const mpz_class& rhs) {
    return lhs.get_str() + " " + op + " " + rhs.get_str();
  };
  if (parent.beta_sign() > 0) {
    report.add(tag + ": M_+new >= M_+", Mp_new >= Mp, describe(Mp_new, ">=", Mp));
    report.add(tag + ": m_+new <= m_- - (n-2)", mp_new <= mm - (n - 2), describe(mp_new, "<=", mm - (n - 2)));
    report.add(tag + ": M_-new >= M_-", Mm_new >= Mm, describe(Mm_new, ">=", Mm));
    report.add(tag + ": m_-new <= m_- - n", mm_new <= mm - n, describe(mm_new, "<=", mm - n));
  } else {
    report.add(tag + ": M_+new >= M_+ + n", Mp_new >= Mp + n, describe(Mp_new, ">=", Mp + n));
    report.add(tag + ": m_+new <= m_+", mp_new <= mp, describe(mp_new, "<=", mp));
    report.add(tag + ": M_-new >= M_+ + (n-2)", Mm_new >= Mp + (n - 2), describe(Mm_new, ">=", Mp + (n - 2)));
    report.add(tag + ": m_-new <= m_-", mm_new <= mm, describe(mm_new, "<=", mm));
  }
  return report;
}

CheckReport verify_tower(std::span<const RenormLevel> levels) {
  CheckReport report;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    report.merge(verify_level(levels[i]));
    if (i + 1 < levels.size()) {
      const RenormLevel& parent = levels[i];
      const RenormLevel& child = levels[i + 1];
      report.merge(verify_bounds(parent, child));
      report.add(level_tag(child) + ": |I_{i+1}| <= |beta_i| |I_i|",
                 child.interval.length() <= parent.beta.abs() * parent.interval.length());
    }
  }
  // Index arithmetic below is on 1-based level numbers.
  auto at = [&](std::size_t level_number) -> const RenormLevel& { return levels[level_number - 1]; };
  for (std::size_t i = 1; i + 2 <= levels.size(); ++i) {
    const mpz_class lhs = at(i + 2).minus.min_prefix();
    const mpz_class rhs = at(i).minus.min_prefix() - 2;
    report.add("m_-^" + std::to_string(i + 2) + " <= m_-^" + std::to_string(i) + " - 2", lhs <= rhs,
               lhs.get_str() + " <= " + rhs.get_str());
  }
  for (std::size_t i = 1; 2 * i + 2 <= levels.size(); ++i) {
    const mpz_class top = at(2 * i + 2).minus.max_prefix();
    const mpz_class mid = at(2 * i + 1).minus.max_prefix();
    const mpz_class low = at(2 * i).plus.max_prefix() + (mpz_class(at(2 * i).n_half) - 2);
    const std::string name = "M_-^" + std::to_string(2 * i + 2) + " >= M_-^" + std::to_string(2 * i + 1) +
                             " >= M_+^" + std::to_string(2 * i) + " + (n-2)";
    report.add(name, top >= mid && mid >= low, top.get_str() + " >= " + mid.get_str() + " >= " + low.get_str());
  }
  return report;
}

ReturnRecord oracle_first_return(const RenormLevel& level, const CirclePoint& x, const CFNumber& alpha,
                                 Precision precision, EscalationStats* stats) {
  const ExactInterval& I = level.interval;
  if (!I.contains(x.position)) {
    throw DomainError("oracle_first_return: " + x.position.str() + " is not in the " + level_tag(level) +
                      " interval");
  }
  const mpz_class budget_big = 10 * SignWord::concat(level.zero, level.minus).length();
  if (!budget_big.fits_ulong_p()) throw DomainError("oracle_first_return: return budget exceeds 64 bits");
  const std::uint64_t budget = budget_big.get_ui();

  const CertifiedFloat left_shadow = I.left.to_certified();
  const CertifiedFloat right_shadow = I.right.to_certified();
  OrbitCursor cursor(x, alpha, precision, stats);
  ReturnRecord record;
  record.start = x;
  for (std::uint64_t k = 1; k <= budget; ++k) {
    record.word.push_back(cursor.sign());
    cursor.advance();
    if (cursor.compare(I.left, left_shadow) != std::strong_ordering::less &&
        cursor.compare(I.right, right_shadow) == std::strong_ordering::less) {
      record.time = k;
      record.landing = CirclePoint(cursor.position());
      return record;
    }
  }
  throw ArithmeticInvariantError("oracle_first_return: no return to " + level_tag(level) + " within " +
                                 std::to_string(budget) + " steps");
}

SignWord predicted_return_word(const RenormLevel& level, const CirclePoint& x) {
  const ExactInterval& I = level.interval;
  if (!I.contains(x.position)) {
    throw DomainError("predicted_return_word: point is not in the " + level_tag(level) + " interval");
  }
  const SurdReal u = I.local(x.position);
  for (const CaseRegion& region : case_regions(level)) {
    if (u == region.lo && region.lo != half() && region.lo.sign() != 0) {
      throw DomainError("predicted_return_word: point sits exactly on the case boundary " + region.lo.str());
    }
    if (region.lo <= u && u < region.hi) return word_for(level, region.which);
  }
  throw ArithmeticInvariantError("predicted_return_word: case regions do not cover [0, 1)");
}

CirclePoint predicted_landing(const RenormLevel& level, const CirclePoint& x) {
  const SurdReal u = level.interval.local(x.position);
  return CirclePoint(level.interval.global((u + level.beta).frac()));
}

FastBirkhoff::FastBirkhoff(const CFNumber& alpha, std::size_t depth_hint, bool auto_extend)
    : levels_(tower(alpha, std::max<std::size_t>(1, depth_hint))), auto_extend_(auto_extend) {}

const RenormLevel& FastBirkhoff::covering_level(const mpz_class& n) {
  for (const RenormLevel& level : levels_) {
    if (level.minus.length() >= n) return level;
  }
  if (!auto_extend_) {
    throw DomainError("fast_birkhoff: tower depth " + std::to_string(levels_.size()) + " covers only " +
                      levels_.back().minus.length().get_str() + " steps, need " + n.get_str());
  }
  while (levels_.back().minus.length() < n) levels_.push_back(step(levels_.back()));
  return levels_.back();
}

std::int64_t FastBirkhoff::at(const mpz_class& n) {
  if (n < 0) throw DomainError("fast_birkhoff: n must be >= 0");
  if (n == 0) return 0;
  const mpz_class s = prefix_sum_at(covering_level(n).minus, n);
  return s.get_si();
}

std::int64_t FastBirkhoff::operator()(std::uint64_t n) { return at(mpz_class(static_cast<unsigned long>(n))); }

std::int64_t fast_birkhoff(const CFNumber& alpha, std::uint64_t n, std::size_t depth_hint, bool auto_extend) {
  FastBirkhoff fb(alpha, depth_hint, auto_extend);
  return fb(n);
}

}  // namespace rotn
