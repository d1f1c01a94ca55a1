#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "rotn/certified.hpp"
#include "rotn/cf.hpp"
#include "rotn/circle.hpp"
#include "rotn/report.hpp"
#include "rotn/surd.hpp"
#include "rotn/words.hpp"

namespace rotn {

/// Half-open [left, right) inside [0, 1).
struct ExactInterval {
  SurdReal left;
  SurdReal right;

  SurdReal length() const { return right - left; }
  bool contains(const SurdReal& x) const { return left <= x && x < right; }
  /// Affine chart onto [0, 1): (x - left) / length.
  SurdReal local(const SurdReal& x) const { return (x - left) / length(); }
  SurdReal global(const SurdReal& u) const { return left + u * length(); }
};

/// One level of the renormalization tower.
///
/// The first-return map of t to `interval`, read in local coordinates, is
/// rotation by `beta`; |beta| has continued fraction `beta_cf`. The three
/// words are the f-values collected before returning, per case region.
struct RenormLevel {
  int index = 1;
  ExactInterval interval;
  SurdReal beta;
  CFNumber beta_cf;
  SignWord plus;
  SignWord minus;
  SignWord zero;
  unsigned n_half = 0;  // first coefficient of |beta| is 2 n_half + 1

  int beta_sign() const { return beta.sign(); }
};

enum class ReturnCase { plus, plus_zero, minus, minus_zero };

/// A piece [lo, hi) of the level's local chart on which the return word is constant.
struct CaseRegion {
  SurdReal lo;
  SurdReal hi;
  ReturnCase which;
};

std::array<CaseRegion, 3> case_regions(const RenormLevel& level);
SignWord word_for(const RenormLevel& level, ReturnCase which);

/// Level 1: I = [0,1), beta = alpha, words (+1), (-1), empty. Validates that
/// a_1 >= 5 is odd and a_k >= 6 is even for k >= 2.
RenormLevel base_level(const CFNumber& alpha);

/// Induction step for beta > 0; the child has beta < 0.
RenormLevel step_positive(const RenormLevel& level);
/// Induction step for beta < 0; the child has beta > 0.
RenormLevel step_negative(const RenormLevel& level);
RenormLevel step(const RenormLevel& level);

/// Levels 1..depth.
std::vector<RenormLevel> tower(const CFNumber& alpha, std::size_t depth);

/// Invariants of a single level (totals, |beta| < 1/5, symmetry, sign parity).
CheckReport verify_level(const RenormLevel& level);

/// The four inequalities relating the extrema of a parent's words to its
/// child's, chosen by the sign of the parent's beta. Uses word statistics
/// only.
CheckReport verify_bounds(const RenormLevel& parent, const RenormLevel& child);

/// verify_level and verify_bounds at every level, the length contraction
/// |I_{i+1}| <= |beta_i| |I_i|, and the two chained consequences
/// m_-^{i+2} <= m_-^i - 2 and M_-^{2i+2} >= M_-^{2i+1} >= M_+^{2i} + (n_{2i} - 2).
CheckReport verify_tower(std::span<const RenormLevel> levels);

/// First return of x to the level's interval, by plain simulation.
struct ReturnRecord {
  CirclePoint start;
  std::uint64_t time = 0;
  std::vector<int> word;
  CirclePoint landing;
};

/// Steps t from x until it re-enters the level's interval. The step budget
/// is 10 * length(F_0 F_-); overrunning it throws ArithmeticInvariantError.
ReturnRecord oracle_first_return(const RenormLevel& level, const CirclePoint& x, const CFNumber& alpha,
                                 Precision precision = Precision::certified_fast,
                                 EscalationStats* stats = nullptr);

/// Return word predicted by the case analysis on x's local coordinate.
SignWord predicted_return_word(const RenormLevel& level, const CirclePoint& x);

/// Landing point predicted by the return map: local(x) + beta mod 1.
CirclePoint predicted_landing(const RenormLevel& level, const CirclePoint& x);

/// S_n(1/2) read off the tower words. F_-^i is exactly the f-word of 1/2
/// up to its first return to I_i, and F_-^{i+1} starts with F_-^i.
class FastBirkhoff {
 public:
  explicit FastBirkhoff(const CFNumber& alpha, std::size_t depth_hint = 4, bool auto_extend = true);

  std::int64_t operator()(std::uint64_t n);
  std::int64_t at(const mpz_class& n);

  /// Smallest tower level whose F_- covers n letters.
  const RenormLevel& covering_level(const mpz_class& n);
  std::size_t depth() const { return levels_.size(); }

 private:
  std::vector<RenormLevel> levels_;
  bool auto_extend_;
};

std::int64_t fast_birkhoff(const CFNumber& alpha, std::uint64_t n, std::size_t depth_hint = 4,
                           bool auto_extend = true);

}  // namespace rotn
