#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rotn/surd.hpp"

namespace rotn {

using Coefficient = std::uint32_t;

/// An eventually periodic continued fraction [0; preperiod..., (period...)]
/// together with its exact value in Q(sqrt D).
///
/// The coefficient lists are stored in a canonical form (minimal period,
/// shortest preperiod), so structurally equal CFNumbers denote equal reals.
class CFNumber {
 public:
  CFNumber(std::vector<Coefficient> preperiod, std::vector<Coefficient> period);

  /// Parses literals such as "[0;5,(6)]", "[0;(2)]" or "[0;5,8,(6,6)]".
  static CFNumber parse(std::string_view literal);

  std::span<const Coefficient> preperiod() const { return preperiod_; }
  std::span<const Coefficient> period() const { return period_; }

  /// The k-th coefficient a_k, 1-based.
  Coefficient coefficient(std::size_t k) const;

  /// Exact value; computed once at construction.
  const SurdReal& value() const { return value_; }
  std::int64_t radicand() const { return value_.radicand(); }

  /// The CF with its first coefficient removed, i.e. the Gauss shift.
  CFNumber shifted() const;

  std::string str() const;

  friend bool operator==(const CFNumber& a, const CFNumber& b) {
    return a.preperiod_ == b.preperiod_ && a.period_ == b.period_;
  }

 private:
  std::vector<Coefficient> preperiod_;
  std::vector<Coefficient> period_;
  SurdReal value_;
};

/// Evaluates an eventually periodic CF exactly.
SurdReal cf_value(const CFNumber& cf);

/// G(x) = 1/x - floor(1/x) for irrational x in (0, 1).
SurdReal gauss_step(const SurdReal& x);

/// [0; c1, c2, c3, ...] -> [0; c2 - 1, c3, ...]; the value is G(x) / (1 - G(x)).
CFNumber alpha_next(const CFNumber& alpha);

struct Convergent {
  mpz_class p;
  mpz_class q;
};

/// The k-th convergent p_k / q_k, k >= 1.
Convergent convergent(const CFNumber& cf, std::size_t k);

/// Re-expands a quadratic irrational in (0, 1) by exact Gauss iteration,
/// detecting the period from repeated complete quotients.
CFNumber expand_to_cf(const SurdReal& x, std::size_t max_terms = 512);

}  // namespace rotn
