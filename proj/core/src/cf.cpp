#include "rotn/cf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <utility>

namespace rotn {

namespace {

std::vector<Coefficient> minimal_period(std::vector<Coefficient> period) {
  const std::size_t len = period.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < len && repeats; ++i) repeats = period[i] == period[i - d];
    if (repeats) {
      period.resize(d);
      break;
    }
  }
  return period;
}

// Root in (0,1) of the fixed-point equation of a purely periodic CF.
SurdReal purely_periodic_value(std::span<const Coefficient> period) {
  mpz_class p_prev = 1, p = 0;  // p_{-1}, p_0
  mpz_class q_prev = 0, q = 1;  // q_{-1}, q_0
  for (Coefficient c : period) {
    mpz_class p_next = mpz_class(c) * p + p_prev;
    mpz_class q_next = mpz_class(c) * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  // y = (p_k + p_{k-1} y) / (q_k + q_{k-1} y)
  //   <=> q_{k-1} y^2 + (q_k - p_{k-1}) y - p_k = 0
  const mpz_class a = q_prev;
  const mpz_class b = q - p_prev;
  const mpz_class c = -p;
  const mpz_class disc = b * b - 4 * a * c;
  auto [square_part, radicand] = square_free_split(disc);
  if (radicand == 1) {
    throw ArithmeticInvariantError("cf_value: period collapsed to a rational value");
  }
  if (!radicand.fits_slong_p()) throw DomainError("cf_value: radicand exceeds 64 bits");
  return SurdReal::make(-b, square_part, 2 * a, radicand.get_si());
}

[[noreturn]] void parse_error(std::string_view literal, const std::string& why) {
  throw DomainError("CFNumber::parse: " + why + " in \"" + std::string(literal) + "\"");
}

}  // namespace

CFNumber::CFNumber(std::vector<Coefficient> preperiod, std::vector<Coefficient> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw DomainError("CFNumber: period must be nonempty");
  for (Coefficient c : preperiod_) {
    if (c < 1) throw DomainError("CFNumber: coefficients must be >= 1");
  }
  for (Coefficient c : period_) {
    if (c < 1) throw DomainError("CFNumber: coefficients must be >= 1");
  }
  period_ = minimal_period(std::move(period_));
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
  value_ = cf_value(*this);
}

CFNumber CFNumber::parse(std::string_view literal) {
  std::string compact;
  for (char ch : literal) {
    if (std::isspace(static_cast<unsigned char>(ch)) == 0) compact.push_back(ch);
  }
  if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']') {
    parse_error(literal, "expected [...]");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos || body.substr(0, semi) != "0") {
    parse_error(literal, "expected leading \"0;\"");
  }
  body.remove_prefix(semi + 1);

  std::vector<Coefficient> pre, per;
  bool in_period = false;
  bool period_closed = false;
  std::size_t i = 0;
  while (i < body.size()) {
    if (period_closed) parse_error(literal, "period group must be last");
    if (body[i] == '(') {
      if (in_period) parse_error(literal, "nested parenthesis");
      in_period = true;
      ++i;
      continue;
    }
    Coefficient value = 0;
    const auto* first = body.data() + i;
    const auto* last = body.data() + body.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) parse_error(literal, "expected a positive integer");
    if (value < 1) parse_error(literal, "coefficients must be >= 1");
    (in_period ? per : pre).push_back(value);
    i += static_cast<std::size_t>(ptr - first);
    if (i < body.size() && body[i] == ')') {
      if (!in_period) parse_error(literal, "unbalanced ')'");
      period_closed = true;
      ++i;
    }
    if (i < body.size()) {
      if (body[i] != ',') parse_error(literal, "expected ','");
      ++i;
    }
  }
  if (!period_closed) parse_error(literal, "missing parenthesised period");
  return CFNumber(std::move(pre), std::move(per));
}

Coefficient CFNumber::coefficient(std::size_t k) const {
  if (k == 0) throw DomainError("CFNumber::coefficient: index is 1-based");
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  return period_[(k - 1 - preperiod_.size()) % period_.size()];
}

CFNumber CFNumber::shifted() const {
  if (!preperiod_.empty()) {
    return CFNumber({preperiod_.begin() + 1, preperiod_.end()}, period_);
  }
  std::vector<Coefficient> rotated = period_;
  std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  return CFNumber({}, std::move(rotated));
}

std::string CFNumber::str() const {
  std::ostringstream os;
  os << "[0;";
  for (Coefficient c : preperiod_) os << c << ",";
  os << "(";
  for (std::size_t i = 0; i < period_.size(); ++i) os << (i ? "," : "") << period_[i];
  os << ")]";
  return os.str();
}

SurdReal cf_value(const CFNumber& cf) {
  SurdReal value = purely_periodic_value(cf.period());
  const auto pre = cf.preperiod();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
    value = (SurdReal(static_cast<long>(*it)) + value).reciprocal();
  }
  return value;
}

SurdReal gauss_step(const SurdReal& x) {
  if (x.sign() <= 0 || x >= SurdReal(1)) {
    throw DomainError("gauss_step: argument " + x.str() + " is outside (0, 1)");
  }
  SurdReal inv = x.reciprocal();
  return inv - SurdReal(inv.floor());
}

CFNumber alpha_next(const CFNumber& alpha) {
  const Coefficient c2 = alpha.coefficient(2);
  if (c2 < 2) {
    throw DomainError("alpha_next: second coefficient of " + alpha.str() + " is 1");
  }
  CFNumber tail = alpha.shifted();
  std::vector<Coefficient> pre(tail.preperiod().begin(), tail.preperiod().end());
  std::vector<Coefficient> per(tail.period().begin(), tail.period().end());
  if (pre.empty()) {
    pre.push_back(per.front());
    std::rotate(per.begin(), per.begin() + 1, per.end());
  }
  pre.front() -= 1;
  return CFNumber(std::move(pre), std::move(per));
}

Convergent convergent(const CFNumber& cf, std::size_t k) {
  if (k == 0) throw DomainError("convergent: k must be >= 1");
  mpz_class p_prev = 1, p = 0;
  mpz_class q_prev = 0, q = 1;
  for (std::size_t j = 1; j <= k; ++j) {
    const mpz_class a = cf.coefficient(j);
    mpz_class p_next = a * p + p_prev;
    mpz_class q_next = a * q + q_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    q_prev = std::move(q);
    q = std::move(q_next);
  }
  return {p, q};
}

CFNumber expand_to_cf(const SurdReal& x, std::size_t max_terms) {
  if (x.sign() <= 0 || x >= SurdReal(1)) {
    throw DomainError("expand_to_cf: argument " + x.str() + " is outside (0, 1)");
  }
  if (x.is_rational()) throw DomainError("expand_to_cf: rational input has no periodic expansion");
  std::vector<SurdReal> states{x};
  std::vector<Coefficient> terms;
  SurdReal current = x;
  for (std::size_t step = 0; step < max_terms; ++step) {
    SurdReal inv = current.reciprocal();
    mpz_class a = inv.floor();
    if (!a.fits_uint_p()) throw DomainError("expand_to_cf: coefficient exceeds 32 bits");
    terms.push_back(static_cast<Coefficient>(a.get_ui()));
    current = inv - SurdReal(a);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (states[i] == current) {
        std::vector<Coefficient> pre(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<Coefficient> per(terms.begin() + static_cast<std::ptrdiff_t>(i), terms.end());
        return CFNumber(std::move(pre), std::move(per));
      }
    }
    states.push_back(current);
  }
  throw DomainError("expand_to_cf: no period found within " + std::to_string(max_terms) + " terms");
}

}  // namespace rotn
