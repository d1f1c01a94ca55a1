#include "rotn/harness.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <random>

#include "rotn/cf.hpp"
#include "rotn/errors.hpp"
#include "rotn/foliation.hpp"
#include "rotn/renorm.hpp"
#include "rotn/words.hpp"

#ifndef ROTN_VERSION
#define ROTN_VERSION "0.0.0"
#endif

namespace rotn {

using nlohmann::json;

namespace {

constexpr std::int64_t kMaxHorizon = 4'000'000'000LL;

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json mpz_json(const mpz_class& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json word_json(const SignWord& w) {
  json j = {{"length", mpz_json(w.length())}, {"total", mpz_json(w.total())}};
  if (!w.is_empty()) {
    j["max_prefix"] = mpz_json(w.max_prefix());
    j["min_prefix"] = mpz_json(w.min_prefix());
  }
  return j;
}

json alpha_json(const CFNumber& cf) {
  return {{"literal", cf.str()}, {"exact", cf.value().str()}, {"approx", cf.value().to_double()}};
}

json checks_json(const CheckReport& report) {
  json out = json::array();
  for (const Check& c : report.checks) {
    json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    out.push_back(std::move(j));
  }
  return out;
}

ExperimentResult start(const ExperimentConfig& config) {
  ExperimentResult r;
  r.header = experiment_header(config);
  return r;
}

void finish(ExperimentResult& r) {
  r.summary["escalation"] = {{"comparisons", r.escalation.comparisons},
                             {"escalations", r.escalation.escalations}};
}

/// The powers of ten below N, then N itself.
std::vector<std::int64_t> checkpoints(std::int64_t N) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 10; p < N; p *= 10) out.push_back(p);
  out.push_back(N);
  return out;
}

std::string case_name(ReturnCase c) {
  switch (c) {
    case ReturnCase::plus:
      return "F+";
    case ReturnCase::plus_zero:
      return "F+F0";
    case ReturnCase::minus:
      return "F-";
    case ReturnCase::minus_zero:
      return "F-F0";
  }
  return "?";
}

// Recursive descent over + - * / ( ) numbers and the symbol a.
class AffineParser {
 public:
  AffineParser(std::string_view text, const SurdReal& a) : text_(text), a_(a) {}

  SurdReal parse() {
    SurdReal v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  SurdReal expr() {
    SurdReal v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  SurdReal term() {
    SurdReal v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        SurdReal d = factor();
        if (d.sign() == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  SurdReal factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      SurdReal v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (eat('a')) return a_;
    skip();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a number, 'a' or '('");
    return SurdReal(mpz_class(std::string(text_.substr(begin, pos_ - begin))));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("expression \"" + std::string(text_) + "\": " + why + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  const SurdReal& a_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view version() { return ROTN_VERSION; }

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::tower:
      return "tower";
    case ExperimentKind::density:
      return "density";
    case ExperimentKind::example:
      return "example";
    case ExperimentKind::leaf:
      return "leaf";
    case ExperimentKind::heavy:
      return "heavy";
    case ExperimentKind::oracle:
      return "oracle";
  }
  return "?";
}

ExperimentKind parse_kind(std::string_view name) {
  for (ExperimentKind k : {ExperimentKind::tower, ExperimentKind::density, ExperimentKind::example,
                           ExperimentKind::leaf, ExperimentKind::heavy, ExperimentKind::oracle}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown experiment kind \"" + std::string(name) + "\"");
}

std::string_view to_string(Precision precision) {
  return precision == Precision::exact_only ? "exact-only" : "certified-fast";
}

Precision parse_precision(std::string_view name) {
  if (name == "exact-only") return Precision::exact_only;
  if (name == "certified-fast") return Precision::certified_fast;
  throw DomainError("unknown precision policy \"" + std::string(name) + "\"");
}

void ExperimentConfig::validate() const {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw DomainError("config: " + what);
  };
  if (kind != ExperimentKind::example) (void)CFNumber::parse(alpha);
  require(N >= 0 && N <= kMaxHorizon, "N must lie in [0, 4e9]");
  switch (kind) {
    case ExperimentKind::tower:
      require(depth >= 1 && depth <= 200, "depth must lie in [1, 200]");
      break;
    case ExperimentKind::oracle:
      require(depth >= 2 && depth <= 12, "oracle depth must lie in [2, 12]");
      require(samples >= 1 && samples <= 1'000'000, "samples must lie in [1, 1e6]");
      break;
    case ExperimentKind::density:
      require(m >= -kMaxHorizon && m <= kMaxHorizon, "m out of range");
      require(k >= -kMaxHorizon && k <= kMaxHorizon, "k out of range");
      break;
    case ExperimentKind::example:
      require(m >= 2 && m <= 1000, "example m must lie in [2, 1000]");
      require(k_max >= 1 && k_max <= 40, "kmax must lie in [1, 40]");
      break;
    case ExperimentKind::leaf:
      require(ray.has_value() != !through.empty(), "leaf needs exactly one of ray and through");
      require(N >= 1 || !ray, "a ray needs N >= 1");
      break;
    case ExperimentKind::heavy:
      break;
  }
}

json ExperimentConfig::to_json() const {
  return {{"kind", std::string(to_string(kind))},
          {"alpha", alpha},
          {"depth", depth},
          {"N", N},
          {"m", m},
          {"k", k},
          {"k_max", k_max},
          {"samples", samples},
          {"rng_seed", rng_seed},
          {"ray", ray ? json(*ray) : json(nullptr)},
          {"through", through},
          {"level", level},
          {"backward", backward},
          {"precision", std::string(to_string(precision))},
          {"out", out},
          {"csv", csv}};
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  ExperimentConfig c;
  c.kind = parse_kind(j.at("kind").get<std::string>());
  c.alpha = j.at("alpha").get<std::string>();
  c.depth = j.at("depth").get<std::size_t>();
  c.N = j.at("N").get<std::int64_t>();
  c.m = j.at("m").get<std::int64_t>();
  c.k = j.at("k").get<std::int64_t>();
  c.k_max = j.at("k_max").get<unsigned>();
  c.samples = j.at("samples").get<std::size_t>();
  c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  if (!j.at("ray").is_null()) c.ray = j.at("ray").get<std::int64_t>();
  c.through = j.at("through").get<std::string>();
  c.level = j.at("level").get<std::int64_t>();
  c.backward = j.at("backward").get<bool>();
  c.precision = parse_precision(j.at("precision").get<std::string>());
  c.out = j.at("out").get<std::string>();
  c.csv = j.at("csv").get<std::string>();
  return c;
}

json ExperimentResult::to_json() const {
  return {{"header", header},
          {"summary", summary},
          {"checks", checks_json(checks)},
          {"passed", passed()},
          {"failures", checks.failures()}};
}

json experiment_header(const ExperimentConfig& config) {
  config.validate();
  const bool example = config.kind == ExperimentKind::example;
  const CFNumber alpha = example ? example_alpha(static_cast<unsigned>(config.m)) : CFNumber::parse(config.alpha);
  json h = {{"tool", "rotn"},
            {"version", std::string(version())},
            {"experiment", std::string(to_string(config.kind))},
            {"config", config.to_json()},
            {"alpha", alpha_json(alpha)}};
  if (example) {
    const CirclePoint x = example_seed(alpha);
    h["seed"] = {{"exact", x.position.str()}, {"approx", x.approx()}};
  }
  return h;
}

void write_csv_header(std::ostream& os, const json& header) { os << "# " << header.dump() << '\n'; }

ExperimentConfig read_csv_config(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) {
    throw DomainError("read_csv_config: stream does not start with a header line");
  }
  return ExperimentConfig::from_json(json::parse(line.substr(2)).at("config"));
}

SurdReal parse_affine(std::string_view expr, const SurdReal& a) { return AffineParser(expr, a).parse(); }

ExperimentResult run_tower(const ExperimentConfig& config, std::ostream* csv) {
  const CFNumber alpha = CFNumber::parse(config.alpha);
  ExperimentResult r = start(config);
  const std::vector<RenormLevel> levels = tower(alpha, config.depth);
  r.checks = verify_tower(levels);

  if (csv) {
    *csv << "index,length_approx,beta_sign,len_plus,len_minus,len_zero,"
            "max_plus,min_plus,max_minus,min_minus,max_zero,min_zero,bounds\n";
  }
  json rows = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const RenormLevel& L = levels[i];
    const bool bounds = i + 1 < levels.size() ? verify_bounds(L, levels[i + 1]).passed() : true;
    json row = {{"index", L.index},
                {"length_approx", L.interval.length().to_double()},
                {"length_exact", L.interval.length().str()},
                {"beta_sign", L.beta_sign()},
                {"beta_cf", L.beta_cf.str()},
                {"n_half", L.n_half},
                {"plus", word_json(L.plus)},
                {"minus", word_json(L.minus)},
                {"zero", word_json(L.zero)},
                {"bounds_to_next", i + 1 < levels.size() ? json(bounds) : json(nullptr)}};
    rows.push_back(std::move(row));
    if (csv) {
      auto ext = [](const SignWord& w, bool max) {
        return w.is_empty() ? std::string() : (max ? w.max_prefix() : w.min_prefix()).get_str();
      };
      *csv << L.index << ',' << fmt_double(L.interval.length().to_double()) << ',' << L.beta_sign() << ','
           << L.plus.length().get_str() << ',' << L.minus.length().get_str() << ',' << L.zero.length().get_str()
           << ',' << ext(L.plus, true) << ',' << ext(L.plus, false) << ',' << ext(L.minus, true) << ','
           << ext(L.minus, false) << ',' << ext(L.zero, true) << ',' << ext(L.zero, false) << ','
           << (i + 1 < levels.size() ? (bounds ? "pass" : "fail") : "") << '\n';
    }
  }
  r.summary["levels"] = std::move(rows);
  const RenormLevel& last = levels.back();
  r.summary["deepest"] = {{"index", last.index},
                          {"min_minus", mpz_json(last.minus.min_prefix())},
                          {"max_minus", mpz_json(last.minus.max_prefix())}};
  finish(r);
  return r;
}

ExperimentResult run_density(const ExperimentConfig& config, std::ostream* csv) {
  const CFNumber alpha = CFNumber::parse(config.alpha);
  ExperimentResult r = start(config);
  const CirclePoint x = CirclePoint::half();

  OrbitCursor shifted(x, alpha, config.precision, &r.escalation);
  if (config.k != 0) shifted.seek(config.k);
  std::vector<double> positions;
  double worst_radius = 0.0;
  std::int64_t first_time = -1;
  const std::vector<std::int64_t> marks = checkpoints(config.N);
  std::size_t next_mark = 0;
  json table = json::array();

  if (csv) *csv << "n,position_approx,S_n\n";
  scan_orbit(x, alpha, config.N, false, config.precision, &r.escalation,
             [&](std::int64_t n, std::int64_t sum, const OrbitCursor&) {
               if (n > 0) shifted.advance();
               if (sum == config.m) {
                 const CertifiedFloat p = shifted.shadow();
                 positions.push_back(p.approx);
                 worst_radius = std::max(worst_radius, p.radius);
                 if (first_time < 0) first_time = n;
                 if (csv) *csv << n << ',' << fmt_double(p.approx) << ',' << sum << '\n';
               }
               while (next_mark < marks.size() && marks[next_mark] <= n) {
                 const json gap = positions.empty() ? json(nullptr) : json(max_gap(positions));
                 table.push_back({{"N", marks[next_mark]}, {"count", positions.size()}, {"max_gap", gap}});
                 ++next_mark;
               }
             });
  const json gap = positions.empty() ? json(nullptr) : json(max_gap(positions));
  r.summary = {{"m", config.m},
               {"k", config.k},
               {"N", config.N},
               {"count", positions.size()},
               {"first_time", first_time < 0 ? json(nullptr) : json(first_time)},
               {"max_gap", gap},
               {"position_radius", worst_radius},
               {"gap_table", std::move(table)}};
  r.checks.add("visit set within N is nonempty", !positions.empty(),
               "count " + std::to_string(positions.size()));
  r.checks.add("position shadows are tighter than 1e-6", worst_radius < 1e-6, fmt_double(worst_radius));
  finish(r);
  return r;
}

ExperimentResult run_example(const ExperimentConfig& config, std::ostream* csv) {
  const unsigned m = static_cast<unsigned>(config.m);
  const CFNumber alpha = example_alpha(m);
  ExperimentResult r = start(config);
  const CirclePoint x = example_seed(alpha);

  r.checks = example_m_formulas(m, config.k_max, config.N);
  const std::vector<RenormLevel> levels = tower(alpha, 2 * static_cast<std::size_t>(config.k_max) + 1);
  json maxima = json::array();
  for (const RenormLevel& L : levels) {
    auto top = [](const SignWord& w) { return w.is_empty() ? json(nullptr) : mpz_json(w.max_prefix()); };
    maxima.push_back({{"index", L.index}, {"M_plus", top(L.plus)}, {"M_minus", top(L.minus)}, {"M_zero", top(L.zero)}});
  }
  r.summary = {{"m", m}, {"k_max", config.k_max}, {"N", config.N}, {"maxima", std::move(maxima)}};

  if (csv) {
    *csv << "n,position_approx,S_n\n";
    scan_orbit(x, alpha, config.N, config.backward, config.precision, &r.escalation,
               [&](std::int64_t n, std::int64_t sum, const OrbitCursor& c) {
                 *csv << n << ',' << fmt_double(c.shadow().approx) << ',' << sum << '\n';
               });
  }
  finish(r);
  return r;
}

namespace {

void leaf_csv_row(std::ostream& os, const LeafEntry& e) {
  os << e.step << ',' << fmt_double(e.x.approx) << ',' << e.rectangle << ",up\n";
}

json leaf_summary(const LeafTrace& t, const std::string& seed) {
  json s = {{"seed", seed},
            {"seed_level", t.seed_level},
            {"N", t.steps},
            {"backward", t.backward},
            {"min_level", t.min_level},
            {"max_level", t.max_level},
            {"min_rectangle", t.min_rectangle},
            {"max_rectangle", t.max_rectangle},
            {"levels_visited", t.first_entry.size()}};
  if (t.first_entry.size() <= 1000) {
    json first = json::object();
    for (const auto& [rect, step] : t.first_entry) first[std::to_string(rect)] = step;
    s["first_entry"] = std::move(first);
  }
  return s;
}

// Replays stored entries with the literal turn-and-drop mechanics in exact
// arithmetic and compares square and coordinate.
std::int64_t literal_mismatch(const LeafTrace& t, const CFNumber& alpha, std::size_t limit) {
  if (t.entries.empty()) return -1;
  LeafState s{t.exact_x(alpha, t.entries.front()), t.entries.front().rectangle, Direction::up};
  const std::size_t count = std::min(limit, t.entries.size());
  for (std::size_t i = 1; i < count; ++i) {
    s = leaf_step(leaf_step(s, alpha), alpha);
    const LeafEntry& e = t.entries[i];
    if (s.rectangle != e.rectangle || !(s.x == t.exact_x(alpha, e))) return e.step;
  }
  return -1;
}

}  // namespace

ExperimentResult run_leaf(const ExperimentConfig& config, std::ostream* csv) {
  const CFNumber alpha = CFNumber::parse(config.alpha);
  ExperimentResult r = start(config);
  TraceOptions options;
  options.precision = config.precision;
  options.stats = &r.escalation;
  options.store_limit = 100'000;
  if (csv) *csv << "n,x_approx,level,dir\n";
  LeafVisitor visit;
  if (csv) visit = [csv](const LeafEntry& e) { leaf_csv_row(*csv, e); };

  if (config.ray) {
    const std::int64_t i = *config.ray;
    const LeafTrace t = trace_ray(alpha, i, config.N, options, visit);
    r.summary = leaf_summary(t, "1/2");
    r.summary["ray"] = i;

    // Entry law against an independent running sum.
    OrbitCursor cursor(CirclePoint::half(), alpha, config.precision, &r.escalation);
    std::int64_t sum = 0;
    std::int64_t bad = -1;
    for (const LeafEntry& e : t.entries) {
      sum += cursor.sign();
      if (e.rectangle != i + 1 + sum || e.time != cursor.time()) {
        bad = e.step;
        break;
      }
      cursor.advance();
    }
    r.checks.add("entry n lies in square i + 1 + S_n(1/2) over t^(n-1)(1/2)", bad < 0,
                 bad < 0 ? "checked " + std::to_string(t.entries.size()) : "first failure at n = " + std::to_string(bad));
    const std::int64_t literal = literal_mismatch(t, alpha, 10'000);
    r.checks.add("first entries replay through the literal turn-and-drop moves", literal < 0,
                 literal < 0 ? std::string() : "first mismatch at n = " + std::to_string(literal));
  } else {
    const CirclePoint x0(parse_affine(config.through, alpha.value()));
    const LeafTrace t =
        trace_leaf_through(alpha, x0, config.level, config.N, config.backward, options, visit);
    r.summary = leaf_summary(t, x0.position.str());

    std::int64_t bad = -1;
    OrbitCursor cursor(x0, alpha, config.precision, &r.escalation);
    std::int64_t sum = 0;
    for (std::size_t idx = 0; idx < t.entries.size(); ++idx) {
      const LeafEntry& e = t.entries[idx];
      if (idx > 0) {
        if (config.backward) {
          cursor.retreat();
          sum -= cursor.sign();
        } else {
          sum += cursor.sign();
          cursor.advance();
        }
      }
      if (e.level != config.level + sum) {
        bad = e.step;
        break;
      }
    }
    r.checks.add("entry levels equal level + S_n(x0)", bad < 0,
                 bad < 0 ? "checked " + std::to_string(t.entries.size()) : "first failure at n = " + std::to_string(bad));
    if (!config.backward) {
      const std::int64_t literal = literal_mismatch(t, alpha, 10'000);
      r.checks.add("first entries replay through the literal turn-and-drop moves", literal < 0,
                   literal < 0 ? std::string() : "first mismatch at n = " + std::to_string(literal));
    }
  }
  finish(r);
  return r;
}

ExperimentResult run_heavy(const ExperimentConfig& config, std::ostream* csv) {
  const CFNumber alpha = CFNumber::parse(config.alpha);
  ExperimentResult r = start(config);
  std::uint64_t violations = 0;
  std::int64_t first_violation = -1;
  std::int64_t best = 0;
  bool seen = false;
  if (csv) *csv << "n,position_approx,S_n\n";
  scan_orbit(CirclePoint::half(), alpha, config.N, false, config.precision, &r.escalation,
             [&](std::int64_t n, std::int64_t sum, const OrbitCursor& c) {
               if (csv) *csv << n << ',' << fmt_double(c.shadow().approx) << ',' << sum << '\n';
               if (n == 0) return;
               best = seen ? std::max(best, sum) : sum;
               seen = true;
               if (sum >= 0) {
                 if (violations++ == 0) first_violation = n;
               }
             });
  r.summary = {{"N", config.N},
               {"violations", violations},
               {"first_violation", first_violation < 0 ? json(nullptr) : json(first_violation)},
               {"max_S_n", seen ? json(best) : json(nullptr)}};
  r.checks.add("S_n(1/2) < 0 for 1 <= n <= " + std::to_string(config.N), violations == 0,
               violations == 0 ? std::string() : "first violation at n = " + std::to_string(first_violation));
  finish(r);
  return r;
}

ExperimentResult run_oracle(const ExperimentConfig& config, std::ostream* csv) {
  const CFNumber alpha = CFNumber::parse(config.alpha);
  ExperimentResult r = start(config);
  const std::vector<RenormLevel> levels = tower(alpha, config.depth);
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_int_distribution<unsigned long> jitter(1, (1UL << 32) - 1);
  const SurdReal scale = SurdReal(mpz_class(1UL << 32));

  if (csv) *csv << "level,case,x_approx,return_time,word_match,landing_match\n";
  json per_level = json::array();
  for (std::size_t li = 1; li < levels.size(); ++li) {
    const RenormLevel& L = levels[li];
    json regions = json::array();
    for (const CaseRegion& region : case_regions(L)) {
      std::size_t word_ok = 0;
      std::size_t landing_ok = 0;
      const SurdReal width = region.hi - region.lo;
      for (std::size_t s = 0; s < config.samples; ++s) {
        // Stratified: sample s falls in the s-th slice of the region.
        const SurdReal t =
            (SurdReal(static_cast<long>(s)) + SurdReal(mpz_class(jitter(rng))) / scale) /
            SurdReal(static_cast<long>(config.samples));
        const CirclePoint x(L.interval.global(region.lo + width * t));
        const ReturnRecord rec = oracle_first_return(L, x, alpha, config.precision, &r.escalation);
        const SignWord predicted = predicted_return_word(L, x);
        const bool word_match = expand(predicted, rec.word.size() + 1) == rec.word;
        const bool landing_match = rec.landing == predicted_landing(L, x);
        word_ok += word_match;
        landing_ok += landing_match;
        if (csv) {
          *csv << L.index << ',' << case_name(region.which) << ',' << fmt_double(x.approx()) << ',' << rec.time
               << ',' << word_match << ',' << landing_match << '\n';
        }
      }
      const std::string tag = "level " + std::to_string(L.index) + " " + case_name(region.which);
      r.checks.add(tag + ": predicted word equals simulated word", word_ok == config.samples,
                   std::to_string(word_ok) + "/" + std::to_string(config.samples));
      r.checks.add(tag + ": landing equals local rotation by beta", landing_ok == config.samples,
                   std::to_string(landing_ok) + "/" + std::to_string(config.samples));
      regions.push_back({{"case", case_name(region.which)},
                         {"samples", config.samples},
                         {"word_matches", word_ok},
                         {"landing_matches", landing_ok}});
    }
    per_level.push_back({{"index", L.index}, {"beta_sign", L.beta_sign()}, {"regions", std::move(regions)}});
  }
  r.summary = {{"depth", config.depth}, {"samples", config.samples}, {"levels", std::move(per_level)}};
  finish(r);
  return r;
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* csv) {
  switch (config.kind) {
    case ExperimentKind::tower:
      return run_tower(config, csv);
    case ExperimentKind::density:
      return run_density(config, csv);
    case ExperimentKind::example:
      return run_example(config, csv);
    case ExperimentKind::leaf:
      return run_leaf(config, csv);
    case ExperimentKind::heavy:
      return run_heavy(config, csv);
    case ExperimentKind::oracle:
      return run_oracle(config, csv);
  }
  throw DomainError("run_experiment: unknown kind");
}

}  // namespace rotn
