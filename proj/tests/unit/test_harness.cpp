#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "rotn/errors.hpp"
#include "rotn/harness.hpp"

using namespace rotn;

namespace {

ExperimentConfig config_for(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  return c;
}

// The CSV payload without its header line.
std::string payload(const std::string& csv) { return csv.substr(csv.find('\n') + 1); }

}  // namespace

TEST(ParseAffine, Expressions) {
  const SurdReal a = CFNumber::parse("[0;5,(6)]").value();
  EXPECT_EQ(parse_affine("(1+a)/2", a), (SurdReal(1) + a) / SurdReal(2));
  EXPECT_EQ(parse_affine(" 1 - a ", a), SurdReal(1) - a);
  EXPECT_EQ(parse_affine("1/2", a), SurdReal::rational(1, 2));
  EXPECT_EQ(parse_affine("-a*3 + 2*(a+1)/4", a), SurdReal(-3) * a + (a + SurdReal(1)) / SurdReal(2));
  EXPECT_THROW(parse_affine("(1+a", a), DomainError);
  EXPECT_THROW(parse_affine("1/0", a), DomainError);
  EXPECT_THROW(parse_affine("b", a), DomainError);
}

TEST(ExperimentConfig, JsonRoundTrip) {
  ExperimentConfig c = config_for(ExperimentKind::leaf);
  c.alpha = "[0;7,(6)]";
  c.through = "(1+a)/2";
  c.level = -3;
  c.backward = true;
  c.N = 1234;
  c.precision = Precision::exact_only;
  c.out = "x.json";
  const ExperimentConfig back = ExperimentConfig::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_FALSE(back.ray.has_value());

  c.through.clear();
  c.ray = -2;
  EXPECT_EQ(ExperimentConfig::from_json(c.to_json()).ray, std::optional<std::int64_t>(-2));
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig c = config_for(ExperimentKind::tower);
  c.alpha = "[0;5,(6)";
  EXPECT_THROW(c.validate(), DomainError);
  c = config_for(ExperimentKind::tower);
  c.depth = 0;
  EXPECT_THROW(c.validate(), DomainError);
  c = config_for(ExperimentKind::example);
  c.m = 1;
  EXPECT_THROW(c.validate(), DomainError);
  c = config_for(ExperimentKind::leaf);
  EXPECT_THROW(c.validate(), DomainError);
  c.ray = 0;
  c.through = "a";
  EXPECT_THROW(c.validate(), DomainError);
  c = config_for(ExperimentKind::density);
  c.N = -1;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(parse_kind("plot"), DomainError);
  EXPECT_THROW(parse_precision("fast"), DomainError);
}

TEST(Harness, CsvHeaderCarriesConfig) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.m = -1;
  c.k = 1;
  c.N = 50;
  std::stringstream out;
  write_csv_header(out, experiment_header(c));
  run_density(c, &out);
  std::istringstream in(out.str());
  const ExperimentConfig back = read_csv_config(in);
  EXPECT_EQ(back.to_json(), c.to_json());
  std::string columns;
  std::getline(in, columns);
  EXPECT_EQ(columns, "n,position_approx,S_n");
}

TEST(Harness, ResultCarriesHeader) {
  ExperimentConfig c = config_for(ExperimentKind::tower);
  c.depth = 5;
  const nlohmann::json j = run_tower(c).to_json();
  EXPECT_EQ(j["header"]["version"], std::string(version()));
  EXPECT_EQ(j["header"]["alpha"]["exact"], "(-2 + sqrt(10))/6");
  EXPECT_EQ(ExperimentConfig::from_json(j["header"]["config"]).to_json(), c.to_json());
  EXPECT_TRUE(j["passed"].get<bool>());
  ASSERT_EQ(j["summary"]["levels"].size(), 5u);
  EXPECT_EQ(j["summary"]["levels"][1]["length_exact"], "-3 + sqrt(10)");
  EXPECT_EQ(j["summary"]["levels"][1]["beta_sign"], -1);
}

TEST(Harness, ExactOnlyIsDeterministic) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 3000;
  c.m = 1;
  c.precision = Precision::exact_only;
  std::stringstream a;
  std::stringstream b;
  run_density(c, &a);
  run_density(c, &b);
  EXPECT_FALSE(a.str().empty());
  EXPECT_EQ(a.str(), b.str());

  c = config_for(ExperimentKind::leaf);
  c.ray = 2;
  c.N = 2000;
  c.precision = Precision::exact_only;
  std::stringstream la;
  std::stringstream lb;
  run_leaf(c, &la);
  run_leaf(c, &lb);
  EXPECT_EQ(la.str(), lb.str());
}

TEST(Harness, PrecisionPoliciesAgreeOnDecisions) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 3000;
  c.m = 0;
  std::stringstream fast;
  std::stringstream exact;
  const ExperimentResult rf = run_density(c, &fast);
  c.precision = Precision::exact_only;
  const ExperimentResult re = run_density(c, &exact);
  EXPECT_EQ(rf.summary["count"], re.summary["count"]);
  EXPECT_EQ(rf.summary["first_time"], re.summary["first_time"]);
  EXPECT_NEAR(rf.summary["max_gap"].get<double>(), re.summary["max_gap"].get<double>(), 1e-12);
}

TEST(RunDensity, EmptyHorizon) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 0;
  c.m = 0;
  const ExperimentResult r = run_density(c);
  EXPECT_EQ(r.summary["count"], 1);
  EXPECT_EQ(r.summary["max_gap"].get<double>(), 1.0);
  EXPECT_EQ(r.summary["first_time"], 0);
}

TEST(RunDensity, FirstVisitOfMinusOne) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 100;
  c.m = -1;
  EXPECT_EQ(run_density(c).summary["first_time"], 1);
}

TEST(RunDensity, GapShrinksWithHorizon) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 1'000'000;
  const ExperimentResult r = run_density(c);
  EXPECT_TRUE(r.passed());
  double at_1e4 = -1;
  for (const auto& row : r.summary["gap_table"]) {
    if (row["N"] == 10'000) at_1e4 = row["max_gap"].get<double>();
  }
  ASSERT_GT(at_1e4, 0);
  EXPECT_LT(r.summary["max_gap"].get<double>(), at_1e4);
}

TEST(RunDensity, ShiftLeavesGapsUnchanged) {
  ExperimentConfig c = config_for(ExperimentKind::density);
  c.N = 100'000;
  c.m = 2;
  const double g0 = run_density(c).summary["max_gap"].get<double>();
  c.k = 1;
  const double g1 = run_density(c).summary["max_gap"].get<double>();
  EXPECT_NEAR(g0, g1, 1e-12);
}

TEST(RunHeavy, NoViolations) {
  ExperimentConfig c = config_for(ExperimentKind::heavy);
  c.alpha = "[0;(2)]";
  c.N = 1'000'000;
  const ExperimentResult r = run_heavy(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.summary["violations"], 0);
}

TEST(RunHeavy, DetectsViolations) {
  ExperimentConfig c = config_for(ExperimentKind::heavy);
  c.alpha = "[0;5,(6)]";
  c.N = 100'000;
  EXPECT_FALSE(run_heavy(c).passed());
}

TEST(RunOracle, AllWordsMatch) {
  ExperimentConfig c = config_for(ExperimentKind::oracle);
  c.depth = 4;
  c.samples = 100;
  const ExperimentResult r = run_oracle(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.checks.size(), 3u * 3u * 2u);
}

TEST(RunTower, DepthFortyPasses) {
  ExperimentConfig c = config_for(ExperimentKind::tower);
  c.depth = 40;
  std::stringstream csv;
  const ExperimentResult r = run_tower(c, &csv);
  EXPECT_TRUE(r.passed());
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 41);
}

TEST(RunExample, Passes) {
  ExperimentConfig c = config_for(ExperimentKind::example);
  c.m = 3;
  c.k_max = 6;
  c.N = 20'000;
  const ExperimentResult r = run_example(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.header["alpha"]["literal"], "[0;7,(8)]");
}

TEST(RunLeaf, RayAndThrough) {
  ExperimentConfig c = config_for(ExperimentKind::leaf);
  c.ray = -1;
  c.N = 5000;
  std::stringstream csv;
  ExperimentResult r = run_leaf(c, &csv);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(payload(csv.str()).substr(0, 9), "1,0.5,-1,");
  EXPECT_GE(r.summary["levels_visited"].get<int>(), 5);

  c.ray.reset();
  c.through = "(1+a)/2";
  c.backward = true;
  r = run_leaf(c);
  EXPECT_TRUE(r.passed());
  EXPECT_LE(r.summary["max_rectangle"].get<int>(), 0);
}
