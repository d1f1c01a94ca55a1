#include <gtest/gtest.h>

#include <random>

#include "rotn/errors.hpp"
#include "rotn/renorm.hpp"

using namespace rotn;

namespace {

const CFNumber& alpha56() {
  static const CFNumber a = CFNumber::parse("[0;5,(6)]");
  return a;
}

const std::vector<RenormLevel>& tower56() {
  static const std::vector<RenormLevel> t = tower(alpha56(), 40);
  return t;
}

SurdReal sqrt10() { return SurdReal::make(0, 1, 1, 10); }

std::int64_t direct_sum_half(const CFNumber& alpha, std::int64_t n) {
  return birkhoff(CirclePoint::half(), alpha, n);
}

}  // namespace

TEST(BaseLevel, AdmissibleAlpha) {
  const RenormLevel L = base_level(alpha56());
  EXPECT_EQ(L.index, 1);
  EXPECT_EQ(L.n_half, 2u);
  EXPECT_EQ(L.interval.left, SurdReal(0));
  EXPECT_EQ(L.interval.right, SurdReal(1));
  EXPECT_EQ(L.beta, alpha56().value());
  EXPECT_EQ(L.plus, SignWord::atom(1));
  EXPECT_EQ(L.minus, SignWord::atom(-1));
  EXPECT_TRUE(L.zero.is_empty());
}

TEST(BaseLevel, RejectsBadCoefficients) {
  EXPECT_THROW(base_level(CFNumber::parse("[0;4,(6)]")), DomainError);
  EXPECT_THROW(base_level(CFNumber::parse("[0;3,(6)]")), DomainError);
  EXPECT_THROW(base_level(CFNumber::parse("[0;5,7,(6)]")), DomainError);
  EXPECT_THROW(base_level(CFNumber::parse("[0;5,(4)]")), DomainError);
  try {
    base_level(CFNumber::parse("[0;5,6,7,(6)]"));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("a_3"), std::string::npos) << e.what();
  }
}

TEST(StepPositive, SecondLevelOfSelfSimilarAlpha) {
  const RenormLevel& L2 = tower56()[1];
  EXPECT_EQ(L2.interval.length(), sqrt10() - SurdReal(3));
  EXPECT_EQ(L2.beta, -alpha56().value());
  EXPECT_EQ(L2.beta, -(sqrt10() - SurdReal(2)) / SurdReal(6));
  EXPECT_EQ(expand(L2.minus, 100), (std::vector<int>{-1, -1, -1, 1, 1}));
  EXPECT_EQ(L2.plus.total(), 1);
  EXPECT_EQ(L2.minus.total(), -1);
  EXPECT_EQ(L2.zero.total(), 0);
  EXPECT_EQ(expand(L2.zero, 100), (std::vector<int>{1, -1, -1, -1, 1, 1}));
  EXPECT_EQ(expand(L2.plus, 100), (std::vector<int>{1, -1, -1, 1, 1}));
}

TEST(StepPositive, RejectsWrongSign) {
  EXPECT_THROW(step_positive(tower56()[1]), DomainError);
  EXPECT_THROW(step_negative(tower56()[0]), DomainError);
}

TEST(StepNegative, ThirdLevel) {
  const RenormLevel& L2 = tower56()[1];
  const RenormLevel& L3 = tower56()[2];
  EXPECT_EQ(L3.beta, alpha56().value());
  EXPECT_EQ(L3.plus.total(), 1);
  const SurdReal gamma = -L2.beta;
  const SurdReal g = gauss_step(gamma);
  EXPECT_EQ(L3.interval.length(), gamma * (SurdReal(1) - g) * L2.interval.length());
}

TEST(Tower, IntervalsAreNestedAndSymmetric) {
  const auto& t = tower56();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const ExactInterval& I = t[i].interval;
    EXPECT_EQ(I.left + I.right, SurdReal(1)) << i;
    EXPECT_TRUE(I.contains(SurdReal::rational(1, 2))) << i;
    if (i == 0) continue;
    const ExactInterval& P = t[i - 1].interval;
    EXPECT_LE(P.left, I.left);
    EXPECT_LE(I.right, P.right);
    // Independent recomputation of the child interval from the parent's beta.
    const SurdReal b = t[i - 1].beta.abs();
    EXPECT_EQ(I.length(), b * (SurdReal(1) - gauss_step(b)) * P.length()) << i;
    EXPECT_LE(I.length(), b * P.length());
  }
}

TEST(Tower, SignsAlternate) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(tower56()[i].beta_sign(), i % 2 == 0 ? 1 : -1);
  for (const RenormLevel& L : tower56()) EXPECT_EQ(L.beta_sign(), L.index % 2 == 1 ? 1 : -1);
}

TEST(Tower, BetaFollowsGaussRatio) {
  const CFNumber a = CFNumber::parse("[0;5,8,(6)]");
  const auto t = tower(a, 6);
  CFNumber expect = a;
  for (const RenormLevel& L : t) {
    EXPECT_EQ(L.beta.abs(), expect.value()) << L.index;
    EXPECT_EQ(L.beta_cf, expect);
    EXPECT_LT(L.beta.abs(), SurdReal::rational(1, 5));
    expect = alpha_next(expect);
  }
}

TEST(Tower, LengthsGrowAndStatsStayFinite) {
  const auto t = tower(alpha56(), 20);
  for (std::size_t i = 1; i < t.size(); ++i) {
    EXPECT_GT(t[i].plus.length(), t[i - 1].plus.length());
    EXPECT_GT(t[i].minus.length(), t[i - 1].minus.length());
    EXPECT_GT(t[i].zero.length(), t[i - 1].zero.length());
  }
  EXPECT_LT(interned_node_count(), 100'000u);
}

TEST(Tower, TotalsForOtherAlpha) {
  for (const RenormLevel& L : tower(CFNumber::parse("[0;7,(8)]"), 5)) {
    EXPECT_EQ(L.plus.total(), 1);
    EXPECT_EQ(L.minus.total(), -1);
    EXPECT_EQ(L.zero.total(), 0);
    EXPECT_TRUE(verify_level(L).passed());
  }
}

TEST(VerifyBounds, FirstStep) {
  const RenormLevel& L1 = tower56()[0];
  const RenormLevel& L2 = tower56()[1];
  EXPECT_EQ(L2.minus.min_prefix(), -3);
  EXPECT_LE(L2.minus.min_prefix(), L1.minus.min_prefix() - static_cast<long>(L1.n_half));
  const CheckReport r = verify_bounds(L1, L2);
  EXPECT_EQ(r.checks.size(), 4u);
  EXPECT_TRUE(r.passed());
}

TEST(VerifyBounds, WholeTowerForThreeAlphas) {
  for (const char* lit : {"[0;5,(6)]", "[0;7,(6)]", "[0;5,8,(6)]"}) {
    const auto t = tower(CFNumber::parse(lit), 40);
    const CheckReport r = verify_tower(t);
    EXPECT_TRUE(r.passed()) << lit << ": " << (r.first_failure() ? r.first_failure()->name : "");
  }
}

TEST(VerifyBounds, MinusExtremaDiverge) {
  const auto& t = tower56();
  const mpz_class m1 = t[0].minus.min_prefix();
  for (std::size_t i = 1; i <= t.size(); ++i) {
    const RenormLevel& L = t[i - 1];
    EXPECT_LE(L.minus.min_prefix(), m1 - 2 * static_cast<long>((i - 1) / 2)) << i;
    EXPECT_LE(L.minus.min_prefix(), L.minus.total());
    EXPECT_LE(L.minus.total(), L.minus.max_prefix());
  }
  EXPECT_LE(t.back().minus.min_prefix(), -40);
  EXPECT_GE(t.back().minus.max_prefix(), 40);
}

TEST(VerifyBounds, DetectsTamperedWords) {
  RenormLevel child = tower56()[1];
  child.minus = SignWord::concat(SignWord::atom(-1), SignWord::atom(1));
  EXPECT_FALSE(verify_bounds(tower56()[0], child).passed());
}

TEST(OracleFirstReturn, LevelOneIsOneStep) {
  const RenormLevel& L1 = tower56()[0];
  const CirclePoint x(SurdReal::rational(3, 10));
  const ReturnRecord r = oracle_first_return(L1, x, alpha56());
  EXPECT_EQ(r.time, 1u);
  EXPECT_EQ(r.word, std::vector<int>{1});
  EXPECT_EQ(r.landing, rotate(x, alpha56(), 1));
}

TEST(OracleFirstReturn, HalfAtLevelTwo) {
  const RenormLevel& L2 = tower56()[1];
  const ReturnRecord r = oracle_first_return(L2, CirclePoint::half(), alpha56(), Precision::exact_only);
  EXPECT_EQ(r.time, 5u);
  EXPECT_EQ(r.word, (std::vector<int>{-1, -1, -1, 1, 1}));
  const SurdReal u = L2.interval.local(SurdReal::rational(1, 2));
  EXPECT_EQ(L2.interval.local(r.landing.position), (u - alpha56().value()).frac());
}

TEST(OracleFirstReturn, RejectsPointOutsideInterval) {
  EXPECT_THROW(oracle_first_return(tower56()[1], CirclePoint(SurdReal::rational(1, 10)), alpha56()), DomainError);
}

TEST(PredictedReturnWord, CaseReadoff) {
  for (std::size_t i = 1; i < 6; ++i) {
    const RenormLevel& L = tower56()[i];
    EXPECT_EQ(predicted_return_word(L, CirclePoint::half()), L.minus) << i;
    const SurdReal tiny = L.interval.length() * SurdReal::rational(1, 1000);
    const CirclePoint left_of_half(SurdReal::rational(1, 2) - tiny);
    const SignWord w = predicted_return_word(L, left_of_half);
    EXPECT_EQ(w, L.plus) << i;
  }
}

TEST(PredictedReturnWord, MatchesOracleOnRandomPoints) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(1, 99'999);
  for (std::size_t i = 1; i < 5; ++i) {
    const RenormLevel& L = tower56()[i];
    for (int s = 0; s < 200; ++s) {
      const CirclePoint x(L.interval.global(SurdReal::rational(num(rng), 100'000)));
      const ReturnRecord r = oracle_first_return(L, x, alpha56());
      ASSERT_EQ(expand(predicted_return_word(L, x), r.word.size() + 1), r.word) << "level " << L.index;
      ASSERT_EQ(r.landing, predicted_landing(L, x));
    }
  }
}

TEST(PredictedReturnWord, RejectsCaseBoundary) {
  const RenormLevel& L2 = tower56()[1];
  const CirclePoint boundary(L2.interval.global(-L2.beta));
  EXPECT_THROW(predicted_return_word(L2, boundary), DomainError);
}

TEST(WordNesting, MinusWordsExtendEachOther) {
  std::mt19937_64 rng(17);
  const auto& t = tower56();
  for (std::size_t i = 0; i + 1 < 12; ++i) {
    const SignWord& shorter = t[i].minus;
    const SignWord& longer = t[i + 1].minus;
    ASSERT_LT(shorter.length(), longer.length());
    EXPECT_EQ(prefix_sum_at(longer, shorter.length()), shorter.total());
    EXPECT_EQ(prefix_sum_at(longer, 1), prefix_sum_at(shorter, 1));
    gmp_randclass r(gmp_randinit_default);
    r.seed(static_cast<unsigned long>(rng()));
    for (int q = 0; q < 50; ++q) {
      const mpz_class k = r.get_z_range(shorter.length()) + 1;
      ASSERT_EQ(prefix_sum_at(longer, k), prefix_sum_at(shorter, k));
    }
  }
  for (std::size_t i = 0; i + 1 < 5; ++i) {
    const std::vector<int> a = expand(t[i].minus, 1'000'000);
    const std::vector<int> b = expand(t[i + 1].minus, 1'000'000);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  }
}

TEST(FastBirkhoff, Examples) {
  FastBirkhoff fb(alpha56());
  EXPECT_EQ(fb(0), 0);
  EXPECT_EQ(fb(1), -1);
  EXPECT_EQ(fb(4), -2);
  EXPECT_EQ(fb(1'000'000), direct_sum_half(alpha56(), 1'000'000));
}

TEST(FastBirkhoff, DepthExhaustionWithoutAutoExtend) {
  FastBirkhoff fb(alpha56(), 2, false);
  EXPECT_EQ(fb(5), direct_sum_half(alpha56(), 5));
  EXPECT_THROW(fb(1'000'000), DomainError);
  EXPECT_EQ(fast_birkhoff(alpha56(), 1000, 1), direct_sum_half(alpha56(), 1000));
}

TEST(FastBirkhoff, AgreesWithScanEverywhereOnAPrefix) {
  for (const char* lit : {"[0;5,(6)]", "[0;7,(6)]"}) {
    const CFNumber a = CFNumber::parse(lit);
    FastBirkhoff fb(a);
    scan_orbit(CirclePoint::half(), a, 20'000, false, Precision::certified_fast, nullptr,
               [&](std::int64_t n, std::int64_t s, const OrbitCursor&) {
                 ASSERT_EQ(fb(static_cast<std::uint64_t>(n)), s) << lit << " n=" << n;
               });
  }
}

TEST(FastBirkhoff, HugeTimes) {
  FastBirkhoff fb(alpha56());
  const mpz_class n("1000000000000000000000000");
  EXPECT_NO_THROW((void)fb.at(n));
  EXPECT_GE(fb.covering_level(n).minus.length(), n);
}

TEST(Witnesses, EverySmallLevelIsVisited) {
  // Every m in -5..5 occurs as some S_n(1/2).
  std::map<std::int64_t, std::int64_t> first;
  scan_orbit(CirclePoint::half(), alpha56(), 10'000'000, false, Precision::certified_fast, nullptr,
             [&](std::int64_t n, std::int64_t s, const OrbitCursor&) { first.emplace(s, n); });
  for (std::int64_t m = -5; m <= 5; ++m) EXPECT_TRUE(first.count(m)) << m;
}
