#include "zetaseq/gabcke.hpp"

#include <gtest/gtest.h>

#include "zetaseq/congruences.hpp"
#include "zetaseq/sequences.hpp"
#include "zetaseq/series.hpp"

using namespace zetaseq;

namespace {

std::vector<Integer> as_vector(const IntegerSequence& s) { return {s.values().begin(), s.values().end()}; }

std::vector<Integer> from_strings(std::initializer_list<const char*> xs) {
  std::vector<Integer> out;
  for (const char* x : xs) out.emplace_back(x, 10);
  return out;
}

IntegerSequence negated(const IntegerSequence& s) {
  std::vector<Integer> out;
  for (const auto& v : s.values()) out.push_back(-v);
  return IntegerSequence(s.offset(), std::move(out));
}

}  // namespace

TEST(GabckeA, FirstTerms) {
  EXPECT_EQ(as_vector(gabcke_a(5)), from_strings({"2", "160", "31232", "11345920", "6621888512"}));
}

TEST(GabckeA, SharedEulerPrefix) {
  const auto e = euler_numbers(12);
  EXPECT_EQ(gabcke_a(e, 12), gabcke_a(12));
  EXPECT_THROW(gabcke_a(e, 13), InvalidArgument);
}

TEST(GabckeA, BRowFromTable) {
  const auto b = seq_to_b(gabcke_a(6), 6).integers();
  EXPECT_EQ(as_vector(b), from_strings({"2", "79", "10410", "2836440", "1324377702", "944684832315"}));
}

TEST(Lambda, TableValues) {
  EXPECT_EQ(as_vector(lambda_seq(6)),
            from_strings({"1", "2", "82", "10572", "2860662", "1330910844", "947622146676"}));
}

TEST(Lambda, FrozenBeyondTable) {
  // lambda_7..lambda_10 computed from the recurrence with exact rationals in Python
  const auto lambda = lambda_seq(10);
  EXPECT_EQ(lambda.at(7), Integer("957663025230936", 10));
  EXPECT_EQ(lambda.at(8), Integer("1303349182536886566", 10));
  EXPECT_EQ(lambda.at(10), Integer("5095053865489946980238428", 10));
}

TEST(Lambda, ZeroTerms) { EXPECT_EQ(as_vector(lambda_seq(0)), from_strings({"1"})); }

TEST(Rho, FirstValues) {
  const auto rho = rho_seq(6);
  EXPECT_EQ(as_vector(rho),
            from_strings({"-1", "2", "78", "10252", "2812618", "1317899004", "941762376524"}));
}

TEST(Rho, NegatedExpTransformOfNegatedWeights) {
  const auto a = gabcke_a(12);
  const auto minus_rho = negated(rho_seq(12));
  EXPECT_EQ(RationalSeries::from_integers(minus_rho.values()), exp_transform(negated(a), 12));
}

TEST(Lambda, ExpTransformOfWeights) {
  const auto a = gabcke_a(25);
  EXPECT_EQ(RationalSeries::from_integers(lambda_seq(25).values()), exp_transform(a, 25));
}

TEST(Mu, FirstValues) {
  const auto mu = mu_seq(4);
  EXPECT_EQ(as_vector(mu), from_strings({"0", "2", "80", "10412", "2836640"}));
}

TEST(Mu, IntegralToFifty) {
  const auto t = gabcke_triple(50);
  for (std::size_t n = 0; n <= 50; ++n) EXPECT_EQ(2 * t.mu.at(n), t.lambda.at(n) + t.rho.at(n));
}

TEST(Mu, OddSumIsInternalError) {
  EXPECT_THROW(mu_seq(IntegerSequence(0, {Integer(1), Integer(2)}), IntegerSequence(0, {Integer(0), Integer(1)})),
               InternalError);
}

TEST(Recurrence, NonIntegralWeightsAreInternalError) {
  // weights (1, 2): 2 lambda_2 = 1*1 + 2*1 = 3
  const IntegerSequence weights(1, {Integer(1), Integer(2)});
  EXPECT_THROW(lambda_seq(weights, 2), InternalError);
}

TEST(Triple, Invariants) {
  const auto t = gabcke_triple(40);
  EXPECT_EQ(t.lambda.at(0), 1);
  EXPECT_EQ(t.rho.at(0), -1);
  EXPECT_EQ(t.mu.at(0), 0);
  EXPECT_EQ(t.lambda, lambda_seq(40));
  EXPECT_EQ(t.rho, rho_seq(40));
}

TEST(Valuation, SmallCases) {
  const auto profile = valuation_check(8);
  ASSERT_EQ(profile.rows.size(), 9u);
  EXPECT_EQ(profile.rows[0].nu2_lambda, 0u);
  EXPECT_EQ(profile.rows[3].nu2_lambda, 2u);
  EXPECT_EQ(profile.rows[3].expected, 2u);
  EXPECT_EQ(profile.rows[4].nu2_lambda, 1u);
  EXPECT_EQ(profile.rows[7].nu2_rho, 3u);
  EXPECT_TRUE(profile.passed());
}

TEST(Valuation, HoldsToOneHundredWithIncrementIdentity) {
  const auto profile = valuation_check(100);
  EXPECT_TRUE(profile.passed());
  for (std::size_t n = 0; n < 100; ++n) {
    const unsigned nu = nu_p(Integer(static_cast<unsigned long>(n + 1)), 2);
    EXPECT_EQ(*profile.rows[n + 1].nu2_lambda + nu, binary_digit_sum(n) + 1) << n;
  }
}

TEST(Valuation, MismatchDetected) {
  GabckeTriple t = gabcke_triple(3);
  t.lambda = IntegerSequence(0, {Integer(1), Integer(2), Integer(82), Integer(8)});
  const auto profile = valuation_check(t);
  EXPECT_FALSE(profile.passed());
  EXPECT_EQ(profile.first_mismatch(), 3u);
}

TEST(GabckeA, PassesEveryCriterion) {
  const auto a = gabcke_a(30);
  EXPECT_TRUE(prerealizable_check_b(a, 30).passed());
  EXPECT_TRUE(prerealizable_check_A(a, 30).passed());
  EXPECT_TRUE(prerealizable_check_c(a, 30).passed());
  EXPECT_TRUE(realizable_check(a, 30).passed());
}
