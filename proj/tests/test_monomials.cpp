#include <random>

#include <gtest/gtest.h>

#include "conicgin/monomials.hpp"
#include "support/oracles.hpp"

using namespace conicgin;

namespace {

const Monomial x2{2, 0, 0}, xy{1, 1, 0}, xz{1, 0, 1}, y2{0, 2, 0}, x3{3, 0, 0};

Monomial random_monomial(std::mt19937& rng, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  return {e(rng), e(rng), e(rng)};
}

}  // namespace

TEST(Degrevlex, Examples) {
  EXPECT_EQ(degrevlex_compare(x2, xy), std::strong_ordering::greater);
  EXPECT_EQ(degrevlex_compare(xz, y2), std::strong_ordering::less);
  EXPECT_EQ(degrevlex_compare(x3, y2), std::strong_ordering::greater);
  EXPECT_EQ(degrevlex_compare(xy, xy), std::strong_ordering::equal);
}

TEST(Degrevlex, TotalOrderAgreesWithLiteralDefinition) {
  std::mt19937 rng(2024);
  auto sign = [](std::strong_ordering o) { return o < 0 ? -1 : o > 0 ? 1 : 0; };
  for (int i = 0; i < 3000; ++i) {
    const Monomial u = random_monomial(rng, 3), v = random_monomial(rng, 3), w = random_monomial(rng, 3);
    const int uv = sign(degrevlex_compare(u, v));
    EXPECT_EQ(uv, oracle::degrevlex_sign(u, v));
    EXPECT_EQ(uv, -sign(degrevlex_compare(v, u)));
    EXPECT_EQ(uv == 0, u == v);
    if (uv > 0 && sign(degrevlex_compare(v, w)) > 0) {
      EXPECT_GT(sign(degrevlex_compare(u, w)), 0);
    }
  }
}

TEST(MonomialsOfDegree, Examples) {
  EXPECT_EQ(monomials_of_degree(0, 3), (std::vector<Monomial>{{0, 0, 0}}));
  auto quadrics = monomials_of_degree(2, 3);
  ASSERT_EQ(quadrics.size(), 6u);
  EXPECT_EQ(quadrics.front(), x2);
  EXPECT_EQ(quadrics.back(), (Monomial{0, 0, 2}));
  EXPECT_EQ(monomials_of_degree(3, 2), (std::vector<Monomial>{{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}}));
}

TEST(MonomialsOfDegree, StrictlyDecreasingWithBinomialCount) {
  for (int d = 0; d <= 12; ++d) {
    auto mons = monomials_of_degree(d, 3);
    EXPECT_EQ(mons.size(), static_cast<std::size_t>((d + 1) * (d + 2) / 2));
    for (std::size_t i = 1; i < mons.size(); ++i) {
      EXPECT_EQ(degrevlex_compare(mons[i - 1], mons[i]), std::strong_ordering::greater);
    }
  }
}

TEST(StronglyStable, Examples) {
  EXPECT_TRUE(is_strongly_stable({x2, xy, {0, 3, 0}}));
  EXPECT_FALSE(is_strongly_stable({y2}));
  EXPECT_TRUE(is_strongly_stable({{1, 0, 0}}));
  EXPECT_THROW(is_strongly_stable({}), Error);
}

TEST(StronglyStable, AgreesWithEnumerationOracle) {
  std::mt19937 rng(5);
  int stable_seen = 0;
  for (int i = 0; i < 2000; ++i) {
    MonomialSet gens;
    const int n = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < n; ++k) {
      Monomial m = random_monomial(rng, 2);
      if (m.degree() > 0) gens.insert(m);
    }
    if (gens.empty()) continue;
    const bool fast = is_strongly_stable(gens);
    stable_seen += fast;
    EXPECT_EQ(fast, oracle::strongly_stable_by_enumeration(gens, 9));
  }
  EXPECT_GT(stable_seen, 0);
}

TEST(MinimalGenerators, Examples) {
  EXPECT_EQ(minimal_generators({x2, x3, xy}), (MonomialSet{x2, xy}));
  const MonomialSet antichain{{0, 5, 0}, {1, 4, 0}, {2, 2, 0}};
  EXPECT_EQ(minimal_generators(antichain), antichain);
  EXPECT_TRUE(minimal_generators({}).empty());
}

TEST(MinimalGenerators, Idempotent) {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    MonomialSet gens;
    for (int k = 0; k < 6; ++k) gens.insert(random_monomial(rng, 3));
    const MonomialSet once = minimal_generators(gens);
    EXPECT_EQ(minimal_generators(once), once);
    for (const Monomial& m : gens) EXPECT_TRUE(ideal_contains(once, m));
  }
}

TEST(MonomialText, FormatAndParse) {
  EXPECT_EQ(to_string({0, 0, 0}), "1");
  EXPECT_EQ(to_string({1, 3, 0}), "x^1*y^3");
  EXPECT_EQ(to_string({0, 0, 2}), "z^2");
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Monomial m = random_monomial(rng, 12);
    EXPECT_EQ(parse_monomial(to_string(m)), m);
  }
  EXPECT_THROW(parse_monomial("w^2"), Error);
}

TEST(ProductContained, GradedExample) {
  const MonomialSet gin1{x2, xy, {0, 3, 0}};
  const MonomialSet gin2{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}, {1, 4, 0}, {0, 5, 0}};
  EXPECT_TRUE(product_contained(gin1, gin1, gin2));
  EXPECT_FALSE(product_contained(gin1, gin1, {{0, 7, 0}}));
}
