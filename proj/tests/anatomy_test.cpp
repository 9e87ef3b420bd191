#include "armleg/anatomy.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"

namespace armleg {
namespace {

using Coeffs = std::vector<std::int64_t>;

Coeffs coeffs_of(const qseries& s) {
  return {s.coefficients().begin(), s.coefficients().end()};
}

// Corner counts from drawn diagrams of the recursive enumeration.
std::int64_t oracle_corner(const AnatomyParams& p, int n) {
  std::int64_t count = 0;
  for (const auto& parts : oracle::partitions(n)) {
    const oracle::Diagram drawn(parts);
    if (!drawn.at(p.i, p.j)) continue;
    if (drawn.right_of(p.i + 1, p.j + 1) == p.c &&
        drawn.below(p.i + 1, p.j + 1) == p.d) {
      ++count;
    }
  }
  return count;
}

TEST(Anatomy, GeneratingFunctionExamples) {
  EXPECT_EQ(coeffs_of(anatomy_gf({0, 0, 0, 0}, 3)), (Coeffs{0, 1, 0, 0}));
  Coeffs brute;
  for (int n = 0; n <= 3; ++n) brute.push_back(oracle_corner({0, 0, 0, 1}, n));
  EXPECT_EQ(brute, (Coeffs{0, 0, 1, 1}));
  EXPECT_EQ(coeffs_of(anatomy_gf({0, 0, 0, 1}, 3)), brute);
  EXPECT_EQ(coeffs_of(anatomy_gf({1, 1, 0, 0}, 4)), (Coeffs{0, 0, 0, 1, 1}));
}

TEST(Anatomy, FactorsAreTheSevenRegions) {
  const AnatomyParams p{2, 1, 3, 2};
  constexpr std::size_t order = 60;
  const auto f = anatomy_factors(p, order);
  EXPECT_EQ(f.corner_rectangle, make_monomial(6, order));
  EXPECT_EQ(f.above_arm, make_monomial(9, order));
  EXPECT_EQ(f.left_of_leg, make_monomial(4, order));
  EXPECT_EQ(f.above_right, invert(q_pochhammer(1, 3, order)));
  EXPECT_EQ(f.below_left, invert(q_pochhammer(1, 2, order)));
  EXPECT_EQ(f.hook, make_monomial(4, order));
  EXPECT_EQ(f.inside_hook, gauss_binomial(2, 1, order));
  EXPECT_EQ(f.product(), anatomy_gf(p, order));
  EXPECT_EQ(anatomy_min_degree(p), 4u + 6 + 9 + 4);
  EXPECT_THROW(anatomy_factors({-1, 0, 0, 0}, 5), usage_error);
}

TEST(Anatomy, CornerCountExamples) {
  EXPECT_EQ(corner_count_brute({0, 0, 0, 0}, 1), 1);
  EXPECT_EQ(corner_count_brute({0, 0, 0, 1}, 3), 1);
  EXPECT_EQ(corner_count_brute({1, 1, 0, 0}, 4), 1);
  EXPECT_EQ(corner_count_brute({0, 0, 5, 5}, 4), 0);
}

TEST(Anatomy, CornerCountMatchesDrawnDiagrams) {
  for (int c = 0; c <= 2; ++c)
    for (int d = 0; d <= 2; ++d)
      for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
          for (int n = 0; n <= 14; ++n) {
            const AnatomyParams p{c, d, i, j};
            ASSERT_EQ(corner_count_brute(p, n), oracle_corner(p, n));
          }
}

TEST(Anatomy, SeriesMatchesBruteForSmallCorners) {
  constexpr int n_max = 25;
  for (int c = 0; c <= 3; ++c)
    for (int d = 0; d <= 3; ++d)
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          const AnatomyParams p{c, d, i, j};
          const auto gf = anatomy_gf(p, n_max);
          for (int n = 0; n <= n_max; ++n) {
            ASSERT_EQ(gf[n], corner_count_brute(p, n))
                << "c=" << c << " d=" << d << " i=" << i << " j=" << j
                << " n=" << n;
          }
        }
}

TEST(Anatomy, TransposeSymmetry) {
  constexpr std::size_t order = 30;
  for (int c = 0; c <= 3; ++c)
    for (int d = 0; d <= 3; ++d)
      for (int i = 0; i <= 3; ++i)
        for (int j = 0; j <= 3; ++j) {
          EXPECT_EQ(anatomy_gf({c, d, i, j}, order),
                    anatomy_gf({d, c, j, i}, order));
          for (int n = 0; n <= 12; ++n) {
            ASSERT_EQ(corner_count_brute({c, d, i, j}, n),
                      corner_count_brute({d, c, j, i}, n));
          }
        }
}

TEST(Anatomy, VerifyExamples) {
  const auto r = verify_anatomy(0, 0, 5, 10);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.values(), (Coeffs{0, 1, 2, 4, 7, 12}));
  EXPECT_TRUE(verify_anatomy(1, 0, 5, 10).passed());
  const auto empty = verify_anatomy(0, 0, 0, 10);
  EXPECT_TRUE(empty.passed());
  EXPECT_EQ(empty.values(), (Coeffs{0}));
  EXPECT_THROW(verify_anatomy(0, 0, 11, 10), usage_error);
}

TEST(Anatomy, CornerSumsReproducePairCounts) {
  for (int c = 0; c <= 3; ++c) {
    for (int d = 0; d <= 3; ++d) {
      const auto r = verify_anatomy(c, d, 18, 18, 2);
      EXPECT_TRUE(r.passed()) << r.context();
    }
  }
}

TEST(ProofChain, Stages) {
  for (std::size_t c = 0; c <= 2; ++c) {
    for (std::size_t d = 0; d <= 2; ++d) {
      const auto rhs = lemma_rhs(c, d, 24);
      EXPECT_EQ(chain_double_sum(c, d, 24), rhs);
      EXPECT_EQ(chain_after_fact2(c, d, 24), rhs);
      EXPECT_EQ(chain_single_sum(c, d, 24), rhs);
      EXPECT_EQ(chain_after_fact1(c, d, 24), rhs);
      EXPECT_EQ(chain_closed_form(c, d, 24), rhs);
    }
  }
}

TEST(ProofChain, DoubleSumIsSumOfCorners) {
  constexpr std::size_t order = 20;
  for (int c = 0; c <= 2; ++c) {
    for (int d = 0; d <= 2; ++d) {
      qseries sum(order);
      for (int i = 0; i <= static_cast<int>(order); ++i)
        for (int j = 0; j <= static_cast<int>(order); ++j)
          if (anatomy_min_degree({c, d, i, j}) <= order)
            sum += anatomy_gf({c, d, i, j}, order);
      EXPECT_EQ(sum, chain_double_sum(c, d, order));
    }
  }
}

TEST(ProofChain, Examples) {
  EXPECT_TRUE(proof_chain(0, 0, 30).passed());
  EXPECT_TRUE(proof_chain(3, 2, 40).passed());
  EXPECT_TRUE(proof_chain(0, 0, 0).passed());
  EXPECT_TRUE(chain_double_sum(0, 0, 0).is_zero());
  EXPECT_TRUE(chain_closed_form(0, 0, 0).is_zero());
  EXPECT_THROW(proof_chain(-1, 0, 5), usage_error);
}

}  // namespace
}  // namespace armleg
