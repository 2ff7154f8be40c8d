#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "swcap/bounds.hpp"
#include "swcap/expected.hpp"
#include "swcap/mincut.hpp"

using namespace swcap;

TEST(Lemma1, Examples) {
  EXPECT_EQ(lemma1_mincut(10, 4, 1.0, 0.0), 4.0);
  EXPECT_EQ(lemma1_mincut(10, 4, 1.0, 0.5), 6.5);
  EXPECT_EQ(lemma1_mincut(10, 4, 0.0, 1.0), 5.0);
  EXPECT_NEAR(brute_force_min_cut(lattice_clique_graph({10, 4}, 0.0, 1.0)).value, 5.0, 1e-9);
  EXPECT_THROW(lemma1_mincut(10, 3, 1.0, 1.0), ParamError);
  EXPECT_THROW(lemma1_mincut(10, 4, -1.0, 1.0), ParamError);
}

TEST(Epsilon, Examples) {
  EXPECT_NEAR(epsilon({1.0}, 1000, 20.0), 1.43956, 1e-5);
  EXPECT_NEAR(epsilon({1.0}, 1000, 509.5), 0.28522, 1e-5);
  EXPECT_THROW(epsilon({1.0}, 1000, 0.0), ParamError);
  EXPECT_THROW(epsilon({0.0}, 1000, 1.0), ParamError);
  EXPECT_THROW(epsilon({1.0}, 1, 1.0), ParamError);
}

TEST(Epsilon, StrictlyDecreasingInCw) {
  double prev = epsilon({1.0}, 500, 0.5);
  for (double c = 1.0; c < 2000.0; c *= 1.3) {
    const double e = epsilon({1.0}, 500, c);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Shortcuts, CwExamples) {
  EXPECT_EQ(cw_shortcuts({{1000, 20}, 0.0}), 20.0);
  EXPECT_EQ(cw_shortcuts({{1000, 20}, 0.5}), 509.5);
  EXPECT_NEAR(cw_shortcuts({{10, 4}, 0.3}), 5.5, 1e-12);
  EXPECT_NEAR(brute_force_min_cut(expected_graph_shortcuts({{10, 4}, 0.3})).value, 5.5, 1e-9);
}

TEST(Shortcuts, CwStrictlyIncreasingInP) {
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double c = cw_shortcuts({{200, 10}, i / 20.0});
    EXPECT_GT(c, prev);
    prev = c;
  }
}

TEST(Shortcuts, Interval) {
  const auto rep = bounds_shortcuts({{1000, 20}, 0.5}, {1.0});
  EXPECT_NEAR(rep.lower, 364.2, 0.05);
  EXPECT_NEAR(rep.upper, 654.8, 0.05);
  EXPECT_NEAR(rep.upper - rep.lower, 2 * rep.epsilon * rep.c_w, 1e-9);
  EXPECT_FALSE(rep.clamped);

  const auto low = bounds_shortcuts({{1000, 20}, 0.0}, {1.0});
  EXPECT_TRUE(low.clamped);
  EXPECT_LT(low.lower_raw, 0.0);
  EXPECT_EQ(low.lower, 0.0);
  EXPECT_NEAR(low.upper - low.lower_raw, 2 * low.epsilon * low.c_w, 1e-9);
}

TEST(Rewiring, IntervalIsPIndependent) {
  for (double p : {0.0, 0.2, 0.7, 1.0}) {
    const auto rep = bounds_rewiring({{1000, 20}, p}, {1.0});
    EXPECT_EQ(rep.upper, 20.0);
    EXPECT_EQ(rep.epsilon, epsilon({1.0}, 1000, 20.0));
  }
  const auto rep = bounds_rewiring({{100, 30}, 0.4}, {1.0});
  EXPECT_NEAR(rep.epsilon, 0.9597, 1e-4);
  EXPECT_FALSE(rep.clamped);
  // (1 - 0.9597) * 30.
  EXPECT_NEAR(rep.lower, 1.2088, 1e-3);
}

TEST(Kleinberg, CwWithoutShortcutsIsLatticeDegree) {
  EXPECT_EQ(cw_kleinberg({10, 2, 0, 2.0}), 5.0);
  EXPECT_EQ(cw_kleinberg({10, 1, 0, 1.0}), 2.0);
}

TEST(Kleinberg, CwMatchesExpectedGraphMinCut) {
  for (int q : {1, 2})
    for (double r : {0.0, 1.0, 2.0}) {
      const KleinbergParams p{4, 1, q, r};
      EXPECT_NEAR(cw_kleinberg(p), brute_force_min_cut(expected_graph_kleinberg(p)).value, 1e-9)
          << "q=" << q << " r=" << r;
    }
}

TEST(Kleinberg, SingleTrialIdentity) {
  const KleinbergParams p{7, 2, 1, 1.5};
  const auto table = kleinberg_normalizer_table(p);
  double sum = 0.0;
  for (int x = 1; x <= 7; ++x)
    for (int y = 1; y <= 7; ++y) {
      const int d = x + y - 2;
      if (d > p.h) sum += std::pow(d, -p.r) / table.at(x, y);
    }
  EXPECT_NEAR(cw_kleinberg(p, table), p.lattice_degree_at_corner() + 1.0 + sum, 1e-12);
}

TEST(Kleinberg, PrintedRangeRecountsDiagonal) {
  const KleinbergParams p{6, 2, 2, 1.0};
  const double consistent = cw_kleinberg(p, CornerSumRange::kDistanceConsistent);
  const double printed = cw_kleinberg(p, CornerSumRange::kAsPrinted);
  EXPECT_GT(printed, consistent);
  EXPECT_NEAR(brute_force_min_cut(expected_graph_kleinberg({4, 1, 2, 1.0})).value,
              cw_kleinberg({4, 1, 2, 1.0}), 1e-9);
  EXPECT_GT(std::abs(cw_kleinberg({4, 1, 2, 1.0}, CornerSumRange::kAsPrinted) -
                     brute_force_min_cut(expected_graph_kleinberg({4, 1, 2, 1.0})).value),
            1e-6);
}

TEST(Kleinberg, TightLowerIsMaxOfBothArguments) {
  const auto small = bounds_kleinberg({5, 1, 1, 2.0}, {1.0});
  EXPECT_EQ(small.tight_lower, 3.0);
  EXPECT_GT(small.tight_lower, small.lower_raw);
  const auto big = bounds_kleinberg({30, 1, 200, 0.0}, {1.0});
  EXPECT_GT(big.lower_raw, big.params.h.value() * 2 + 200.0);
  EXPECT_EQ(big.tight_lower, big.lower_raw);
  for (const auto& rep : {small, big}) {
    EXPECT_GE(rep.tight_lower, rep.lower_raw);
    EXPECT_GE(rep.tight_lower, rep.lower);
    EXPECT_LE(rep.lower, rep.upper);
    EXPECT_EQ(rep.clamped, rep.epsilon > 1.0);
    EXPECT_NEAR(rep.epsilon, std::sqrt(6.0 * std::log(double(rep.params.n.value()) * rep.params.n.value()) / rep.c_w),
                1e-12);
  }
}

TEST(Kleinberg, RejectsInvalid) {
  EXPECT_THROW(cw_kleinberg({3, 2, 1, 1.0}), ParamError);
  EXPECT_THROW(bounds_kleinberg({2, 1, 1, 1.0}, {1.0}), ParamError);
  const auto table = kleinberg_normalizer_table({5, 1, 1, 1.0});
  EXPECT_THROW(cw_kleinberg({6, 1, 1, 1.0}, table), ParamError);
}

TEST(NavigableRing, CwExamples) {
  EXPECT_EQ(cw_navigable_ring({{100, 6}, 0, 1.0}), 6.0);
  EXPECT_NEAR(cw_navigable_ring({{10, 4}, 1, 1.0}), 6.0, 1e-12);
  EXPECT_NEAR(cw_navigable_ring({{11, 4}, 2, 1.0}),
              brute_force_min_cut(expected_graph_navigable_ring({{11, 4}, 2, 1.0})).value, 1e-9);
}

TEST(NavigableRing, Interval) {
  for (int q = 0; q <= 10; ++q) {
    const auto rep = bounds_navigable_ring({{1600, 14}, q, 1.0}, {1.0});
    EXPECT_GE(rep.tight_lower, 14.0);
    EXPECT_GE(rep.tight_lower, rep.lower_raw);
    EXPECT_LE(rep.lower, rep.upper);
    EXPECT_NEAR(rep.epsilon, std::sqrt(6.0 * std::log(1600.0) / rep.c_w), 1e-12);
  }
  const auto flat = bounds_navigable_ring({{1600, 14}, 0, 1.0}, {1.0});
  EXPECT_EQ(flat.c_w, 14.0);
  EXPECT_EQ(flat.tight_lower, 14.0);
  EXPECT_NEAR(flat.upper, (1 + std::sqrt(6.0 * std::log(1600.0) / 14.0)) * 14.0, 1e-9);
}

TEST(BoundsReport, CsvRow) {
  const auto rep = bounds_shortcuts({{1000, 20}, 0.5}, {1.0});
  EXPECT_EQ(std::string(BoundsReport::csv_header),
            "model,n,k,p,h,q,r,d,c_w,epsilon,lower,upper,tight_lower,clamped");
  EXPECT_EQ(rep.csv_row(), "shortcuts,1000,20,0.5,,,,1,509.5,0.285215,364.183,654.817,364.183,0");
  EXPECT_EQ(bounds_kleinberg({5, 1, 0, 2.0}, {1.0}).csv_row().rfind("kleinberg,5,,,1,0,2,1,2,", 0), 0u);
}
