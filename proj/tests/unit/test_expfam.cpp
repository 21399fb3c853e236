#include "oracles.hpp"

#include <polgeom/errors.hpp>
#include <polgeom/expfam.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace polgeom;
namespace pt = polgeom::testing;

TEST(TripleTable, Structure) {
  const TripleSampleTable table = build_triple_table();
  ASSERT_EQ(table.rows.size(), 27u);
  EXPECT_EQ(table.polarized_count(), 18u);
  for (const auto& r : table.rows) {
    EXPECT_EQ(r.t1, r.x1 + r.y1 + r.z1);
    EXPECT_EQ(r.t2, r.x2 + r.y2 + r.z2);
    EXPECT_EQ(r.x1, r.x == 1);
    EXPECT_EQ(r.z2, r.z == 2);
  }
  const TripleRow& first = table.rows[0];
  EXPECT_EQ(first.t1 + first.t2, 0);
  EXPECT_FALSE(first.polarized);
  const TripleRow& r18 = table.rows[17];
  EXPECT_EQ(r18.x, 2);
  EXPECT_EQ(r18.y, 2);
  EXPECT_EQ(r18.z, 1);
  EXPECT_EQ(r18.t1, 1);
  EXPECT_EQ(r18.t2, 2);
  EXPECT_TRUE(r18.polarized);
  const std::set<int> bold = {2, 3, 4, 5, 7, 9, 10, 11, 13, 15, 17, 18, 19, 21, 23, 24, 25, 26};
  for (int k = 1; k <= 27; ++k) EXPECT_EQ(table.rows[k - 1].polarized, bold.count(k) == 1) << k;
}

TEST(CountTable, MatchesPublishedCounts) {
  const int expected[4][4] = {{1, 3, 3, 1}, {3, 6, 3, 0}, {3, 3, 0, 0}, {1, 0, 0, 0}};
  const CountTable f = count_table();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) EXPECT_EQ(f(a, b), expected[a][b]);
  }
  EXPECT_EQ(f.total(), 27);
}

TEST(Polarization, SupportIsDerivedFromTheTable) {
  auto support = polarization_support();
  std::sort(support.begin(), support.end());
  const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {1, 0},
                                                     {1, 2}, {2, 0}, {2, 1}};
  EXPECT_EQ(support, expected);
  EXPECT_TRUE(polarization_indicator(1, 2));
  EXPECT_FALSE(polarization_indicator(1, 1));
  EXPECT_FALSE(polarization_indicator(3, 0));
}

TEST(Psi, Values) {
  EXPECT_NEAR(psi(Theta{0, 0}), std::log(3.0), 1e-15);
  EXPECT_NEAR(psi(Theta{std::log(2.0), 0}), std::log(4.0), 1e-15);
  EXPECT_NEAR(psi_normalized(Theta{0, 0}), 0.0, 1e-15);
  EXPECT_TRUE(std::isfinite(psi(Theta{900.0, 0.0})));
  const Vector g = pt::central_gradient([](const Vector& t) { return psi(Theta(t)); },
                                        Theta{0, 0}.values, 1e-5);
  EXPECT_NEAR(g[0], 1.0 / 3, 1e-8);
  EXPECT_NEAR(g[1], 1.0 / 3, 1e-8);
  auto rng = pt::make_rng(51);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 100; ++k) {
    const Theta t{u(rng), u(rng)};
    const Vector fd = pt::central_gradient([](const Vector& s) { return psi(Theta(s)); }, t.values);
    EXPECT_LE((fd - theta_to_eta(t).values).cwiseAbs().maxCoeff(), 1e-8);
    const SimplexPoint a = exponential_point_normalized(t);
    const SimplexPoint b = theta_to_point(t);
    EXPECT_LE((a.probs() - b.probs()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(PolExpectation, ThreeTimesPol) {
  EXPECT_NEAR(pol_expectation_theta(Theta{0, 0}), 2.0 / 3, 1e-15);
  auto rng = pt::make_rng(52);
  std::uniform_real_distribution<double> u(-3, 3);
  const TripleSampleTable table = build_triple_table();
  for (int k = 0; k < 1000; ++k) {
    const Theta t{u(rng), u(rng)};
    const Vector e = theta_to_eta(t).values;
    const Vector p = (Vector(3) << 1 - e.sum(), e[0], e[1]).finished();
    ASSERT_NEAR(pol_expectation_theta(t), 3.0 * pt::pol_by_triples(p), 1e-12);
    // Weighted sum over the 27 outcomes.
    double weighted = 0.0;
    Vector mean_t = Vector::Zero(2);
    for (const auto& r : table.rows) {
      const double w = p[r.x] * p[r.y] * p[r.z];
      if (r.polarized) weighted += w;
      mean_t[0] += w * r.t1;
      mean_t[1] += w * r.t2;
    }
    ASSERT_NEAR(pol_expectation_theta(t), weighted, 1e-12);
    ASSERT_LE((expectation_params(t) - mean_t).cwiseAbs().maxCoeff(), 1e-12);
    ASSERT_LE((expectation_params(t) - 3.0 * e).cwiseAbs().maxCoeff(), 1e-12);
  }
  const Vector e0 = expectation_params(Theta{0, 0});
  EXPECT_NEAR(e0[0], 1.0, 1e-15);
}

TEST(Toric, BorderDistributions) {
  const CountTable f = count_table();
  for (int t2 = 0; t2 <= 3; ++t2) {
    EXPECT_DOUBLE_EQ(toric_probability(Eta{0.0, 0.5}, 0, t2), f(0, t2) / 8.0);
  }
  EXPECT_EQ(toric_probability(Eta{0.0, 0.5}, 1, 1), 0.0);
  for (int t = 0; t <= 3; ++t) {
    EXPECT_DOUBLE_EQ(toric_probability(Eta{0.5, 0.5}, t, 3 - t), f(t, 3 - t) / 8.0);
  }
  EXPECT_EQ(toric_probability(Eta{0.5, 0.5}, 1, 1), 0.0);
  EXPECT_THROW(toric_probability(Eta{0.2, 0.3}, 2, 2), OutOfPolytope);
  EXPECT_THROW(toric_probability(Eta{0.8, 0.3}, 0, 0), NotInterior);
}

TEST(Toric, SumsToOneOnTheClosedSimplex) {
  const auto total = [](const Eta& e) {
    double s = 0.0;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        const double p = toric_probability(e, a, b);
        EXPECT_GE(p, 0.0);
        s += p;
      }
    }
    return s;
  };
  EXPECT_NEAR(total(Eta{0.2, 0.3}), 1.0, 1e-15);
  for (const Eta& e : {Eta{0, 0}, Eta{1, 0}, Eta{0, 1}, Eta{0, 0.5}, Eta{0.5, 0}, Eta{0.5, 0.5},
                       Eta{0.3, 0.7}, Eta{0.0, 0.9}}) {
    EXPECT_NEAR(total(e), 1.0, 1e-15);
  }
}

TEST(Toric, BorderExpectations) {
  EXPECT_EQ(border_pol_expectation(Eta{0.0, 0.5}), 0.75);
  EXPECT_EQ(border_pol_expectation(Eta{0.5, 0.0}), 0.75);
  EXPECT_EQ(border_pol_expectation(Eta{0.5, 0.5}), 0.75);
  EXPECT_EQ(border_pol_expectation(Eta{0.0, 0.0}), 0.0);
  EXPECT_EQ(border_pol_expectation(Eta{1.0, 0.0}), 0.0);
  EXPECT_NEAR(border_pol_expectation(Eta{0.2, 0.3}),
              3.0 * pt::pol_by_triples((Vector(3) << 0.5, 0.2, 0.3).finished()), 1e-15);
}
