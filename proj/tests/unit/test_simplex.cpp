#include "oracles.hpp"

#include <polgeom/errors.hpp>
#include <polgeom/simplex.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace polgeom;
namespace pt = polgeom::testing;

namespace {

Vector vec(std::initializer_list<double> v) { return Eta(v).values; }

}  // namespace

TEST(SimplexPoint, AcceptsInteriorAndRejectsBorder) {
  const SimplexPoint p(vec({0.5, 0.2, 0.3}));
  EXPECT_EQ(p.n(), 2);
  EXPECT_DOUBLE_EQ(p[0], 0.5);
  EXPECT_THROW(SimplexPoint(vec({0.0, 0.5, 0.5})), NotInterior);
  EXPECT_THROW(SimplexPoint(vec({0.5, 0.6, 0.1})), NotInterior);
  EXPECT_THROW(SimplexPoint(vec({1.0})), NotInterior);
  EXPECT_THROW(SimplexPoint(vec({NAN, 0.5, 0.5})), NotInterior);
}

TEST(SimplexPoint, RenormalizesTinySumErrors) {
  const SimplexPoint p(vec({0.5 + 1e-11, 0.2, 0.3}));
  EXPECT_NEAR(p.probs().sum(), 1.0, 1e-15);
}

TEST(Charts, EtaExamples) {
  const SimplexPoint u = eta_to_point(Eta{1.0 / 3, 1.0 / 3});
  for (Eigen::Index x = 0; x < 3; ++x) EXPECT_NEAR(u[x], 1.0 / 3, 1e-15);
  const SimplexPoint p = eta_to_point(Eta{0.2, 0.3});
  EXPECT_NEAR(p[0], 0.5, 1e-15);
  EXPECT_NEAR(p[1], 0.2, 1e-15);
  EXPECT_THROW(eta_to_point(Eta{0.5, 0.5}), NotInterior);
  const Eta back = point_to_eta(SimplexPoint(vec({0.5, 0.2, 0.3})));
  EXPECT_DOUBLE_EQ(back[0], 0.2);
  EXPECT_DOUBLE_EQ(back[1], 0.3);
}

TEST(Charts, EtaRoundTrip) {
  auto rng = pt::make_rng();
  for (int k = 0; k < 100; ++k) {
    const Vector p = pt::random_probs(rng, 4);
    const SimplexPoint q = eta_to_point(point_to_eta(SimplexPoint(p)));
    EXPECT_LE((q.probs() - p).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(Charts, ThetaExamples) {
  const Eta u = theta_to_eta(Theta{0.0, 0.0});
  EXPECT_NEAR(u[0], 1.0 / 3, 1e-15);
  const Eta e = theta_to_eta(Theta{std::log(2.0), 0.0});
  EXPECT_NEAR(e[0], 0.5, 1e-15);
  EXPECT_NEAR(e[1], 0.25, 1e-15);
  const Theta t = eta_to_theta(Eta{0.5, 0.25});
  EXPECT_NEAR(t[0], std::log(2.0), 1e-15);
  EXPECT_NEAR(t[1], 0.0, 1e-15);
  const Theta s = eta_to_theta(Eta{0.2, 0.3});
  EXPECT_NEAR(s[0], std::log(0.4), 1e-15);
  EXPECT_NEAR(s[1], std::log(0.6), 1e-15);
  const Theta z = eta_to_theta(Eta{1.0 / 3, 1.0 / 3});
  EXPECT_NEAR(z.values.norm(), 0.0, 1e-15);
}

TEST(Charts, ThetaRoundTripAndLargeValues) {
  auto rng = pt::make_rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int k = 0; k < 100; ++k) {
    const Theta t{u(rng), u(rng), u(rng)};
    EXPECT_LE((eta_to_theta(theta_to_eta(t)).values - t.values).norm(), 1e-10);
  }
  const Eta big = theta_to_eta(Theta{800.0, 0.0});
  EXPECT_TRUE(big.values.allFinite());
  EXPECT_NEAR(big[0], 1.0, 1e-15);
}

TEST(Charts, ProjectiveExamples) {
  const SimplexPoint u = projective_to_point(Xi{1.0, 1.0});
  EXPECT_NEAR(u[2], 1.0 / 3, 1e-15);
  const SimplexPoint p = projective_to_point(Xi{2.0, 1.0});
  EXPECT_NEAR(p[0], 0.25, 1e-15);
  EXPECT_NEAR(p[1], 0.5, 1e-15);
  EXPECT_NEAR(p[2], 0.25, 1e-15);
  EXPECT_THROW(projective_to_point(Xi{-1.0, 1.0}), NotInterior);
  auto rng = pt::make_rng(4);
  for (int k = 0; k < 100; ++k) {
    const Eta e(pt::random_eta(rng, 3));
    EXPECT_LE((projective_to_eta(eta_to_projective(e)).values - e.values).norm(), 1e-12);
  }
}

TEST(TangentVector, CenteringAndInnerProduct) {
  const SimplexPoint p(vec({0.5, 0.2, 0.3}));
  const TangentVector v = TangentVector::centered(p, vec({1.0, 2.0, 3.0}));
  EXPECT_NEAR(v.mean(), 0.0, 1e-15);
  EXPECT_THROW(TangentVector::checked(p, vec({1.0, 2.0, 3.0})), NotInterior);
  const TangentVector w = TangentVector::checked(p, v.values());
  EXPECT_NEAR(inner(v, w), p.expect(v.values().cwiseProduct(v.values())), 1e-15);
  EXPECT_NEAR(norm(v) * norm(v), inner(v, v), 1e-15);
}

TEST(Score, ConstantPathIsZero) {
  const SimplexPoint p(vec({0.5, 0.2, 0.3}));
  EXPECT_EQ(score_of_path(p, p, 0.1).values().norm(), 0.0);
  EXPECT_THROW(score_of_path(p, p, 0.0), InvalidStep);
}

TEST(Score, ExponentialFamilyVelocity) {
  // p(t) with theta(t) = theta0 + t * rate has score sum_j rate_j (X_j - E[X_j]).
  const Vector theta0 = vec({0.3, -0.2});
  const Vector rate = vec({1.0, 0.5});
  const double dt = 1e-5;
  const auto at = [&](double t) { return theta_to_point(Theta(theta0 + t * rate)); };
  const SimplexPoint p = at(0.0);
  const TangentVector central = score_of_path(at(-dt), p, at(dt), dt);
  Vector expected(3);
  expected << 0.0, rate[0], rate[1];
  expected.array() -= p.expect(expected);
  EXPECT_LE((central.values() - expected).cwiseAbs().maxCoeff(), 1e-8);
  const TangentVector forward = score_of_path(p, at(dt), dt);
  EXPECT_LE((forward.values() - expected).cwiseAbs().maxCoeff(), 1e-4);
  EXPECT_NEAR(forward.mean(), 0.0, 1e-15);
}

TEST(Score, CoordinateScoreBasis) {
  const SimplexPoint p(vec({0.5, 0.2, 0.3}));
  const TangentVector d1 = coordinate_score(p, 1);
  EXPECT_NEAR(d1[0], -1.0 / 0.5, 1e-15);
  EXPECT_NEAR(d1[1], 1.0 / 0.2, 1e-15);
  EXPECT_NEAR(d1[2], 0.0, 1e-15);
  EXPECT_NEAR(d1.mean(), 0.0, 1e-15);
  EXPECT_THROW(coordinate_score(p, 0), DimensionMismatch);
  EXPECT_THROW(coordinate_score(p, 3), DimensionMismatch);
}
