#include "oracles.hpp"

#include <polgeom/connection.hpp>
#include <polgeom/errors.hpp>
#include <polgeom/fisher.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace polgeom;
namespace pt = polgeom::testing;

namespace {

std::function<Eta(double)> constant_path(const Eta& e) {
  return [e](double) { return e; };
}

std::function<Eta(double)> wiggle(const Vector& centre, const Vector& amp) {
  return [=](double t) {
    Vector e = centre;
    for (Eigen::Index j = 0; j < e.size(); ++j) e[j] += amp[j] * std::sin((j + 1.0) * t + 0.3 * j);
    return Eta(e);
  };
}

}  // namespace

TEST(Covariance, Values) {
  const Eta u{1.0 / 3, 1.0 / 3};
  const FramedField zero{[](double) { return Vector(Vector::Zero(2)); }, constant_path(u)};
  EXPECT_EQ(covariance_along_path(zero, zero, 0.0), 0.0);
  const FramedField e1{[](double) { return Vector(Vector::Unit(2, 0)); }, constant_path(u)};
  EXPECT_NEAR(covariance_along_path(e1, e1, 0.0), 6.0, 1e-12);
  const FramedField f{[](double t) { return Vector((Vector(2) << 1.0 + t, -2.0).finished()); },
                      wiggle(u.values, Vector::Constant(2, 0.05))};
  const FramedField g{[](double t) { return Vector((Vector(2) << 0.5, t * t).finished()); },
                      f.path};
  EXPECT_NEAR(covariance_along_path(f, g, 0.7), covariance_along_path(g, f, 0.7), 1e-14);
  const FramedField bad{[](double) { return Vector(Vector::Zero(3)); }, constant_path(u)};
  EXPECT_THROW(covariance_along_path(bad, e1, 0.0), DimensionMismatch);
}

TEST(MetricDerivative, ReducesToPlainDerivative) {
  const Eta u{0.2, 0.3};
  const FramedField constant{[](double) { return Vector((Vector(2) << 1.0, 2.0).finished()); },
                             constant_path(u)};
  EXPECT_EQ(metric_derivative(constant, 0.4, 1e-4).norm(), 0.0);
  const FramedField moving{[](double t) { return Vector((Vector(2) << t * t, std::sin(t)).finished()); },
                           constant_path(u)};
  const Vector d = metric_derivative(moving, 0.5, 1e-4);
  EXPECT_NEAR(d[0], 1.0, 1e-8);
  EXPECT_NEAR(d[1], std::cos(0.5), 1e-8);
  EXPECT_LE(metric_rate(constant_path(u), 0.5, 1e-4).norm(), 1e-10);
  EXPECT_THROW(metric_derivative(moving, 0.5, 0.0), InvalidStep);
}

TEST(MetricDerivative, CorrectionTerm) {
  const auto path = wiggle((Vector(2) << 0.3, 0.25).finished(), (Vector(2) << 0.05, 0.04).finished());
  const FramedField f{[](double) { return Vector((Vector(2) << 1.0, -1.0).finished()); }, path};
  const double t = 0.2, h = 1e-4;
  const Matrix rate = metric_rate(path, t, h);
  const Vector expected = 0.5 * fisher_inverse_eta(path(t)) * rate * f.components(t);
  EXPECT_LE((metric_derivative(f, t, h) - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(expected.norm(), 1e-3);
}

TEST(MetricDerivative, MetricCompatibility) {
  auto rng = pt::make_rng(71);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int k = 0; k < 10; ++k) {
    const Eigen::Index n = 2 + k % 3;
    const Vector centre = pt::random_probs(rng, n + 1, 0.5).tail(n);
    const Vector amp = 0.1 * centre / static_cast<double>(n);
    const auto path = wiggle(centre, amp);
    Matrix a = Matrix::NullaryExpr(n, 2, [&]() { return u(rng); });
    Matrix b = Matrix::NullaryExpr(n, 2, [&]() { return u(rng); });
    const FramedField f{[a](double t) { return Vector(a.col(0) + std::cos(t) * a.col(1)); }, path};
    const FramedField g{[b](double t) { return Vector(b.col(0) * t + b.col(1) * t * t); }, path};
    const double t = u(rng), h = 1e-4;
    const double lhs =
        (covariance_along_path(f, g, t + h) - covariance_along_path(f, g, t - h)) / (2 * h);
    const Matrix metric = fisher_eta(path(t));
    const double rhs = metric_derivative(f, t, h).dot(metric * g.components(t)) +
                       f.components(t).dot(metric * metric_derivative(g, t, h));
    EXPECT_NEAR(lhs, rhs, 1e-5);
  }
}
