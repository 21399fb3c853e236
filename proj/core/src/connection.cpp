#include "polgeom/connection.hpp"

#include "polgeom/errors.hpp"
#include "polgeom/fisher.hpp"

#include <cmath>

namespace polgeom {

namespace {

void require_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidStep("difference step must be positive");
}

}  // namespace

Matrix metric_rate(const std::function<Eta(double)>& path, double t, double h) {
  require_step(h);
  return (fisher_eta(path(t + h)) - fisher_eta(path(t - h))) / (2.0 * h);
}

Vector metric_derivative(const FramedField& f, double t, double h) {
  require_step(h);
  const Vector derivative = (f.components(t + h) - f.components(t - h)) / (2.0 * h);
  const Vector value = f.components(t);
  const Matrix rate = metric_rate(f.path, t, h);
  return derivative + 0.5 * fisher_inverse_eta(f.path(t)) * (rate * value);
}

double covariance_along_path(const FramedField& f, const FramedField& g, double t) {
  const Vector a = f.components(t);
  const Vector b = g.components(t);
  const Matrix metric = fisher_eta(f.path(t));
  if (a.size() != metric.rows() || b.size() != metric.rows()) {
    throw DimensionMismatch("field components do not match the path dimension");
  }
  return a.dot(metric * b);
}

}  // namespace polgeom
