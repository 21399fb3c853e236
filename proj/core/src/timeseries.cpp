#include "polgeom/timeseries.hpp"

#include "polgeom/errors.hpp"
#include "polgeom/natgrad.hpp"

#include <algorithm>
#include <cmath>

namespace polgeom {

DistributionSeries DistributionSeries::from_rows(std::vector<double> times,
                                                 const std::vector<Vector>& rows) {
  if (rows.size() < 2) throw DimensionMismatch("a series needs at least two distributions");
  if (times.size() != rows.size()) throw DimensionMismatch("one time label per row is required");
  DistributionSeries out;
  out.times = std::move(times);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vector row = rows[r];
    if (row.size() != rows.front().size()) {
      throw DimensionMismatch("row " + std::to_string(r + 1) + " has a different length");
    }
    if (!row.allFinite() || row.minCoeff() < 0.0) {
      throw NotInterior("row " + std::to_string(r + 1) + " has a negative or non-finite entry");
    }
    if (std::abs(row.sum() - 1.0) > kRowSumTol) {
      throw NotInterior("row " + std::to_string(r + 1) + " does not sum to 1");
    }
    const bool touched = row.minCoeff() < kProbabilityFloor;
    row = row.cwiseMax(kProbabilityFloor);
    row /= row.sum();
    out.points.emplace_back(std::move(row));
    out.floored.push_back(touched);
  }
  return out;
}

TangentVector estimate_velocity(const SimplexPoint& from, const SimplexPoint& to) {
  if (from.size() != to.size()) throw DimensionMismatch("distributions differ in length");
  Vector v = (to.probs().array() / from.probs().array() - 1.0).matrix();
  return TangentVector::centered(from, std::move(v));
}

Alignment alignment(const TangentVector& v, const TangentVector& grad) {
  Alignment out;
  out.score = inner(v, grad);
  const double scale = norm(v) * norm(grad);
  if (scale > 0.0) out.cosine = std::clamp(out.score / scale, -1.0, 1.0);
  return out;
}

TangentVector gradient_representation(const IndexSpec& spec, const SimplexPoint& p) {
  const Eta eta = point_to_eta(p);
  const Vector g = natural_gradient(index_gradient_eta(spec, eta), eta);
  Vector values = Vector::Zero(p.size());
  for (Eigen::Index j = 1; j <= p.n(); ++j) {
    values += g[j - 1] * coordinate_score(p, j).values();
  }
  return TangentVector::centered(p, std::move(values));
}

VelocityIndexReport analyze_series(const DistributionSeries& series, const IndexSpec& index) {
  VelocityIndexReport report{index, {}};
  if (series.points.size() < 2) throw DimensionMismatch("a series needs at least two distributions");
  for (std::size_t k = 0; k + 1 < series.points.size(); ++k) {
    const SimplexPoint& from = series.points[k];
    const SimplexPoint& to = series.points[k + 1];
    VelocityStep step;
    step.t_from = series.times[k];
    step.t_to = series.times[k + 1];
    step.index_from = index_value(index, from.probs());
    step.index_to = index_value(index, to.probs());
    step.delta = step.index_to - step.index_from;
    const TangentVector v = estimate_velocity(from, to);
    step.velocity = v.values();
    step.alignment = alignment(v, gradient_representation(index, from));
    step.floored = series.floored.size() == series.points.size() &&
                   (series.floored[k] || series.floored[k + 1]);
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace polgeom
