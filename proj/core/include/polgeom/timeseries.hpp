#pragma once

#include "polgeom/indices.hpp"
#include "polgeom/simplex.hpp"

#include <optional>
#include <vector>

namespace polgeom {

/// Entries below this value are raised to it on ingestion.
inline constexpr double kProbabilityFloor = 1e-9;
/// Accepted deviation of a raw row sum from 1 before renormalization.
inline constexpr double kRowSumTol = 1e-6;

struct DistributionSeries {
  std::vector<double> times;
  std::vector<SimplexPoint> points;
  /// True where the ingested row contained an entry below kProbabilityFloor.
  std::vector<bool> floored;

  /// Builds a series from raw rows: floors small entries, renormalizes and
  /// flags the rows that were touched. Throws DimensionMismatch on ragged
  /// input or fewer than two rows, NotInterior on negative or non-finite
  /// entries and rows whose sum is off by more than kRowSumTol.
  static DistributionSeries from_rows(std::vector<double> times, const std::vector<Vector>& rows);

  std::size_t size() const noexcept { return points.size(); }
};

/// v = p_to / p_from - 1, a centered random variable at p_from.
TangentVector estimate_velocity(const SimplexPoint& from, const SimplexPoint& to);

struct Alignment {
  double score = 0.0;
  /// Missing when either vector has zero norm.
  std::optional<double> cosine;
};

/// score = E_p[v grad]; cosine = score / (|v|_p |grad|_p), clamped to [-1, 1].
Alignment alignment(const TangentVector& v, const TangentVector& grad);

/// The index gradient as a centered random variable at p: sum_j g_j D_j p,
/// where g is the natural gradient in eta coordinates.
TangentVector gradient_representation(const IndexSpec& spec, const SimplexPoint& p);

struct VelocityStep {
  double t_from = 0.0;
  double t_to = 0.0;
  double index_from = 0.0;
  double index_to = 0.0;
  double delta = 0.0;
  Vector velocity;
  Alignment alignment;
  bool floored = false;
};

struct VelocityIndexReport {
  IndexSpec index;
  std::vector<VelocityStep> steps;
};

VelocityIndexReport analyze_series(const DistributionSeries& series, const IndexSpec& index);

}  // namespace polgeom
