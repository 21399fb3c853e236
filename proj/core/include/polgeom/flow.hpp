#pragma once

#include "polgeom/natgrad.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace polgeom {

enum class TerminalReason { converged, max_steps, left_domain };
std::string_view to_string(TerminalReason r);

/// Samples of an integrated flow. `values` holds the field potential per sample
/// (NaN when the field has none).
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<Vector> states;
  std::vector<double> values;
  std::vector<double> field_norms;
  TerminalReason terminal_reason = TerminalReason::max_steps;

  std::size_t size() const noexcept { return times.size(); }
  const Vector& final_state() const { return states.back(); }
};

/// States leaving [kGuardLow, kGuardHigh]^n stop the integration.
inline constexpr double kGuardLow = -0.5;
inline constexpr double kGuardHigh = 1.5;

/// Fixed-step RK4 on eta' = field(eta). Stops when |field| < stop_tol (converged),
/// when t reaches t_max (max_steps) or when the state leaves the guard box
/// (left_domain). Throws InvalidStep for dt <= 0 or stop_tol <= 0.
TrajectoryRecord integrate(const VectorField& field, const Eta& start, double dt, double t_max,
                           double stop_tol);

enum class Stability { attractor, repeller, saddle, degenerate };
std::string_view to_string(Stability s);

/// Real parts at or below this magnitude count as zero.
inline constexpr double kDegeneracyTol = 1e-6;

struct FixedPointReport {
  Vector location;
  double residual = 0.0;
  Matrix jacobian;
  std::vector<std::complex<double>> eigenvalues;
  Stability classification = Stability::degenerate;
};

/// Sign pattern of the real parts, with |Re| <= tol counted as zero.
Stability classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues,
                               double tol = kDegeneracyTol);

/// Eigenvalues of a square matrix; closed form for 2x2, Hessenberg-QR otherwise.
/// Sorted by real part, then imaginary part.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

/// Classifies a zero of `field`. Throws NotAFixedPoint when |field(location)| >= residual_tol.
FixedPointReport classify(const VectorField& field, const Eta& location,
                          double residual_tol = 1e-8, double degeneracy_tol = kDegeneracyTol);

struct SeedFailure {
  Vector seed;
  std::string reason;
};

struct FixedPointSearch {
  /// Deduplicated roots sorted lexicographically by location.
  std::vector<FixedPointReport> points;
  std::vector<SeedFailure> failures;
};

/// Roots closer than this are merged.
inline constexpr double kRootMergeDistance = 1e-6;

/// Damped Newton from every seed (step halving up to 20 times). Roots are
/// polished until the residual stops decreasing; those with residual < newton_tol
/// are classified and deduplicated. Non-converging seeds are reported, not thrown.
FixedPointSearch find_fixed_points(const VectorField& field, const std::vector<Vector>& seeds,
                                   double newton_tol = 1e-10);

/// Regular k x k grid of seeds covering [lo, hi]^2, corners included.
std::vector<Vector> seed_grid(int k, double lo = 0.0, double hi = 1.0);

/// Attractor labels over the cell centres ((i + 1/2) / N, (j + 1/2) / N) of [0,1]^2.
/// Cells outside the open solid simplex, and trajectories that do not reach an
/// attractor, carry kNoLabel.
struct BasinMap {
  static constexpr int kNoLabel = -1;
  static constexpr int kOutside = -2;

  int resolution = 0;
  std::vector<Vector> attractors;
  /// Row-major: labels[i * resolution + j] is the cell with eta = (x_i, x_j).
  std::vector<int> labels;

  double coordinate(int i) const { return (i + 0.5) / resolution; }
  int label(int i, int j) const { return labels[static_cast<std::size_t>(i) * resolution + j]; }
};

struct BasinOptions {
  double dt = 0.05;
  double t_max = 2000.0;
  double stop_tol = 1e-10;
  /// A converged trajectory is attributed to an attractor within this distance.
  double capture_radius = 1e-4;
};

BasinMap basin_map(const VectorField& field, int grid_resolution,
                   const BasinOptions& options = {});

}  // namespace polgeom
