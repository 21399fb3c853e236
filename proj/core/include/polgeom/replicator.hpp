#pragma once

#include "polgeom/flow.hpp"
#include "polgeom/simplex.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace polgeom {

using Vec2 = Eigen::Vector2d;

/// Predator-prey rates; all must be strictly positive.
struct LVParams {
  double alpha1 = 1.0;
  double alpha2 = 1.0;
  double lambda1 = 1.0;
  double lambda2 = 1.0;

  /// Throws NonPositiveState when a rate is not strictly positive.
  void validate() const;
};

/// N1' = N1 (alpha1 - lambda1 N2), N2' = N2 (-alpha2 + lambda2 N1).
Vec2 lv_field_population(const LVParams& params, const Vec2& populations);
/// (q1, q2) = (alpha2 / lambda2, alpha1 / lambda1).
Vec2 lv_stationary_point(const LVParams& params);
/// z_j = N_j / q_j.
Vec2 lv_rescale(const LVParams& params, const Vec2& populations);

/// Rescaled field z1' = alpha1 z1 (1 - z2), z2' = alpha2 z2 (z1 - 1).
/// Throws NonPositiveState unless z > 0.
Vec2 lv_field(const LVParams& params, const Vec2& z);

/// C(z) = alpha2 (log z1 - z1) + alpha1 (log z2 - z2), constant along lv_field.
double lv_conserved(const LVParams& params, const Vec2& z);
/// Hessian of C: -diag(alpha2 / z1^2, alpha1 / z2^2).
Matrix lv_conserved_hessian(const LVParams& params, const Vec2& z);

/// pi = (1, z1, z2) / (1 + z1 + z2), adding a constant population z0 = 1.
SimplexPoint lv_uplift(const Vec2& z);
/// z_j = pi_j / pi_0.
Vec2 lv_downlift(const SimplexPoint& p);

struct LVTrajectory {
  std::vector<double> times;
  std::vector<Vec2> states;
  std::vector<double> conserved;
};

/// RK4 in the rescaled variables with fixed step dt.
LVTrajectory integrate_lv(const LVParams& params, const Vec2& z0, double dt, double t_max);

enum class Precision { double_precision, extended };

/// max_t |C(z(t)) - C(z0)| along an RK4 trajectory, evaluated in the requested
/// floating-point precision.
double lv_max_drift(const LVParams& params, const Vec2& z0, double dt, double t_max,
                    Precision precision = Precision::double_precision);

/// Fitness per category, evaluated on a raw probability vector.
struct Fitness {
  std::string label;
  std::function<Vector(const Vector&)> evaluate;

  Vector operator()(const Vector& probs) const { return evaluate(probs); }
};

/// f0 = 0, f1 = alpha1 (1 - pi2 / pi0), f2 = alpha2 (pi1 / pi0 - 1).
/// Evaluation throws BoundaryState when pi0 <= 0.
Fitness lv_fitness(const LVParams& params);

/// Replicator velocity pi_i' = pi_i (f_i - pi . f). Components sum to zero.
Vector replicator_field(const Fitness& fitness, const SimplexPoint& p);
/// Same, on raw probabilities. Throws BoundaryState when a coordinate is below kInteriorTol.
Vector replicator_field(const Fitness& fitness, const Vector& probs);

/// f - E_p[f], the replicator field as a centered random variable (the score pi'/pi).
TangentVector replicator_score(const Fitness& fitness, const SimplexPoint& p);

/// [[pi1 (1 - pi1), -pi1 pi2], [-pi1 pi2, pi2 (1 - pi2)]] (f1 - f0, f2 - f0); n = 2.
Vec2 replicator_matrix_form(const Fitness& fitness, const SimplexPoint& p);

enum class Chart { solid, exponential, projective };
std::string_view to_string(Chart c);
/// Accepts solid, exp, exponential, proj, projective. Throws std::invalid_argument.
Chart parse_chart(std::string_view text);

/// Coordinates of p in a chart: (pi_1..pi_n), (log pi_j / pi_0) or (pi_j / pi_0).
Vector chart_coordinates(Chart chart, const SimplexPoint& p);
/// Probabilities of a chart state without validation (may leave the simplex).
Vector chart_probabilities(Chart chart, const Vector& state);

/// Velocity of the replicator dynamics expressed in a chart:
///   solid:       pi_j' = pi_j (f_j - pi . f)
///   exponential: theta_j' = f_j - f_0
///   projective:  xi_j' = xi_j (f_j - f_0)
Vector chart_velocity(const Fitness& fitness, Chart chart, const Vector& state);

struct ReplicatorTrajectory {
  Chart chart = Chart::solid;
  std::vector<double> times;
  std::vector<Vector> states;
  /// Image of each state in the simplex.
  std::vector<Vector> points;
  TerminalReason terminal_reason = TerminalReason::max_steps;
};

/// Fixed-step RK4 in the chosen chart. Stops with left_domain as soon as a
/// probability drops below kInteriorTol (no clamping).
ReplicatorTrajectory integrate_replicator(const Fitness& fitness, Chart chart,
                                          const SimplexPoint& start, double dt, double t_max);

namespace detail {

/// d pi / d state, a (n + 1) x n matrix, for each chart.
Matrix chart_jacobian(Chart chart, const Vector& state);

}  // namespace detail

}  // namespace polgeom
