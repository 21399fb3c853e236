#include "polgeom/replicator.hpp"

#include "polgeom/errors.hpp"
#include "polgeom/ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polgeom {

void LVParams::validate() const {
  if (!(alpha1 > 0.0 && alpha2 > 0.0 && lambda1 > 0.0 && lambda2 > 0.0)) {
    throw NonPositiveState("Lotka-Volterra rates must be strictly positive");
  }
}

namespace {

void require_positive(const Vec2& z) {
  if (!(z[0] > 0.0 && z[1] > 0.0) || !z.allFinite()) {
    throw NonPositiveState("Lotka-Volterra state must be strictly positive");
  }
}

template <class Scalar>
using State2 = Eigen::Matrix<Scalar, 2, 1>;

template <class Scalar>
State2<Scalar> lv_rhs(const LVParams& p, const State2<Scalar>& z) {
  const Scalar a1 = p.alpha1, a2 = p.alpha2;
  return State2<Scalar>(a1 * z[0] * (Scalar(1) - z[1]), a2 * z[1] * (z[0] - Scalar(1)));
}

template <class Scalar>
Scalar lv_invariant(const LVParams& p, const State2<Scalar>& z) {
  using std::log;
  const Scalar a1 = p.alpha1, a2 = p.alpha2;
  return a2 * (log(z[0]) - z[0]) + a1 * (log(z[1]) - z[1]);
}

template <class Scalar>
double max_drift(const LVParams& params, const Vec2& z0, double dt, double t_max) {
  const std::size_t steps = step_count(dt, t_max);
  const Scalar h = static_cast<Scalar>(dt);
  State2<Scalar> z = z0.cast<Scalar>();
  const Scalar c0 = lv_invariant(params, z);
  const auto rhs = [&params](const State2<Scalar>& y) { return lv_rhs(params, y); };
  Scalar worst = 0;
  for (std::size_t k = 0; k < steps; ++k) {
    z = rk4_step(rhs, z, h);
    using std::abs;
    worst = std::max(worst, Scalar(abs(lv_invariant(params, z) - c0)));
  }
  return static_cast<double>(worst);
}

}  // namespace

Vec2 lv_field_population(const LVParams& params, const Vec2& n) {
  params.validate();
  require_positive(n);
  return Vec2(n[0] * (params.alpha1 - params.lambda1 * n[1]),
              n[1] * (-params.alpha2 + params.lambda2 * n[0]));
}

Vec2 lv_stationary_point(const LVParams& params) {
  params.validate();
  return Vec2(params.alpha2 / params.lambda2, params.alpha1 / params.lambda1);
}

Vec2 lv_rescale(const LVParams& params, const Vec2& populations) {
  return populations.cwiseQuotient(lv_stationary_point(params));
}

Vec2 lv_field(const LVParams& params, const Vec2& z) {
  params.validate();
  require_positive(z);
  return lv_rhs<double>(params, z);
}

double lv_conserved(const LVParams& params, const Vec2& z) {
  params.validate();
  require_positive(z);
  return lv_invariant<double>(params, z);
}

Matrix lv_conserved_hessian(const LVParams& params, const Vec2& z) {
  params.validate();
  require_positive(z);
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = -params.alpha2 / (z[0] * z[0]);
  h(1, 1) = -params.alpha1 / (z[1] * z[1]);
  return h;
}

SimplexPoint lv_uplift(const Vec2& z) {
  require_positive(z);
  const double total = 1.0 + z[0] + z[1];
  Vector p(3);
  p << 1.0 / total, z[0] / total, z[1] / total;
  return SimplexPoint(std::move(p));
}

Vec2 lv_downlift(const SimplexPoint& p) {
  if (p.n() != 2) throw UnsupportedDimension("the uplift lives on three categories");
  return Vec2(p[1] / p[0], p[2] / p[0]);
}

LVTrajectory integrate_lv(const LVParams& params, const Vec2& z0, double dt, double t_max) {
  if (!(dt > 0.0)) throw InvalidStep("integration step must be positive");
  params.validate();
  require_positive(z0);
  LVTrajectory out;
  const std::size_t steps = step_count(dt, t_max);
  const auto rhs = [&params](const Vec2& y) { return lv_rhs<double>(params, y); };
  Vec2 z = z0;
  for (std::size_t k = 0;; ++k) {
    out.times.push_back(static_cast<double>(k) * dt);
    out.states.push_back(z);
    out.conserved.push_back(lv_conserved(params, z));
    if (k >= steps) break;
    z = rk4_step(rhs, z, dt);
  }
  return out;
}

double lv_max_drift(const LVParams& params, const Vec2& z0, double dt, double t_max,
                    Precision precision) {
  if (!(dt > 0.0)) throw InvalidStep("integration step must be positive");
  params.validate();
  require_positive(z0);
  return precision == Precision::extended ? max_drift<long double>(params, z0, dt, t_max)
                                          : max_drift<double>(params, z0, dt, t_max);
}

Fitness lv_fitness(const LVParams& params) {
  params.validate();
  return {"lotka-volterra", [params](const Vector& p) {
            if (p.size() != 3) throw UnsupportedDimension("LV fitness needs three categories");
            if (!(p[0] > 0.0)) throw BoundaryState("LV fitness is undefined at pi_0 = 0");
            Vector f(3);
            f << 0.0, params.alpha1 * (1.0 - p[2] / p[0]), params.alpha2 * (p[1] / p[0] - 1.0);
            return f;
          }};
}

Vector replicator_field(const Fitness& fitness, const Vector& probs) {
  if (!probs.allFinite() || probs.minCoeff() < kInteriorTol) {
    throw BoundaryState("replicator state reached the border of the simplex");
  }
  const Vector f = fitness(probs);
  if (f.size() != probs.size()) throw DimensionMismatch("fitness has the wrong length");
  const double mean = probs.dot(f);
  return probs.cwiseProduct((f.array() - mean).matrix());
}

Vector replicator_field(const Fitness& fitness, const SimplexPoint& p) {
  return replicator_field(fitness, p.probs());
}

TangentVector replicator_score(const Fitness& fitness, const SimplexPoint& p) {
  return TangentVector::centered(p, fitness(p.probs()));
}

Vec2 replicator_matrix_form(const Fitness& fitness, const SimplexPoint& p) {
  if (p.n() != 2) throw UnsupportedDimension("matrix form is written for three categories");
  const Vector f = fitness(p.probs());
  const double p1 = p[1], p2 = p[2];
  Eigen::Matrix2d m;
  m << p1 * (1.0 - p1), -p1 * p2, -p1 * p2, p2 * (1.0 - p2);
  return m * Vec2(f[1] - f[0], f[2] - f[0]);
}

std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::solid: return "solid";
    case Chart::exponential: return "exp";
    case Chart::projective: return "proj";
  }
  return "unknown";
}

Chart parse_chart(std::string_view text) {
  if (text == "solid") return Chart::solid;
  if (text == "exp" || text == "exponential") return Chart::exponential;
  if (text == "proj" || text == "projective") return Chart::projective;
  throw std::invalid_argument("unknown chart '" + std::string(text) + "'");
}

Vector chart_coordinates(Chart chart, const SimplexPoint& p) {
  switch (chart) {
    case Chart::solid: return point_to_eta(p).values;
    case Chart::exponential: return point_to_theta(p).values;
    case Chart::projective: return point_to_projective(p).values;
  }
  throw std::invalid_argument("unknown chart");
}

Vector chart_probabilities(Chart chart, const Vector& state) {
  const Eigen::Index n = state.size();
  Vector p(n + 1);
  switch (chart) {
    case Chart::solid:
      p[0] = 1.0 - state.sum();
      p.tail(n) = state;
      return p;
    case Chart::exponential: {
      const double shift = std::max(0.0, state.maxCoeff());
      p[0] = std::exp(-shift);
      p.tail(n) = (state.array() - shift).exp().matrix();
      return p / p.sum();
    }
    case Chart::projective:
      p[0] = 1.0;
      p.tail(n) = state;
      return p / p.sum();
  }
  throw std::invalid_argument("unknown chart");
}

Vector chart_velocity(const Fitness& fitness, Chart chart, const Vector& state) {
  const Vector probs = chart_probabilities(chart, state);
  const Eigen::Index n = state.size();
  if (chart == Chart::solid) return replicator_field(fitness, probs).tail(n);
  if (!probs.allFinite() || probs.minCoeff() < kInteriorTol) {
    throw BoundaryState("replicator state reached the border of the simplex");
  }
  const Vector f = fitness(probs);
  const Vector relative = (f.tail(n).array() - f[0]).matrix();
  if (chart == Chart::exponential) return relative;
  return state.cwiseProduct(relative);
}

ReplicatorTrajectory integrate_replicator(const Fitness& fitness, Chart chart,
                                          const SimplexPoint& start, double dt, double t_max) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidStep("integration step must be positive");
  ReplicatorTrajectory out;
  out.chart = chart;
  const std::size_t steps = step_count(dt, t_max);
  const auto rhs = [&](const Vector& y) { return chart_velocity(fitness, chart, y); };
  Vector state = chart_coordinates(chart, start);
  for (std::size_t k = 0;; ++k) {
    const Vector probs = chart_probabilities(chart, state);
    if (!state.allFinite() || !probs.allFinite() || probs.minCoeff() < kInteriorTol) {
      out.terminal_reason = TerminalReason::left_domain;
      break;
    }
    out.times.push_back(static_cast<double>(k) * dt);
    out.states.push_back(state);
    out.points.push_back(probs);
    if (k >= steps) {
      out.terminal_reason = TerminalReason::max_steps;
      break;
    }
    try {
      state = rk4_step(rhs, state, dt);
    } catch (const BoundaryState&) {
      out.terminal_reason = TerminalReason::left_domain;
      break;
    }
  }
  return out;
}

namespace detail {

Matrix chart_jacobian(Chart chart, const Vector& state) {
  const Eigen::Index n = state.size();
  Matrix j(n + 1, n);
  switch (chart) {
    case Chart::solid:
      j.row(0).setConstant(-1.0);
      j.bottomRows(n).setIdentity();
      return j;
    case Chart::exponential: {
      // Rows 1..n form the Hessian of psi, diag(pi) - pi pi^T.
      const Vector p = chart_probabilities(chart, state);
      const Vector tail = p.tail(n);
      j.row(0) = -p[0] * tail.transpose();
      j.bottomRows(n) = -tail * tail.transpose();
      j.bottomRows(n).diagonal() += tail;
      return j;
    }
    case Chart::projective: {
      const Vector p = chart_probabilities(chart, state);
      const Vector tail = p.tail(n);
      j.row(0).setConstant(-p[0] * p[0]);
      j.bottomRows(n) = -p[0] * tail * Vector::Ones(n).transpose();
      j.bottomRows(n).diagonal().array() += p[0];
      return j;
    }
  }
  throw std::invalid_argument("unknown chart");
}

}  // namespace detail

}  // namespace polgeom
