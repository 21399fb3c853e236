#include "polgeom/flow.hpp"

#include "polgeom/errors.hpp"
#include "polgeom/ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polgeom {

std::size_t step_count(double dt, double t_max) {
  if (!(t_max > 0.0)) return 0;
  // Ratios within 1e-9 of an integer round to it, so t_max = 50, dt = 1e-3 gives 50000 steps.
  const double ratio = t_max / dt;
  const double nearest = std::round(ratio);
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, ratio)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(ratio));
}

std::string_view to_string(TerminalReason r) {
  switch (r) {
    case TerminalReason::converged: return "converged";
    case TerminalReason::max_steps: return "max_steps";
    case TerminalReason::left_domain: return "left_domain";
  }
  return "unknown";
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::attractor: return "attractor";
    case Stability::repeller: return "repeller";
    case Stability::saddle: return "saddle";
    case Stability::degenerate: return "degenerate";
  }
  return "unknown";
}

namespace {

bool inside_guard_box(const Vector& v) {
  return v.allFinite() && v.minCoeff() >= kGuardLow && v.maxCoeff() <= kGuardHigh;
}

}  // namespace

TrajectoryRecord integrate(const VectorField& field, const Eta& start, double dt, double t_max,
                           double stop_tol) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidStep("integration step must be positive");
  if (!(stop_tol > 0.0)) throw InvalidStep("stopping tolerance must be positive");
  if (start.n() != field.dimension()) {
    throw DimensionMismatch("start point does not match the field dimension");
  }

  TrajectoryRecord rec;
  const std::size_t steps = step_count(dt, t_max);
  const auto rhs = [&field](const Vector& y) { return Vector(field(y)); };
  const auto record = [&](double t, const Vector& y, double field_norm) {
    rec.times.push_back(t);
    rec.states.push_back(y);
    rec.values.push_back(field.potential(y).value_or(std::numeric_limits<double>::quiet_NaN()));
    rec.field_norms.push_back(field_norm);
  };

  Vector y = start.values;
  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double field_norm = field(y).norm();
    record(t, y, field_norm);
    if (field_norm < stop_tol) {
      rec.terminal_reason = TerminalReason::converged;
      break;
    }
    if (k >= steps) {
      rec.terminal_reason = TerminalReason::max_steps;
      break;
    }
    y = rk4_step(rhs, y, dt);
    if (!inside_guard_box(y)) {
      record(static_cast<double>(k + 1) * dt, y,
             y.allFinite() ? field(y).norm() : std::numeric_limits<double>::infinity());
      rec.terminal_reason = TerminalReason::left_domain;
      break;
    }
  }
  return rec;
}

Stability classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues, double tol) {
  bool any_negative = false;
  bool any_positive = false;
  for (const auto& ev : eigenvalues) {
    if (std::abs(ev.real()) <= tol) return Stability::degenerate;
    (ev.real() < 0.0 ? any_negative : any_positive) = true;
  }
  if (any_negative && any_positive) return Stability::saddle;
  return any_negative ? Stability::attractor : Stability::repeller;
}

std::vector<std::complex<double>> eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigenvalues need a square matrix");
  std::vector<std::complex<double>> out;
  if (m.rows() == 2) {
    const double half_trace = 0.5 * (m(0, 0) + m(1, 1));
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const std::complex<double> disc = std::sqrt(std::complex<double>(half_trace * half_trace - det));
    out = {half_trace - disc, half_trace + disc};
  } else if (m.rows() > 0) {
    Eigen::EigenSolver<Matrix> solver(m, false);
    const auto& ev = solver.eigenvalues();
    out.assign(ev.data(), ev.data() + ev.size());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

namespace {

FixedPointReport make_report(const VectorField& field, const Vector& location, double residual,
                             double degeneracy_tol) {
  FixedPointReport r;
  r.location = location;
  r.residual = residual;
  r.jacobian = field.jacobian(location);
  r.eigenvalues = eigenvalues(r.jacobian);
  r.classification = classify_eigenvalues(r.eigenvalues, degeneracy_tol);
  return r;
}

struct NewtonResult {
  Vector location;
  double residual;
  std::string failure;
};

NewtonResult damped_newton(const VectorField& field, const Vector& seed) {
  constexpr int kMaxIterations = 200;
  constexpr int kMaxHalvings = 20;
  constexpr double kDivergence = 1e6;

  Vector x = seed;
  double r = field(x).norm();
  if (!std::isfinite(r)) return {x, r, "field is not finite at the seed"};
  for (int it = 0; it < kMaxIterations && r > 0.0; ++it) {
    const Vector fx = field(x);
    const Matrix j = field.jacobian(x);
    const Vector step = j.completeOrthogonalDecomposition().solve(-fx);
    if (!step.allFinite() || step.norm() == 0.0) break;

    double lambda = 1.0;
    bool accepted = false;
    Vector candidate;
    double candidate_r = r;
    for (int h = 0; h <= kMaxHalvings; ++h, lambda *= 0.5) {
      candidate = x + lambda * step;
      candidate_r = field(candidate).norm();
      if (std::isfinite(candidate_r) && candidate_r < r) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    x = candidate;
    r = candidate_r;
    if (x.cwiseAbs().maxCoeff() > kDivergence) return {x, r, "iterates diverged"};
  }
  return {x, r, {}};
}

}  // namespace

FixedPointReport classify(const VectorField& field, const Eta& location, double residual_tol,
                          double degeneracy_tol) {
  if (location.n() != field.dimension()) {
    throw DimensionMismatch("location does not match the field dimension");
  }
  const double residual = field(location.values).norm();
  if (!(residual < residual_tol)) {
    throw NotAFixedPoint("field norm " + std::to_string(residual) +
                         " at the requested location exceeds the tolerance");
  }
  return make_report(field, location.values, residual, degeneracy_tol);
}

FixedPointSearch find_fixed_points(const VectorField& field, const std::vector<Vector>& seeds,
                                   double newton_tol) {
  FixedPointSearch out;
  std::vector<NewtonResult> roots;
  for (const Vector& seed : seeds) {
    if (!seed.allFinite() || seed.size() != field.dimension()) {
      out.failures.push_back({seed, "invalid seed"});
      continue;
    }
    NewtonResult res = damped_newton(field, seed);
    if (!res.failure.empty()) {
      out.failures.push_back({seed, res.failure});
    } else if (!(res.residual < newton_tol)) {
      out.failures.push_back({seed, "no convergence (residual " + std::to_string(res.residual) + ")"});
    } else {
      roots.push_back(std::move(res));
    }
  }

  std::vector<NewtonResult> unique;
  for (auto& root : roots) {
    auto near = std::find_if(unique.begin(), unique.end(), [&root](const NewtonResult& u) {
      return (u.location - root.location).norm() < kRootMergeDistance;
    });
    if (near == unique.end()) {
      unique.push_back(std::move(root));
    } else if (root.residual < near->residual) {
      *near = std::move(root);
    }
  }
  const auto key = [](const Vector& v) {
    std::vector<long long> k(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      k[static_cast<std::size_t>(i)] = std::llround(v[i] / kRootMergeDistance);
    }
    return k;
  };
  std::sort(unique.begin(), unique.end(), [&key](const NewtonResult& x, const NewtonResult& y) {
    return key(x.location) < key(y.location);
  });
  for (const auto& u : unique) {
    out.points.push_back(make_report(field, u.location, u.residual, kDegeneracyTol));
  }
  return out;
}

std::vector<Vector> seed_grid(int k, double lo, double hi) {
  std::vector<Vector> seeds;
  if (k < 2) return seeds;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Vector s(2);
      s << lo + (hi - lo) * i / (k - 1), lo + (hi - lo) * j / (k - 1);
      seeds.push_back(s);
    }
  }
  return seeds;
}

BasinMap basin_map(const VectorField& field, int grid_resolution, const BasinOptions& options) {
  if (field.dimension() != 2) throw UnsupportedDimension("basin maps are drawn for n = 2");
  if (grid_resolution < 2) throw InvalidStep("basin grid resolution must be at least 2");

  BasinMap map;
  map.resolution = grid_resolution;
  for (const auto& fp : find_fixed_points(field, seed_grid(7)).points) {
    if (fp.classification == Stability::attractor) map.attractors.push_back(fp.location);
  }

  map.labels.assign(static_cast<std::size_t>(grid_resolution) * grid_resolution,
                    BasinMap::kOutside);
  for (int i = 0; i < grid_resolution; ++i) {
    for (int j = 0; j < grid_resolution; ++j) {
      const Eta start{map.coordinate(i), map.coordinate(j)};
      if (!is_interior(start)) continue;
      int label = BasinMap::kNoLabel;
      const auto traj = integrate(field, start, options.dt, options.t_max, options.stop_tol);
      if (traj.terminal_reason == TerminalReason::converged) {
        double best = options.capture_radius;
        for (std::size_t a = 0; a < map.attractors.size(); ++a) {
          const double dist = (traj.final_state() - map.attractors[a]).norm();
          if (dist < best) {
            best = dist;
            label = static_cast<int>(a);
          }
        }
      }
      map.labels[static_cast<std::size_t>(i) * grid_resolution + j] = label;
    }
  }
  return map;
}

}  // namespace polgeom
