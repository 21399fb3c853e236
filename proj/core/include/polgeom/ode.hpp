#pragma once

#include <cstddef>

namespace polgeom {

/// One classical fourth-order Runge-Kutta step for the autonomous system y' = f(y).
/// `State` needs vector-space arithmetic with `Scalar`; works for Eigen vectors of
/// double or long double.
template <class State, class Rhs, class Scalar>
State rk4_step(const Rhs& f, const State& y, Scalar dt) {
  const Scalar half = dt / Scalar(2);
  const State k1 = f(y);
  const State k2 = f(State(y + half * k1));
  const State k3 = f(State(y + half * k2));
  const State k4 = f(State(y + dt * k3));
  return State(y + (dt / Scalar(6)) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4));
}

/// Number of fixed steps of size dt needed to reach t_max (at least one when t_max > 0).
std::size_t step_count(double dt, double t_max);

}  // namespace polgeom
