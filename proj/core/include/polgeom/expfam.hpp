#pragma once

#include "polgeom/simplex.hpp"

#include <array>
#include <utility>
#include <vector>

namespace polgeom {

/// One outcome (x, y, z) of three i.i.d. draws on {0, 1, 2}, with the indicator
/// codings X_1 = (X = 1), X_2 = (X = 2) and the sufficient statistics T_j.
struct TripleRow {
  int x = 0, y = 0, z = 0;
  int x1 = 0, y1 = 0, z1 = 0;
  int x2 = 0, y2 = 0, z2 = 0;
  int t1 = 0, t2 = 0;
  /// Exactly two of x, y, z are equal.
  bool polarized = false;
};

struct TripleSampleTable {
  /// 27 rows; the first draw varies fastest.
  std::vector<TripleRow> rows;

  std::size_t polarized_count() const;
};

/// Joint counts f(t1, t2) of the sufficient statistics.
struct CountTable {
  std::array<std::array<int, 4>, 4> f{};

  int operator()(int t1, int t2) const { return f.at(t1).at(t2); }
  int total() const;
};

TripleSampleTable build_triple_table();

/// Aggregates build_triple_table() by (t1, t2).
CountTable count_table();

/// (t1, t2) cells that carry only polarized outcomes, derived from the triple table.
std::vector<std::pair<int, int>> polarization_support();

/// True when (t1, t2) is in polarization_support().
bool polarization_indicator(int t1, int t2);

/// log(1 + sum_j e^theta_j).
double psi(const Theta& theta);

/// psi(theta) - log(n + 1), the cumulant for the base measure 1 / (n + 1).
double psi_normalized(const Theta& theta);

/// pi(theta) = exp(sum theta_j X_j - psi_normalized(theta)) / (n + 1).
SimplexPoint exponential_point_normalized(const Theta& theta);

/// E_theta[I(T1, T2)] = sum I(t) exp(theta . t - 3 psi(theta)) f(t) (n = 2).
double pol_expectation_theta(const Theta& theta);

/// eta1^t1 eta2^t2 (1 - eta1 - eta2)^(3 - t1 - t2) f(t1, t2), with 0^0 = 1.
/// Valid on the closed solid simplex. Throws OutOfPolytope for invalid (t1, t2)
/// and NotInterior when eta is outside the closed simplex.
double toric_probability(const Eta& eta, int t1, int t2);

/// E[I(T1, T2)] under toric_probability, valid on the closed simplex.
double border_pol_expectation(const Eta& eta);

/// (E[T1], E[T2]) = 3 grad psi(theta).
Vector expectation_params(const Theta& theta);

}  // namespace polgeom
