#pragma once

#include "polgeom/simplex.hpp"

namespace polgeom {

/// Coordinates closer than this to a facet hyperplane count as lying on it.
inline constexpr double kFacetTol = 1e-10;

/// Fisher information in solid-simplex coordinates:
/// I(eta)_jh = (j == h) / eta_j + 1 / (1 - sum eta). Throws NotInterior.
Matrix fisher_eta(const Eta& eta);

/// diag(eta) - eta eta^T. Polynomial, so any real eta is accepted.
Matrix fisher_inverse_eta(const Eta& eta);

/// (1 - sum eta) * prod eta, the determinant of fisher_inverse_eta.
double fisher_inverse_det(const Eta& eta);

struct FacetRank {
  Eigen::Index rank = 0;
  /// Orthonormal columns spanning the column space of I(eta)^{-1}.
  Matrix basis;
};

/// Numerical rank of I(eta)^{-1} on the relative interior of a facet.
/// The rank threshold is n * eps * sigma_max. Throws NotOnFacet.
FacetRank facet_rank(const Eta& eta);

/// True when eta lies in the relative interior of exactly one facet.
bool on_facet_interior(const Eta& eta);

/// diag(eta)^{-1} + (1 - |eta|)^{-1} 1 1^T. Throws NotInterior.
Matrix precision_matrix(const Eta& eta);

/// Max-norm of (diag(eta) - eta eta^T) * precision_matrix(eta) - Id.
double precision_identity_residual(const Eta& eta);

/// Fisher information in the exponential chart, diag(eta(theta)) - eta eta^T.
Matrix fisher_theta(const Theta& theta);

/// d/dtheta_i of fisher_theta:
/// eta_i (diag(e_i - eta) - (e_i - eta) eta^T - eta (e_i - eta)^T). `i` is 0-based.
Matrix dI_dtheta(const Theta& theta, Eigen::Index i);

/// I(theta)^{-1} * dI_dtheta(theta, i), formed numerically from the two factors.
Matrix inverse_times_dI(const Theta& theta, Eigen::Index i);

}  // namespace polgeom
