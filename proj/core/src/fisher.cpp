#include "polgeom/fisher.hpp"

#include "polgeom/errors.hpp"

#include <cmath>
#include <limits>

namespace polgeom {

namespace {

void require_interior(const Eta& eta, const char* what) {
  if (!is_interior(eta)) {
    throw NotInterior(std::string(what) + ": eta is not inside the open solid simplex");
  }
}

}  // namespace

Matrix fisher_eta(const Eta& eta) {
  require_interior(eta, "fisher_eta");
  const Eigen::Index n = eta.n();
  const double rest = 1.0 - eta.values.sum();
  Matrix m = Matrix::Constant(n, n, 1.0 / rest);
  m.diagonal().array() += eta.values.array().inverse();
  return m;
}

Matrix fisher_inverse_eta(const Eta& eta) {
  Matrix m = -eta.values * eta.values.transpose();
  m.diagonal() += eta.values;
  return m;
}

double fisher_inverse_det(const Eta& eta) {
  return (1.0 - eta.values.sum()) * eta.values.prod();
}

bool on_facet_interior(const Eta& eta) {
  const Eigen::Index n = eta.n();
  if (n < 1 || !eta.values.allFinite()) return false;
  Eigen::Index zeros = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    const double v = eta[j];
    if (std::abs(v) <= kFacetTol) {
      ++zeros;
    } else if (v < 0.0 || v >= 1.0 - kFacetTol) {
      return false;
    }
  }
  const double rest = 1.0 - eta.values.sum();
  if (rest < -kFacetTol) return false;
  const bool on_sum_facet = std::abs(rest) <= kFacetTol;
  return (zeros == 1 && !on_sum_facet) || (zeros == 0 && on_sum_facet);
}

FacetRank facet_rank(const Eta& eta) {
  if (!on_facet_interior(eta)) {
    throw NotOnFacet("eta is not in the relative interior of a single facet");
  }
  const Matrix inv = fisher_inverse_eta(eta);
  Eigen::JacobiSVD<Matrix> svd(inv, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double threshold = static_cast<double>(eta.n()) *
                           std::numeric_limits<double>::epsilon() * sv.maxCoeff();
  FacetRank out;
  for (Eigen::Index k = 0; k < sv.size(); ++k) {
    if (sv[k] > threshold) ++out.rank;
  }
  out.basis = svd.matrixU().leftCols(out.rank);
  return out;
}

Matrix precision_matrix(const Eta& eta) {
  require_interior(eta, "precision_matrix");
  return fisher_eta(eta);
}

double precision_identity_residual(const Eta& eta) {
  const Matrix prod = fisher_inverse_eta(eta) * precision_matrix(eta);
  return (prod - Matrix::Identity(eta.n(), eta.n())).cwiseAbs().maxCoeff();
}

Matrix fisher_theta(const Theta& theta) { return fisher_inverse_eta(theta_to_eta(theta)); }

Matrix dI_dtheta(const Theta& theta, Eigen::Index i) {
  if (i < 0 || i >= theta.n()) {
    throw DimensionMismatch("dI_dtheta: coordinate index out of range");
  }
  const Vector eta = theta_to_eta(theta).values;
  Vector d = -eta;
  d[i] += 1.0;
  Matrix m = -d * eta.transpose() - eta * d.transpose();
  m.diagonal() += d;
  return eta[i] * m;
}

Matrix inverse_times_dI(const Theta& theta, Eigen::Index i) {
  return precision_matrix(theta_to_eta(theta)) * dI_dtheta(theta, i);
}

}  // namespace polgeom
