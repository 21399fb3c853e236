#pragma once

#include "polgeom/indices.hpp"
#include "polgeom/simplex.hpp"

#include <functional>
#include <optional>
#include <string>

namespace polgeom {

/// A vector field on (an extension of) the solid simplex, in eta coordinates.
/// Immutable after construction and safe to share across threads.
class VectorField {
 public:
  using Evaluator = std::function<Vector(const Vector&)>;
  using JacobianFn = std::function<Matrix(const Vector&)>;
  using Potential = std::function<double(const Vector&)>;

  VectorField(std::string label, Eigen::Index dimension, Evaluator eval,
              JacobianFn jacobian = {}, Potential potential = {});

  Vector operator()(const Vector& eta) const { return eval_(eta); }
  Vector operator()(const Eta& eta) const { return eval_(eta.values); }

  const std::string& label() const noexcept { return label_; }
  Eigen::Index dimension() const noexcept { return dimension_; }

  bool has_jacobian() const noexcept { return static_cast<bool>(jacobian_); }
  /// Closed-form Jacobian; falls back to jacobian_fd when none was supplied.
  Matrix jacobian(const Vector& eta) const;

  /// Scalar function whose ascent the field describes, when there is one.
  bool has_potential() const noexcept { return static_cast<bool>(potential_); }
  std::optional<double> potential(const Vector& eta) const;

 private:
  std::string label_;
  Eigen::Index dimension_;
  Evaluator eval_;
  JacobianFn jacobian_;
  Potential potential_;
};

/// grad * (diag(eta) - eta eta^T). Defined for any real eta.
Vector natural_gradient(const Vector& grad, const Eta& eta);

/// The explicit degree-4 natural gradient of POL for n = 2.
Vector natgrad_pol_n2(const Eta& eta);

/// Closed-form Jacobian J_ij = d F_i / d eta_j of natgrad_pol_n2.
Matrix jacobian_natgrad_pol_n2(const Eta& eta);

/// Coefficient-parametrised natural gradient of the symmetric cubic (n = 2).
Vector cubic_natgrad_n2(const CubicCoeffs& k, const Eta& eta);

/// Default central-difference step: eps^(1/3) * max(1, |eta|_inf).
double default_fd_step(const Vector& eta);

/// Central-difference Jacobian of `field`.
Matrix jacobian_fd(const VectorField& field, const Vector& eta, double h);
Matrix jacobian_fd(const VectorField& field, const Vector& eta);

/// POL natural-gradient field. Uses the closed forms for n = 2.
VectorField pol_natural_field(Eigen::Index n = 2);
/// Uncorrected Euclidean gradient of POL.
VectorField pol_euclidean_field(Eigen::Index n = 2);
VectorField cubic_natural_field(const CubicCoeffs& k);
VectorField cubic_euclidean_field(const CubicCoeffs& k);

VectorField natural_field(const IndexSpec& spec, Eigen::Index n = 2);
VectorField euclidean_field(const IndexSpec& spec, Eigen::Index n = 2);

}  // namespace polgeom
