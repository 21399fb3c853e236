#pragma once

#include "polgeom/simplex.hpp"

#include <string>

namespace polgeom {

/// POL(pi) = sum_x pi_x^2 (1 - pi_x). The raw-vector overload accepts border points.
double pol(const SimplexPoint& p);
double pol(const Vector& probs);

/// POL in solid-simplex coordinates:
/// (1 - S)^2 S + sum eta_j^2 (1 - eta_j), S = sum eta. Defined on all of R^n.
double pol_eta(const Eta& eta);

/// Euclidean gradient of pol_eta:
/// d_j = (1 - S)^2 - 2 (1 - S) S + 2 eta_j - 3 eta_j^2.
Vector grad_pol_eta(const Eta& eta);

/// Coefficients of the symmetric cubic on three categories
///   a sum pi^3 + b sum_{x != y} pi_x^2 pi_y + c pi_0 pi_1 pi_2
///   + d sum pi^2 + e sum_{x < y} pi_x pi_y.
struct CubicCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;

  /// The polarization measure itself: b = 1, everything else 0.
  static constexpr CubicCoeffs pol() { return {0.0, 1.0, 0.0, 0.0, 0.0}; }
};

inline constexpr double kCubicConditionTol = 1e-12;

struct CubicConditionReport {
  /// 6a - c + 6d - 3e; must vanish for the uniform point to be non-definite.
  double uniform_coefficient = 0.0;
  /// 3a - b + 2d - e; negative means repelling vertices and attracting midpoints.
  double midpoint_coefficient = 0.0;
  bool uniform_condition = false;
  bool midpoint_condition = false;

  bool admissible() const noexcept { return uniform_condition && midpoint_condition; }
};

CubicConditionReport cubic_conditions(const CubicCoeffs& k);

/// The cubic evaluated on a raw probability vector of length 3.
double cubic_index(const CubicCoeffs& k, const Vector& probs);

/// The cubic in (eta_1, eta_2). Throws UnsupportedDimension unless n = 2.
double cubic_index_eta(const CubicCoeffs& k, const Eta& eta);

/// Euclidean gradient of cubic_index_eta (n = 2).
Vector grad_cubic_eta(const CubicCoeffs& k, const Eta& eta);

/// Which index a caller wants; parsed from "pol" or "cubic:a,b,c,d,e".
struct IndexSpec {
  enum class Kind { pol, cubic };

  Kind kind = Kind::pol;
  CubicCoeffs coeffs = CubicCoeffs::pol();

  static IndexSpec polarization() { return {}; }
  static IndexSpec cubic(const CubicCoeffs& k) { return {Kind::cubic, k}; }
  /// Throws std::invalid_argument on malformed text.
  static IndexSpec parse(const std::string& text);

  std::string to_string() const;
};

/// Index value at a raw probability vector (border points allowed).
double index_value(const IndexSpec& spec, const Vector& probs);
/// Index value in solid coordinates (extended domain).
double index_value_eta(const IndexSpec& spec, const Eta& eta);
/// Euclidean gradient in solid coordinates.
Vector index_gradient_eta(const IndexSpec& spec, const Eta& eta);

}  // namespace polgeom
