#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace polgeom {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Smallest coordinate value a point on the open simplex may carry.
inline constexpr double kInteriorTol = 1e-12;
/// Sum deviations up to this size are absorbed by renormalization.
inline constexpr double kRenormalizeTol = 1e-9;
/// Tolerance for E_base[U] = 0 on tangent vectors.
inline constexpr double kCenteringTol = 1e-10;

/// Strictly positive probability vector on the categories 0..n.
class SimplexPoint {
 public:
  /// Validates and (if needed) renormalizes `probs`.
  /// Throws NotInterior on non-finite, sub-tolerance or badly normalized input.
  explicit SimplexPoint(Vector probs);

  const Vector& probs() const noexcept { return probs_; }
  /// Category count minus one.
  Eigen::Index n() const noexcept { return probs_.size() - 1; }
  Eigen::Index size() const noexcept { return probs_.size(); }
  double operator[](Eigen::Index x) const { return probs_[x]; }

  /// E_p[u] for a random variable u on {0..n}.
  double expect(const Vector& u) const;

 private:
  Vector probs_;
};

/// Solid-simplex coordinates: category 0 is dropped, eta_j = pi_j.
/// Polynomial paths accept any real vector; chart maps check interiority.
struct Eta {
  Vector values;

  Eta() = default;
  explicit Eta(Vector v) : values(std::move(v)) {}
  Eta(std::initializer_list<double> v);
  Eigen::Index n() const noexcept { return values.size(); }
  double operator[](Eigen::Index j) const { return values[j]; }
};

/// Natural parameters of the exponential family with statistics X_j = (X = j).
struct Theta {
  Vector values;

  Theta() = default;
  explicit Theta(Vector v) : values(std::move(v)) {}
  Theta(std::initializer_list<double> v);
  Eigen::Index n() const noexcept { return values.size(); }
  double operator[](Eigen::Index j) const { return values[j]; }
};

/// Projective coordinates xi_j = pi_j / pi_0.
struct Xi {
  Vector values;

  Xi() = default;
  explicit Xi(Vector v) : values(std::move(v)) {}
  Xi(std::initializer_list<double> v);
  Eigen::Index n() const noexcept { return values.size(); }
  double operator[](Eigen::Index j) const { return values[j]; }
};

/// A base-centered random variable U on {0..n}: an element of B_p.
class TangentVector {
 public:
  /// Subtracts E_base[values] so the result is exactly centered.
  static TangentVector centered(const SimplexPoint& base, Vector values);
  /// Requires |E_base[values]| <= kCenteringTol; throws NotInterior otherwise.
  static TangentVector checked(const SimplexPoint& base, Vector values);

  const Vector& values() const noexcept { return values_; }
  const SimplexPoint& base() const noexcept { return base_; }
  double operator[](Eigen::Index x) const { return values_[x]; }

  /// Centering residual E_base[U].
  double mean() const { return base_.expect(values_); }

 private:
  TangentVector(SimplexPoint base, Vector values)
      : base_(std::move(base)), values_(std::move(values)) {}

  SimplexPoint base_;
  Vector values_;
};

/// <u, v>_p = E_p[u v].
double inner(const SimplexPoint& p, const Vector& u, const Vector& v);
double inner(const TangentVector& u, const TangentVector& v);
double norm(const TangentVector& u);

/// True iff every eta_j >= kInteriorTol and 1 - sum(eta) >= kInteriorTol.
bool is_interior(const Eta& eta);

SimplexPoint eta_to_point(const Eta& eta);
Eta point_to_eta(const SimplexPoint& p);

/// Always lands strictly inside the solid simplex for finite theta.
Eta theta_to_eta(const Theta& theta);
Theta eta_to_theta(const Eta& eta);
SimplexPoint theta_to_point(const Theta& theta);
Theta point_to_theta(const SimplexPoint& p);

Eta projective_to_eta(const Xi& xi);
Xi eta_to_projective(const Eta& eta);
SimplexPoint projective_to_point(const Xi& xi);
Xi point_to_projective(const SimplexPoint& p);

/// Forward-difference score (log p_to - log p_from) / dt, centered at p_from.
TangentVector score_of_path(const SimplexPoint& from, const SimplexPoint& to, double dt);
/// Central-difference score (log after - log before) / (2 dt), centered at `at`.
TangentVector score_of_path(const SimplexPoint& before, const SimplexPoint& at,
                            const SimplexPoint& after, double dt);

/// Score basis element D_j pi = ((X = j) - (X = 0)) / pi in the solid chart, j in 1..n.
TangentVector coordinate_score(const SimplexPoint& p, Eigen::Index j);

}  // namespace polgeom
