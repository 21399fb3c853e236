#include "polgeom/simplex.hpp"

#include "polgeom/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace polgeom {

namespace {

Vector from_list(std::initializer_list<double> v) {
  Vector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace

SimplexPoint::SimplexPoint(Vector probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw NotInterior("simplex point needs at least two categories");
  }
  if (!probs_.allFinite()) {
    throw NotInterior("simplex point has non-finite entries");
  }
  const double total = probs_.sum();
  if (std::abs(total - 1.0) > kRenormalizeTol) {
    throw NotInterior("probabilities sum to " + std::to_string(total) + ", not 1");
  }
  probs_ /= total;
  for (Eigen::Index x = 0; x < probs_.size(); ++x) {
    if (probs_[x] < kInteriorTol) {
      throw NotInterior("category " + std::to_string(x) + " has probability " +
                        std::to_string(probs_[x]) + " (open simplex requires > 0)");
    }
  }
}

double SimplexPoint::expect(const Vector& u) const {
  if (u.size() != probs_.size()) {
    throw DimensionMismatch("random variable and distribution have different sizes");
  }
  return probs_.dot(u);
}

Eta::Eta(std::initializer_list<double> v) : values(from_list(v)) {}
Theta::Theta(std::initializer_list<double> v) : values(from_list(v)) {}
Xi::Xi(std::initializer_list<double> v) : values(from_list(v)) {}

TangentVector TangentVector::centered(const SimplexPoint& base, Vector values) {
  const double m = base.expect(values);
  values.array() -= m;
  return TangentVector(base, std::move(values));
}

TangentVector TangentVector::checked(const SimplexPoint& base, Vector values) {
  const double m = base.expect(values);
  if (std::abs(m) > kCenteringTol) {
    throw NotInterior("random variable is not centered at the base point (mean " +
                      std::to_string(m) + ")");
  }
  return TangentVector(base, std::move(values));
}

double inner(const SimplexPoint& p, const Vector& u, const Vector& v) {
  if (u.size() != p.size() || v.size() != p.size()) {
    throw DimensionMismatch("inner product operands do not match the base point");
  }
  return (p.probs().array() * u.array() * v.array()).sum();
}

double inner(const TangentVector& u, const TangentVector& v) {
  if (u.base().probs() != v.base().probs()) {
    throw DimensionMismatch("tangent vectors live at different base points");
  }
  return inner(u.base(), u.values(), v.values());
}

double norm(const TangentVector& u) { return std::sqrt(inner(u, u)); }

bool is_interior(const Eta& eta) {
  if (eta.n() < 1 || !eta.values.allFinite()) return false;
  if (eta.values.minCoeff() < kInteriorTol) return false;
  return 1.0 - eta.values.sum() >= kInteriorTol;
}

SimplexPoint eta_to_point(const Eta& eta) {
  if (!is_interior(eta)) {
    throw NotInterior("eta is not inside the open solid simplex");
  }
  Vector p(eta.n() + 1);
  p[0] = 1.0 - eta.values.sum();
  p.tail(eta.n()) = eta.values;
  return SimplexPoint(std::move(p));
}

Eta point_to_eta(const SimplexPoint& p) { return Eta(p.probs().tail(p.n())); }

Eta theta_to_eta(const Theta& theta) {
  // Shifted softmax over (0, theta_1, ..., theta_n).
  const double shift = std::max(0.0, theta.values.maxCoeff());
  const Vector w = (theta.values.array() - shift).exp();
  const double z = std::exp(-shift) + w.sum();
  return Eta(w / z);
}

Theta eta_to_theta(const Eta& eta) {
  if (!is_interior(eta)) {
    throw NotInterior("eta is not inside the open solid simplex");
  }
  const double rest = 1.0 - eta.values.sum();
  return Theta((eta.values.array() / rest).log().matrix());
}

SimplexPoint theta_to_point(const Theta& theta) {
  const double shift = std::max(0.0, theta.values.maxCoeff());
  Vector w(theta.n() + 1);
  w[0] = std::exp(-shift);
  w.tail(theta.n()) = (theta.values.array() - shift).exp().matrix();
  return SimplexPoint(w / w.sum());
}

Theta point_to_theta(const SimplexPoint& p) {
  return Theta((p.probs().tail(p.n()).array() / p[0]).log().matrix());
}

Eta projective_to_eta(const Xi& xi) {
  if (xi.n() < 1 || !xi.values.allFinite() || xi.values.minCoeff() <= 0.0) {
    throw NotInterior("projective coordinates must be strictly positive");
  }
  return Eta(xi.values / (1.0 + xi.values.sum()));
}

Xi eta_to_projective(const Eta& eta) {
  if (!is_interior(eta)) {
    throw NotInterior("eta is not inside the open solid simplex");
  }
  return Xi(eta.values / (1.0 - eta.values.sum()));
}

SimplexPoint projective_to_point(const Xi& xi) {
  if (xi.n() < 1 || !xi.values.allFinite() || xi.values.minCoeff() <= 0.0) {
    throw NotInterior("projective coordinates must be strictly positive");
  }
  Vector p(xi.n() + 1);
  p[0] = 1.0;
  p.tail(xi.n()) = xi.values;
  return SimplexPoint(p / p.sum());
}

Xi point_to_projective(const SimplexPoint& p) {
  return Xi(p.probs().tail(p.n()) / p[0]);
}

TangentVector score_of_path(const SimplexPoint& from, const SimplexPoint& to, double dt) {
  if (from.size() != to.size()) {
    throw DimensionMismatch("path samples have different category counts");
  }
  if (!(dt > 0.0)) throw InvalidStep("score step must be positive");
  Vector s = (to.probs().array().log() - from.probs().array().log()).matrix() / dt;
  return TangentVector::centered(from, std::move(s));
}

TangentVector score_of_path(const SimplexPoint& before, const SimplexPoint& at,
                            const SimplexPoint& after, double dt) {
  if (before.size() != at.size() || after.size() != at.size()) {
    throw DimensionMismatch("path samples have different category counts");
  }
  if (!(dt > 0.0)) throw InvalidStep("score step must be positive");
  Vector s =
      (after.probs().array().log() - before.probs().array().log()).matrix() / (2.0 * dt);
  return TangentVector::centered(at, std::move(s));
}

TangentVector coordinate_score(const SimplexPoint& p, Eigen::Index j) {
  if (j < 1 || j > p.n()) {
    throw DimensionMismatch("score basis index must be in 1..n");
  }
  Vector u = Vector::Zero(p.size());
  u[j] = 1.0 / p[j];
  u[0] = -1.0 / p[0];
  return TangentVector::checked(p, std::move(u));
}

}  // namespace polgeom
