#include "polgeom/natgrad.hpp"

#include "polgeom/errors.hpp"
#include "polgeom/fisher.hpp"

#include <cmath>
#include <limits>

namespace polgeom {

VectorField::VectorField(std::string label, Eigen::Index dimension, Evaluator eval,
                         JacobianFn jacobian, Potential potential)
    : label_(std::move(label)),
      dimension_(dimension),
      eval_(std::move(eval)),
      jacobian_(std::move(jacobian)),
      potential_(std::move(potential)) {}

Matrix VectorField::jacobian(const Vector& eta) const {
  return jacobian_ ? jacobian_(eta) : jacobian_fd(*this, eta);
}

std::optional<double> VectorField::potential(const Vector& eta) const {
  if (!potential_) return std::nullopt;
  return potential_(eta);
}

Vector natural_gradient(const Vector& grad, const Eta& eta) {
  if (grad.size() != eta.n()) {
    throw DimensionMismatch("gradient and eta have different lengths");
  }
  return (grad.transpose() * fisher_inverse_eta(eta)).transpose();
}

namespace {

void require_n2(const Eta& eta, const char* what) {
  if (eta.n() != 2) {
    throw UnsupportedDimension(std::string(what) + " is defined for n = 2 only");
  }
}

// Component 1 of the POL natural gradient; component 2 is the same polynomial
// with the arguments swapped.
double pol_component(double x, double y) {
  return -9.0 * x * x * x * y - 9.0 * x * x * y * y + 2.0 * x * x * x + 14.0 * x * x * y +
         5.0 * x * y * y - 3.0 * x * x - 5.0 * x * y + x;
}

// d/dx and d/dy of pol_component(x, y).
double pol_component_dx(double x, double y) {
  return -27.0 * x * x * y - 18.0 * x * y * y + 6.0 * x * x + 28.0 * x * y + 5.0 * y * y -
         6.0 * x - 5.0 * y + 1.0;
}

double pol_component_dy(double x, double y) {
  return -9.0 * x * x * x - 18.0 * x * x * y + 14.0 * x * x + 10.0 * x * y - 5.0 * x;
}

}  // namespace

Vector natgrad_pol_n2(const Eta& eta) {
  require_n2(eta, "natgrad_pol_n2");
  Vector f(2);
  f << pol_component(eta[0], eta[1]), pol_component(eta[1], eta[0]);
  return f;
}

Matrix jacobian_natgrad_pol_n2(const Eta& eta) {
  require_n2(eta, "jacobian_natgrad_pol_n2");
  const double x = eta[0], y = eta[1];
  Matrix j(2, 2);
  j << pol_component_dx(x, y), pol_component_dy(x, y),
       pol_component_dy(y, x), pol_component_dx(y, x);
  return j;
}

Vector cubic_natgrad_n2(const CubicCoeffs& k, const Eta& eta) {
  require_n2(eta, "cubic_natgrad_n2");
  const double quartic = 9.0 * k.a - 9.0 * k.b + 3.0 * k.c;
  const double cube = -6.0 * k.a + 2.0 * k.b - 4.0 * k.d + 2.0 * k.e;
  const double own_sq = -18.0 * k.a + 14.0 * k.b - 4.0 * k.c - 4.0 * k.d + 2.0 * k.e;
  const double other_sq = -9.0 * k.a + 5.0 * k.b - k.c - 4.0 * k.d + 2.0 * k.e;
  const double square = 9.0 * k.a - 3.0 * k.b + 6.0 * k.d - 3.0 * k.e;
  const double bilinear = 9.0 * k.a - 5.0 * k.b + k.c + 4.0 * k.d - 2.0 * k.e;
  const double linear = -3.0 * k.a + k.b - 2.0 * k.d + k.e;
  const auto component = [&](double x, double y) {
    return quartic * (x * x * x * y + x * x * y * y) + cube * x * x * x +
           own_sq * x * x * y + other_sq * x * y * y + square * x * x + bilinear * x * y +
           linear * x;
  };
  Vector f(2);
  f << component(eta[0], eta[1]), component(eta[1], eta[0]);
  return f;
}

double default_fd_step(const Vector& eta) {
  const double scale = eta.size() > 0 ? std::max(1.0, eta.cwiseAbs().maxCoeff()) : 1.0;
  return std::cbrt(std::numeric_limits<double>::epsilon()) * scale;
}

Matrix jacobian_fd(const VectorField& field, const Vector& eta, double h) {
  if (!(h > 0.0)) throw InvalidStep("finite-difference step must be positive");
  const Eigen::Index n = eta.size();
  Matrix j(field.dimension(), n);
  Vector probe = eta;
  for (Eigen::Index c = 0; c < n; ++c) {
    probe[c] = eta[c] + h;
    const Vector up = field(probe);
    probe[c] = eta[c] - h;
    const Vector down = field(probe);
    probe[c] = eta[c];
    j.col(c) = (up - down) / (2.0 * h);
  }
  return j;
}

Matrix jacobian_fd(const VectorField& field, const Vector& eta) {
  return jacobian_fd(field, eta, default_fd_step(eta));
}

VectorField pol_natural_field(Eigen::Index n) {
  const auto potential = [](const Vector& v) { return pol_eta(Eta(v)); };
  if (n == 2) {
    return VectorField(
        "pol-natural", 2, [](const Vector& v) { return natgrad_pol_n2(Eta(v)); },
        [](const Vector& v) { return jacobian_natgrad_pol_n2(Eta(v)); }, potential);
  }
  return VectorField(
      "pol-natural", n,
      [](const Vector& v) {
        const Eta eta(v);
        return natural_gradient(grad_pol_eta(eta), eta);
      },
      {}, potential);
}

VectorField pol_euclidean_field(Eigen::Index n) {
  return VectorField(
      "pol-euclidean", n, [](const Vector& v) { return grad_pol_eta(Eta(v)); }, {},
      [](const Vector& v) { return pol_eta(Eta(v)); });
}

VectorField cubic_natural_field(const CubicCoeffs& k) {
  return VectorField(
      "cubic-natural", 2, [k](const Vector& v) { return cubic_natgrad_n2(k, Eta(v)); }, {},
      [k](const Vector& v) { return cubic_index_eta(k, Eta(v)); });
}

VectorField cubic_euclidean_field(const CubicCoeffs& k) {
  return VectorField(
      "cubic-euclidean", 2, [k](const Vector& v) { return grad_cubic_eta(k, Eta(v)); }, {},
      [k](const Vector& v) { return cubic_index_eta(k, Eta(v)); });
}

VectorField natural_field(const IndexSpec& spec, Eigen::Index n) {
  if (spec.kind == IndexSpec::Kind::pol) return pol_natural_field(n);
  if (n != 2) throw UnsupportedDimension("the cubic index family is defined for n = 2 only");
  return cubic_natural_field(spec.coeffs);
}

VectorField euclidean_field(const IndexSpec& spec, Eigen::Index n) {
  if (spec.kind == IndexSpec::Kind::pol) return pol_euclidean_field(n);
  if (n != 2) throw UnsupportedDimension("the cubic index family is defined for n = 2 only");
  return cubic_euclidean_field(spec.coeffs);
}

}  // namespace polgeom
