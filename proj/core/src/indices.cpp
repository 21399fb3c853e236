#include "polgeom/indices.hpp"

#include "polgeom/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace polgeom {

double pol(const Vector& probs) {
  return (probs.array().square() * (1.0 - probs.array())).sum();
}

double pol(const SimplexPoint& p) { return pol(p.probs()); }

double pol_eta(const Eta& eta) {
  const double s = eta.values.sum();
  const double rest = 1.0 - s;
  return rest * rest * s + (eta.values.array().square() * (1.0 - eta.values.array())).sum();
}

Vector grad_pol_eta(const Eta& eta) {
  const double s = eta.values.sum();
  const double rest = 1.0 - s;
  const double common = rest * rest - 2.0 * rest * s;
  const auto& v = eta.values.array();
  return (common + 2.0 * v - 3.0 * v.square()).matrix();
}

CubicConditionReport cubic_conditions(const CubicCoeffs& k) {
  CubicConditionReport r;
  r.uniform_coefficient = 6.0 * k.a - k.c + 6.0 * k.d - 3.0 * k.e;
  r.midpoint_coefficient = 3.0 * k.a - k.b + 2.0 * k.d - k.e;
  r.uniform_condition = std::abs(r.uniform_coefficient) <= kCubicConditionTol;
  r.midpoint_condition = r.midpoint_coefficient < -kCubicConditionTol;
  return r;
}

double cubic_index(const CubicCoeffs& k, const Vector& probs) {
  if (probs.size() != 3) {
    throw UnsupportedDimension("the cubic index family is defined for three categories");
  }
  const double p0 = probs[0], p1 = probs[1], p2 = probs[2];
  const double cubes = p0 * p0 * p0 + p1 * p1 * p1 + p2 * p2 * p2;
  const double mixed = p0 * p0 * p1 + p0 * p1 * p1 + p0 * p0 * p2 + p0 * p2 * p2 +
                       p1 * p1 * p2 + p1 * p2 * p2;
  const double triple = p0 * p1 * p2;
  const double squares = p0 * p0 + p1 * p1 + p2 * p2;
  const double pairs = p0 * p1 + p0 * p2 + p1 * p2;
  return k.a * cubes + k.b * mixed + k.c * triple + k.d * squares + k.e * pairs;
}

namespace {

// Coefficients of the cubic rewritten in (eta_1, eta_2):
//   cross (x^2 y + x y^2) + square (x^2 + y^2) + bilinear x y + linear (x + y) + constant.
struct EtaPolynomial {
  double cross, square, bilinear, linear, constant;
};

EtaPolynomial eta_polynomial(const CubicCoeffs& k) {
  return {
      -3.0 * k.a + 3.0 * k.b - k.c,
      3.0 * k.a - k.b + 2.0 * k.d - k.e,
      6.0 * k.a - 4.0 * k.b + k.c + 2.0 * k.d - k.e,
      -3.0 * k.a + k.b - 2.0 * k.d + k.e,
      k.a + k.d,
  };
}

void require_n2(const Eta& eta, const char* what) {
  if (eta.n() != 2) {
    throw UnsupportedDimension(std::string(what) + " is defined for n = 2 only");
  }
}

}  // namespace

double cubic_index_eta(const CubicCoeffs& k, const Eta& eta) {
  require_n2(eta, "cubic_index_eta");
  const auto q = eta_polynomial(k);
  const double x = eta[0], y = eta[1];
  return q.cross * (x * x * y + x * y * y) + q.square * (x * x + y * y) +
         q.bilinear * x * y + q.linear * (x + y) + q.constant;
}

Vector grad_cubic_eta(const CubicCoeffs& k, const Eta& eta) {
  require_n2(eta, "grad_cubic_eta");
  const auto q = eta_polynomial(k);
  const auto partial = [&q](double x, double y) {
    return q.cross * (2.0 * x * y + y * y) + 2.0 * q.square * x + q.bilinear * y + q.linear;
  };
  Vector g(2);
  g << partial(eta[0], eta[1]), partial(eta[1], eta[0]);
  return g;
}

IndexSpec IndexSpec::parse(const std::string& text) {
  if (text == "pol") return polarization();
  const std::string prefix = "cubic:";
  if (text.rfind(prefix, 0) != 0) {
    throw std::invalid_argument("unknown index '" + text + "' (expected pol or cubic:a,b,c,d,e)");
  }
  std::vector<double> values;
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cubic coefficient '" + item + "'");
    }
    if (used != item.size() || !std::isfinite(v)) {
      throw std::invalid_argument("bad cubic coefficient '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.size() != 5) {
    throw std::invalid_argument("cubic index needs exactly five coefficients a,b,c,d,e");
  }
  return cubic({values[0], values[1], values[2], values[3], values[4]});
}

std::string IndexSpec::to_string() const {
  if (kind == Kind::pol) return "pol";
  std::ostringstream os;
  os.precision(17);
  os << "cubic:" << coeffs.a << ',' << coeffs.b << ',' << coeffs.c << ',' << coeffs.d << ','
     << coeffs.e;
  return os.str();
}

double index_value(const IndexSpec& spec, const Vector& probs) {
  return spec.kind == IndexSpec::Kind::pol ? pol(probs) : cubic_index(spec.coeffs, probs);
}

double index_value_eta(const IndexSpec& spec, const Eta& eta) {
  return spec.kind == IndexSpec::Kind::pol ? pol_eta(eta) : cubic_index_eta(spec.coeffs, eta);
}

Vector index_gradient_eta(const IndexSpec& spec, const Eta& eta) {
  return spec.kind == IndexSpec::Kind::pol ? grad_pol_eta(eta)
                                           : grad_cubic_eta(spec.coeffs, eta);
}

}  // namespace polgeom
