#include "polgeom/expfam.hpp"

#include "polgeom/errors.hpp"

#include <algorithm>
#include <cmath>

namespace polgeom {

namespace {

constexpr double kClosedTol = 1e-12;

void require_n2(const Eigen::Index n, const char* what) {
  if (n != 2) throw UnsupportedDimension(std::string(what) + " is defined for n = 2 only");
}

// x^k with 0^0 = 1.
double power(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

bool in_polytope(int t1, int t2) { return t1 >= 0 && t2 >= 0 && t1 + t2 <= 3; }

const CountTable& cached_counts() {
  static const CountTable counts = count_table();
  return counts;
}

}  // namespace

std::size_t TripleSampleTable::polarized_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const TripleRow& r) { return r.polarized; }));
}

int CountTable::total() const {
  int s = 0;
  for (const auto& row : f) {
    for (int v : row) s += v;
  }
  return s;
}

TripleSampleTable build_triple_table() {
  TripleSampleTable table;
  table.rows.reserve(27);
  for (int z = 0; z < 3; ++z) {
    for (int y = 0; y < 3; ++y) {
      for (int x = 0; x < 3; ++x) {
        TripleRow r;
        r.x = x;
        r.y = y;
        r.z = z;
        r.x1 = x == 1;
        r.y1 = y == 1;
        r.z1 = z == 1;
        r.x2 = x == 2;
        r.y2 = y == 2;
        r.z2 = z == 2;
        r.t1 = r.x1 + r.y1 + r.z1;
        r.t2 = r.x2 + r.y2 + r.z2;
        const int equal_pairs = (x == y) + (x == z) + (y == z);
        r.polarized = equal_pairs == 1;
        table.rows.push_back(r);
      }
    }
  }
  return table;
}

CountTable count_table() {
  CountTable c;
  for (const auto& r : build_triple_table().rows) ++c.f.at(r.t1).at(r.t2);
  return c;
}

std::vector<std::pair<int, int>> polarization_support() {
  // Polarization is a function of (T1, T2): every cell is either all-polarized
  // or polarization-free.
  std::array<std::array<int, 4>, 4> polarized{};
  std::array<std::array<int, 4>, 4> total{};
  for (const auto& r : build_triple_table().rows) {
    ++total[r.t1][r.t2];
    if (r.polarized) ++polarized[r.t1][r.t2];
  }
  std::vector<std::pair<int, int>> cells;
  for (int t1 = 0; t1 < 4; ++t1) {
    for (int t2 = 0; t2 < 4; ++t2) {
      if (total[t1][t2] > 0 && polarized[t1][t2] == total[t1][t2]) cells.emplace_back(t1, t2);
    }
  }
  return cells;
}

bool polarization_indicator(int t1, int t2) {
  static const std::vector<std::pair<int, int>> support = polarization_support();
  return std::find(support.begin(), support.end(), std::make_pair(t1, t2)) != support.end();
}

double psi(const Theta& theta) {
  const double shift = std::max(0.0, theta.values.maxCoeff());
  return shift + std::log(std::exp(-shift) + (theta.values.array() - shift).exp().sum());
}

double psi_normalized(const Theta& theta) {
  return psi(theta) - std::log(static_cast<double>(theta.n() + 1));
}

SimplexPoint exponential_point_normalized(const Theta& theta) {
  const double base = 1.0 / static_cast<double>(theta.n() + 1);
  const double cumulant = psi_normalized(theta);
  Vector p(theta.n() + 1);
  p[0] = std::exp(-cumulant) * base;
  p.tail(theta.n()) = ((theta.values.array() - cumulant).exp() * base).matrix();
  return SimplexPoint(std::move(p));
}

double pol_expectation_theta(const Theta& theta) {
  require_n2(theta.n(), "pol_expectation_theta");
  const CountTable& counts = cached_counts();
  const double cumulant = 3.0 * psi(theta);
  double total = 0.0;
  for (int t1 = 0; t1 < 4; ++t1) {
    for (int t2 = 0; t1 + t2 <= 3; ++t2) {
      if (!polarization_indicator(t1, t2)) continue;
      total += std::exp(theta[0] * t1 + theta[1] * t2 - cumulant) * counts(t1, t2);
    }
  }
  return total;
}

double toric_probability(const Eta& eta, int t1, int t2) {
  require_n2(eta.n(), "toric_probability");
  if (!in_polytope(t1, t2)) {
    throw OutOfPolytope("(" + std::to_string(t1) + ", " + std::to_string(t2) +
                        ") is not a value of (T1, T2)");
  }
  const double rest = 1.0 - eta[0] - eta[1];
  if (!eta.values.allFinite() || eta[0] < -kClosedTol || eta[1] < -kClosedTol ||
      rest < -kClosedTol) {
    throw NotInterior("toric form needs eta on the closed solid simplex");
  }
  const auto clamp0 = [](double v) { return std::max(0.0, v); };
  return power(clamp0(eta[0]), t1) * power(clamp0(eta[1]), t2) *
         power(clamp0(rest), 3 - t1 - t2) * cached_counts()(t1, t2);
}

double border_pol_expectation(const Eta& eta) {
  double total = 0.0;
  for (int t1 = 0; t1 < 4; ++t1) {
    for (int t2 = 0; t1 + t2 <= 3; ++t2) {
      if (polarization_indicator(t1, t2)) total += toric_probability(eta, t1, t2);
    }
  }
  return total;
}

Vector expectation_params(const Theta& theta) { return 3.0 * theta_to_eta(theta).values; }

}  // namespace polgeom
