#pragma once

#include "polgeom/simplex.hpp"

#include <functional>

namespace polgeom {

/// A vector field along a model path, given by its coordinates in the score
/// basis D_1 pi, ..., D_n pi at each path parameter t.
struct FramedField {
  std::function<Vector(double)> components;
  std::function<Eta(double)> path;
};

/// dF/dt + 1/2 I(eta(t))^{-1} (dI/dt) F(t). Both time derivatives are central
/// differences with step h. Throws InvalidStep unless h > 0.
Vector metric_derivative(const FramedField& f, double t, double h);

/// dI/dt along a path, central difference of fisher_eta with step h.
Matrix metric_rate(const std::function<Eta(double)>& path, double t, double h);

/// F^T I(eta(t)) G, the covariance of the two centered quantities. Uses the
/// path carried by f; g is expected to share it.
double covariance_along_path(const FramedField& f, const FramedField& g, double t);

// Geodesic shooting (inverse retraction through the initial velocity of a
// Riemannian geodesic) would build on metric_derivative; it is not provided.

}  // namespace polgeom
