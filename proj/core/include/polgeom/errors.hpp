#pragma once

#include <stdexcept>
#include <string>

namespace polgeom {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point, or coordinate vector, is outside the open simplex / chart domain.
class NotInterior : public Error {
 public:
  using Error::Error;
};

class NotOnFacet : public Error {
 public:
  using Error::Error;
};

/// The operation exists only for a fixed number of categories (e.g. n = 2).
class UnsupportedDimension : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidStep : public Error {
 public:
  using Error::Error;
};

class NotAFixedPoint : public Error {
 public:
  using Error::Error;
};

/// (t1, t2) is not a vertex count of the marginal polytope.
class OutOfPolytope : public Error {
 public:
  using Error::Error;
};

class NonPositiveState : public Error {
 public:
  using Error::Error;
};

/// A replicator state touched a face of the simplex.
class BoundaryState : public Error {
 public:
  using Error::Error;
};

}  // namespace polgeom
