#ifndef LOGBM_ERRORS_HPP
#define LOGBM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logbm {

/// Base class for all geometry-level failures in this library.
class GeometryError : public std::runtime_error {
 public:
  explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The requested body has empty interior, is unbounded, or otherwise fails
/// to be a full-dimensional origin-symmetric convex body.
class DegenerateBody : public GeometryError {
 public:
  explicit DegenerateBody(const std::string& msg) : GeometryError(msg) {}
};

class DimensionMismatch : public GeometryError {
 public:
  explicit DimensionMismatch(const std::string& msg) : GeometryError(msg) {}
};

/// Two measures/bodies that must share a canonical support set do not.
/// The message names the offending directions.
class SupportMismatch : public GeometryError {
 public:
  explicit SupportMismatch(const std::string& msg) : GeometryError(msg) {}
};

/// A direction set fails to span the ambient space.
class NonSpanning : public GeometryError {
 public:
  explicit NonSpanning(const std::string& msg) : GeometryError(msg) {}
};

class TooManyGenerators : public GeometryError {
 public:
  explicit TooManyGenerators(const std::string& msg) : GeometryError(msg) {}
};

/// Polynomial extraction of a mixed surface area measure hit an unstable
/// normal fan or an ill-conditioned sample configuration.
class InterpolationIllConditioned : public GeometryError {
 public:
  explicit InterpolationIllConditioned(const std::string& msg) : GeometryError(msg) {}
};

/// The relations decomposition violated one of its own contract checks,
/// usually a sign that the orthogonality tolerance is misconfigured.
class InconsistentDecomposition : public GeometryError {
 public:
  explicit InconsistentDecomposition(const std::string& msg) : GeometryError(msg) {}
};

}  // namespace logbm

#endif  // LOGBM_ERRORS_HPP
