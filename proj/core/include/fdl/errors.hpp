#ifndef FDL_ERRORS_HPP
#define FDL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fdl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A sample grid is too coarse for the spectral window it must represent.
class AliasingError final : public Error {
public:
  explicit AliasingError(const std::string& msg) : Error(msg) {}
};

/// Coefficient moduli near the Nyquist edge have not decayed below tolerance.
class TailNotDecayed final : public Error {
public:
  explicit TailNotDecayed(const std::string& msg) : Error(msg) {}
};

/// Input data violates a stated hypothesis of a localization estimate.
class HypothesisViolated final : public Error {
public:
  explicit HypothesisViolated(const std::string& msg) : Error(msg) {}
};

/// A construction generation index is outside the supported range.
class GenerationTooLarge final : public Error {
public:
  explicit GenerationTooLarge(const std::string& msg) : Error(msg) {}
};

/// The query point does not belong to the interval family it must lie in.
class PointOutsideFamily final : public Error {
public:
  explicit PointOutsideFamily(const std::string& msg) : Error(msg) {}
};

/// A digit expansion exceeds the exactly representable integer range.
class DepthOverflow final : public Error {
public:
  explicit DepthOverflow(const std::string& msg) : Error(msg) {}
};

/// The point is exactly a dyadic rational within the scanned generations.
class ExactDyadic final : public Error {
public:
  explicit ExactDyadic(const std::string& msg) : Error(msg) {}
};

/// The principal complex logarithm is not well defined on the given data.
class LogBranchError final : public Error {
public:
  explicit LogBranchError(const std::string& msg) : Error(msg) {}
};

/// An operation that needs a nonempty point set received an empty one.
class EmptySet final : public Error {
public:
  explicit EmptySet(const std::string& msg) : Error(msg) {}
};

/// An argument lies outside the mathematical domain of the function.
class DomainError final : public Error {
public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

} // namespace fdl

#endif
