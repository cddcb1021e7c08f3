#ifndef GTD_ERRORS_HPP
#define GTD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gtd {

// Base class so callers can catch everything from this library at once.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A state point violates the validity region of a fundamental equation.
// `predicate` names the violated condition (e.g. "S > 0"), which the CLI
// reports verbatim on exit code 2.
struct DomainError : Error {
  std::string predicate;
  explicit DomainError(const std::string& pred)
      : Error("violated predicate: " + pred), predicate(pred) {}
};

struct DivisionByZeroJet : Error {
  DivisionByZeroJet() : Error("jet division by zero-valued jet") {}
};

struct IndexError : Error {
  explicit IndexError(const std::string& msg) : Error(msg) {}
};

struct NoRootError : Error {
  explicit NoRootError(const std::string& msg) : Error(msg) {}
};

struct DegenerateJacobianError : Error {
  explicit DegenerateJacobianError(const std::string& msg) : Error(msg) {}
};

struct ParamError : Error {
  explicit ParamError(const std::string& msg) : Error(msg) {}
};

struct WrongRepresentation : Error {
  explicit WrongRepresentation(const std::string& msg) : Error(msg) {}
};

struct DegenerateMetric : Error {
  DegenerateMetric() : Error("metric is degenerate (|det g| below guard)") {}
};

struct UnknownOracle : Error {
  explicit UnknownOracle(const std::string& name)
      : Error("no such oracle: " + name) {}
};

}  // namespace gtd

#endif
