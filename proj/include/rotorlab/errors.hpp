#pragma once

#include <stdexcept>
#include <string>

namespace rotorlab {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error("parse error: " + m) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error("validation error: " + m) {}
};

struct DisconnectedDiagram : std::runtime_error {
  DisconnectedDiagram() : std::runtime_error("diagram is not connected") {}
};

struct ArityMismatch : std::runtime_error {
  ArityMismatch() : std::runtime_error("tangle arities differ") {}
};

struct OrientationMismatch : std::runtime_error {
  OrientationMismatch() : std::runtime_error("boundary orientations are incompatible") {}
};

struct OrientationUnfixable : std::runtime_error {
  OrientationUnfixable() : std::runtime_error("no orientation of the flyped rotor matches the stator") {}
};

struct InfeasibleRequest : std::runtime_error {
  explicit InfeasibleRequest(const std::string& m) : std::runtime_error("infeasible request: " + m) {}
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("crossing budget exceeded") {}
};

struct RouteMismatch : std::runtime_error {
  explicit RouteMismatch(const std::string& m) : std::runtime_error("route mismatch: " + m) {}
};

struct RewriteFailure : std::runtime_error {
  RewriteFailure() : std::runtime_error("polynomial does not rewrite in z; upstream Seifert bug") {}
};

struct OmegaIsOne : std::runtime_error {
  OmegaIsOne() : std::runtime_error("omega = 1 is not a valid signature parameter") {}
};

}  // namespace rotorlab
