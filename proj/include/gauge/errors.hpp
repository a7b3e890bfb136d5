#pragma once

#include <stdexcept>
#include <string>

namespace gauge {

// Numerical failure: an iterative projection did not reach its target
// accuracy within the iteration cap.
class ProjectionError : public std::runtime_error {
public:
  explicit ProjectionError(const std::string& what) : std::runtime_error(what) {}
};

// Support values do not describe a nonempty body (empty halfspace intersection).
class InconsistentSupport : public std::runtime_error {
public:
  explicit InconsistentSupport(const std::string& what) : std::runtime_error(what) {}
};

// Cousin construction exceeded its recursion depth cap.
class CousinDepthError : public std::runtime_error {
public:
  explicit CousinDepthError(const std::string& what) : std::runtime_error(what) {}
};

// Geometric accumulation exceeded the vertex cap.
class VertexOverflow : public std::runtime_error {
public:
  explicit VertexOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or invalid configuration input (CLI exits 2 on this).
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gauge
