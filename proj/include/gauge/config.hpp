#pragma once

// JSON configuration parsing (body literals, gauges, integrand
// descriptors, experiment options), report serialization, and the default
// verification manifest.

#include <optional>
#include <string>

#include "json.hpp"

#include "gauge/checks.hpp"
#include "gauge/integrator.hpp"

namespace gauge::config {

using nlohmann::json;

// Body literals: {"vertices": [[...], ...]}, {"interval": [a, b]},
// {"box": {"lo": [...], "hi": [...]}}, {"ball_poly": n},
// {"singleton": [...]}, {"random_polygon": {"points": k}} (seeded).
ConvexBody parse_body(const json& j, int dim, unsigned long long seed = 0);

// {"kind": "constant"|"affine"|"piecewise", ...}
Gauge parse_gauge(const json& j);

// {"name": <builtin>, ...params}
Integrand parse_integrand(const json& j, int dim, unsigned long long seed = 0);

MeasurableSet parse_domain(const json& j);

struct StopSpec {
  StopKind kind = StopKind::NORM;
  double epsilon = 0.0;
  std::optional<OSequence> sequence;
  int index = 0;
};

StopSpec parse_stop(const json& j, int dim);

// Shared experiment fields: dimension, norm, grid_size, mode, path,
// domain, refinement_cap.
IntegrateOptions parse_options(const json& j, int dim);

json body_to_json(const ConvexBody& c);
json report_to_json(const IntegrationReport& rep);
json theorem_to_json(const TheoremReport& rep);

// Default verification manifest (all checks over the builtin fixtures).
json default_manifest();

// Run one manifest entry {"id", "fixture", "params"}; unknown ids raise
// ConfigError.
TheoremReport run_check(const json& entry, unsigned long long seed = 0);

std::string format_double(double x);
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace gauge::config
