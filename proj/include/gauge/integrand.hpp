#pragma once

// Integrands on [0,1]: single-valued (t -> vector) or set-valued
// (t -> convex body), with a registry of named builtin families used by
// configs, fixtures and the verification suite.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gauge/convex.hpp"
#include "gauge/lattice.hpp"
#include "gauge/partition.hpp"

namespace gauge {

struct Integrand {
  enum class Kind { SINGLE, MULTI };

  Kind kind = Kind::MULTI;
  int dim = 1;
  std::function<LatticeVector(double)> single;
  std::function<ConvexBody(double)> multi;
  std::string name = "custom";
  std::string descriptor = "custom";

  LatticeVector eval_single(double t) const { return single(t); }
  ConvexBody eval_multi(double t) const { return multi(t); }
};

using SimpleSteps = std::vector<std::pair<MeasurableSet, ConvexBody>>;

// Builtin families. Bodies default to the box [-1,1]^d where one is needed.
Integrand make_linear_body(const ConvexBody& c);                    // t * C
Integrand make_interval_0t(int dim);                                // [0, t]^d
Integrand make_sym_interval(int dim);                               // [-t, t]^d
Integrand make_translate_box(int dim);                              // [t, t+1]^d
Integrand make_constant(const ConvexBody& c);
Integrand make_simple(const SimpleSteps& steps, int dim);
Integrand make_single_poly(const std::vector<double>& powers);      // t -> (t^p1, ..)
// Singleton-valued MULTI view of a single-valued integrand.
Integrand as_singleton_multi(const Integrand& f);

// The canonical MULTI fixture family in a given dimension (linear_body,
// interval_0t, sym_interval, translate_box, constant, simple).
std::vector<Integrand> builtin_multi_fixtures(int dim);

// F(t) = t * conv{(0,0),(1,0),(0,1)}; its componentwise sup is not a member.
Integrand make_triangle_fixture();

}  // namespace gauge
