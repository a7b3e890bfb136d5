#pragma once

// The gauge-integration engine. Riemann-Minkowski sums over tagged
// partitions, with two computation paths for set-valued integrands:
// GEOMETRIC (Minkowski accumulation of vertex polytopes) and EMBEDDED
// (componentwise accumulation of support vectors). Stopping is either
// norm-based (Hausdorff / sup / vector norm gap <= eps) or order-based
// (mutual inclusion in order neighborhoods U(., b_n)); in both cases the
// engine certifies a Cauchy gap over the generated partition family
// (uniform bisection plus tag perturbation), never integrability itself.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gauge/convex.hpp"
#include "gauge/integrand.hpp"
#include "gauge/lattice.hpp"
#include "gauge/partition.hpp"
#include "gauge/radstrom.hpp"

namespace gauge {

enum class Path { GEOMETRIC, EMBEDDED };

std::string to_string(Path p);
Path path_from_string(const std::string& s);

enum class StopKind { NORM, ORDER };
enum class IntegrationStatus { OK, NOT_INTEGRABLE_AT_TOLERANCE, NOT_INTEGRABLE_AT_ORDER_INDEX };

std::string to_string(IntegrationStatus s);

struct IntegrateOptions {
  TagMode mode = TagMode::PERRON;
  Path path = Path::GEOMETRIC;
  NormKind norm_kind = NormKind::SUP;
  MeasurableSet domain = MeasurableSet::full();
  GridPtr grid;  // embedded path; defaults to DirectionGrid::make(dim)
  int refinement_cap = 24;
  double contains_tol = 1e-12;
  double hausdorff_tol = 1e-10;
  std::size_t vertex_cap = 100000;
  // Swap the roles of the primary and the tag-perturbed partitions
  // (independent second run for uniqueness checks).
  bool swap_tag_roles = false;
};

struct IntegrationReport {
  IntegrationStatus status = IntegrationStatus::OK;
  Path path = Path::GEOMETRIC;
  TagMode mode = TagMode::PERRON;
  StopKind stop_kind = StopKind::NORM;
  double epsilon = 0.0;                  // NORM stop
  std::optional<OSequence> osequence;    // ORDER stop
  int order_index = 0;
  double stop_threshold = 0.0;           // the metric bound implied by the stop rule
  int refinements = 0;
  double final_gap = 0.0;
  int dimension = 0;
  std::string integrand_name, integrand_descriptor;

  std::optional<LatticeVector> point;      // SINGLE result
  std::optional<ConvexBody> body;          // MULTI result (reconstructed on the embedded path)
  std::optional<SupportVector> embedded;   // embedded-path support values

  // sums involved in the accepted stop test (for inclusion diagnostics)
  std::vector<ConvexBody> accepted_bodies;
  std::vector<SupportVector> accepted_embedded;
  std::vector<LatticeVector> accepted_points;

  bool ok() const { return status == IntegrationStatus::OK; }
};

using RiemannSum = std::variant<LatticeVector, ConvexBody, SupportVector>;

LatticeVector riemann_sum_single(const Integrand& f, const TaggedPartition& p);
ConvexBody riemann_sum_geometric(const Integrand& f, const TaggedPartition& p,
                                 std::size_t vertex_cap = 100000);
SupportVector riemann_sum_embedded(const Integrand& f, const TaggedPartition& p,
                                   const GridPtr& grid);
RiemannSum riemann_sum(const Integrand& f, const TaggedPartition& p,
                       Path path = Path::GEOMETRIC, const GridPtr& grid = nullptr);

IntegrationReport integrate_norm(const Integrand& f, double eps, const IntegrateOptions& opts = {});
IntegrationReport integrate_order(const Integrand& f, const OSequence& seq, int n_target,
                                  const IntegrateOptions& opts = {});

// Canonical-order Minkowski combination sum_i mu_i * C_i (terms sorted by
// (mu, vertices) before accumulation, so permuting the input is exact).
ConvexBody minkowski_combination(std::vector<std::pair<double, ConvexBody>> terms);

// Exact integral of a simple multifunction sum_i C_i 1_{E_i}.
ConvexBody integrate_simple(const SimpleSteps& steps);

struct MonotoneBracket {
  ConvexBody lower, upper;
  double bound = 0.0;  // 2K/n with K = ||abs_bound(F(1))||_sup
};

// Step-function bracketing of an inclusion-increasing multifunction on a
// uniform n-grid; lower/upper are the exact simple integrals of the inner
// and outer step functions.
MonotoneBracket integrate_monotone_bracket(const Integrand& f, int n,
                                           double monotone_tol = 1e-10);

struct PhiOuterOptions {
  GridPtr grid;
  NormKind ball_kind = NormKind::SUP;
  double base_delta = 0.25;
  int cousin_depth_cap = 60;
};

// Outer approximation of the norm integral set: componentwise minimum of
// embed(sum_Pi F + ball/n) over `trials` Cousin partitions with shrinking
// constant gauges, reconstructed to a body.
ConvexBody phi_outer(const Integrand& f, const MeasurableSet& e, int n, int trials,
                     const PhiOuterOptions& opts = {});

// Per-level stopping decisions of the order rule (b_n in the image M-space)
// and the sup-norm rule with eps = ||b_n||_sup, evaluated on the same
// embedded sums; runs until both rules have accepted or `max_levels`.
struct StoppingTrace {
  std::vector<bool> order_accepts, norm_accepts;
  std::vector<double> gaps;
};

StoppingTrace trace_stopping_decisions(const Integrand& f, const OSequence& seq, int n_target,
                                       const IntegrateOptions& opts, int max_levels = 24);

}  // namespace gauge
