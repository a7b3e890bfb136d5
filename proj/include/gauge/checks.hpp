#pragma once

// Executable verification suite: each principal structural statement about
// the integrals (selection existence, decompositions, additivity, the
// sup-selection identity, uniform integrability of the support family)
// becomes a parameterized check returning measured residuals and a
// PASS / FAIL / SKIPPED verdict. SKIPPED records an unmet hypothesis or a
// failed prerequisite integration, never a theorem violation.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gauge/integrator.hpp"

namespace gauge {

enum class Verdict { PASS, FAIL, SKIPPED };

std::string to_string(Verdict v);

struct TheoremReport {
  std::string theorem_id;
  std::string fixture;
  Verdict verdict = Verdict::PASS;
  std::string skip_reason;
  // named residuals with the tolerances they are judged against
  std::vector<std::pair<std::string, double>> residuals;
  std::vector<std::pair<std::string, double>> tolerances;
  // informative values not part of the verdict
  std::vector<std::pair<std::string, double>> info;

  double max_residual() const;
  void add(const std::string& name, double residual, double tolerance);
  void finalize();  // PASS iff every residual <= its tolerance
};

// Support-point selection: t -> argmax vertex of F(t) along `u`, ties
// broken toward the lexicographically greatest vertex.
struct SelectionFunction {
  Direction direction;
  std::function<LatticeVector(double)> eval;
};

SelectionFunction support_point_selection(const Integrand& f, const Direction& u);
Integrand selection_integrand(const Integrand& f, const Direction& u);

// Selection integrals land in U(J_F, 3 eps 1).
TheoremReport check_aumann_inclusion(const Integrand& f, const std::vector<Direction>& dirs,
                                     double eps, const IntegrateOptions& opts = {});

// F = f + G with G non-negative (embedded componentwise >= 0), 0 in G(t),
// and J_F = J_f + J_G within 3 eps.
TheoremReport check_nonneg_decomposition(const Integrand& f, double eps,
                                         const IntegrateOptions& opts = {}, int t_samples = 33);

// Under the hypothesis sup F(t) in F(t): F = g + G with sup G(t) = 0,
// supports >= 0 everywhere and = 0 on nonnegative directions, and
// J_G = J_F - J_g within U(., 2 b_n); hypothesis failure -> SKIPPED.
TheoremReport check_order_decomposition(const Integrand& f, const OSequence& seq, int n,
                                        const IntegrateOptions& opts = {}, int t_samples = 33);

// g(t) = sup F(t) integrates to sup J_F within 2 b_n.
TheoremReport check_sup_selection(const Integrand& f, const OSequence& seq, int n,
                                  const IntegrateOptions& opts = {});

// Dyadic-piece countable additivity probe with canonical-order partial
// Minkowski sums; permuting the first six terms is exact.
TheoremReport check_sigma_additivity(const Integrand& f, double eps, int n_pieces,
                                     const IntegrateOptions& opts = {});

// Direction-wise integrals over shrinking tails [0, 2^-k] decrease to 0.
TheoremReport check_uniform_integrability(const Integrand& f, int directions, int levels,
                                          double eps, const IntegrateOptions& opts = {});

}  // namespace gauge
