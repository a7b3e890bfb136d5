#include "gauge/checks.hpp"

#include <algorithm>
#include <cmath>

#include "gauge/radstrom.hpp"

namespace gauge {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::SKIPPED: return "SKIPPED";
  }
  return "FAIL";
}

double TheoremReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, r] : residuals) m = std::max(m, r);
  return m;
}

void TheoremReport::add(const std::string& name, double residual, double tolerance) {
  residuals.emplace_back(name, residual);
  tolerances.emplace_back(name, tolerance);
}

void TheoremReport::finalize() {
  if (verdict == Verdict::SKIPPED) return;
  verdict = Verdict::PASS;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    if (residuals[i].second > tolerances[i].second) verdict = Verdict::FAIL;
  }
}

namespace {

TheoremReport skipped(const std::string& id, const Integrand& f, const std::string& reason) {
  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.verdict = Verdict::SKIPPED;
  r.skip_reason = reason;
  return r;
}

GridPtr grid_for(const Integrand& f, const IntegrateOptions& opts) {
  return opts.grid ? opts.grid : DirectionGrid::make(f.dim);
}

std::vector<double> sample_points(int count) {
  if (count < 2) return {0.5};
  std::vector<double> t(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) t[static_cast<std::size_t>(i)] = double(i) / (count - 1);
  return t;
}

}  // namespace

SelectionFunction support_point_selection(const Integrand& f, const Direction& u) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("selections require a set-valued integrand");
  auto multi = f.multi;
  const LatticeVector uv = u.vec();
  SelectionFunction s{u, [multi, uv](double t) {
                        const ConvexBody body = multi(t);
                        return body.vertex_vec(support_argmax(body, uv.coords().data()));
                      }};
  return s;
}

Integrand selection_integrand(const Integrand& f, const Direction& u) {
  SelectionFunction s = support_point_selection(f, u);
  Integrand g;
  g.kind = Integrand::Kind::SINGLE;
  g.dim = f.dim;
  g.single = s.eval;
  g.name = f.name + "_selection";
  g.descriptor = "selection(" + f.descriptor + ")";
  return g;
}

TheoremReport check_aumann_inclusion(const Integrand& f, const std::vector<Direction>& dirs,
                                     double eps, const IntegrateOptions& opts) {
  const std::string id = "aumann_inclusion";
  IntegrationReport jf = integrate_norm(f, eps, opts);
  if (!jf.ok()) return skipped(id, f, "integral did not reach tolerance: " + to_string(jf.status));

  const ConvexBody hood = order_neighborhood(
      *jf.body, LatticeVector::constant(static_cast<std::size_t>(f.dim), 3.0 * eps));
  double defect = 0.0;
  for (const Direction& u : dirs) {
    IntegrationReport sel = integrate_norm(selection_integrand(f, u), eps, opts);
    if (!sel.ok()) return skipped(id, f, "selection integral did not reach tolerance");
    defect = std::max(defect, distance_to_body(*sel.point, hood));
  }
  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("inclusion_defect", defect, 1e-9);
  r.info.emplace_back("directions", static_cast<double>(dirs.size()));
  r.info.emplace_back("epsilon", eps);
  r.finalize();
  return r;
}

TheoremReport check_nonneg_decomposition(const Integrand& f, double eps,
                                         const IntegrateOptions& opts, int t_samples) {
  const std::string id = "nonneg_decomposition";
  const GridPtr grid = grid_for(f, opts);
  const Direction u0 = grid->direction_vec(0);
  const Integrand fsel = selection_integrand(f, u0);
  auto sel = fsel.single;
  auto multi = f.multi;

  Integrand g;
  g.kind = Integrand::Kind::MULTI;
  g.dim = f.dim;
  g.multi = [multi, sel](double t) { return translate(multi(t), -sel(t)); };
  g.name = f.name + "_translated";
  g.descriptor = "translated(" + f.descriptor + ")";

  double neg_defect = 0.0, origin_defect = 0.0;
  const LatticeVector origin = LatticeVector::zero(static_cast<std::size_t>(f.dim));
  for (double t : sample_points(t_samples)) {
    const ConvexBody gt = g.multi(t);
    const SupportVector sv = embed(gt, grid);
    for (double v : sv.values) neg_defect = std::max(neg_defect, -v);
    origin_defect = std::max(origin_defect, distance_to_body(origin, gt));
  }

  IntegrationReport jf = integrate_norm(f, eps, opts);
  IntegrationReport jsel = integrate_norm(fsel, eps, opts);
  IntegrationReport jg = integrate_norm(g, eps, opts);
  if (!jf.ok() || !jsel.ok() || !jg.ok())
    return skipped(id, f, "a decomposition integral did not reach tolerance");

  const double sum_defect =
      hausdorff(*jf.body, translate(*jg.body, *jsel.point), opts.hausdorff_tol);

  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("negative_support_defect", neg_defect, 1e-10);
  r.add("origin_membership_defect", origin_defect, 1e-9);
  r.add("sum_defect", sum_defect, 3.0 * eps);
  r.info.emplace_back("epsilon", eps);
  r.finalize();
  return r;
}

TheoremReport check_order_decomposition(const Integrand& f, const OSequence& seq, int n,
                                        const IntegrateOptions& opts, int t_samples) {
  const std::string id = "order_decomposition";
  const GridPtr grid = grid_for(f, opts);
  auto multi = f.multi;

  // hypothesis gate: sup F(t) must be a member of F(t)
  for (double t : sample_points(t_samples)) {
    const ConvexBody ft = multi(t);
    if (distance_to_body(order_sup(ft), ft) > 1e-10)
      return skipped(id, f, "hypothesis not met: sup F(t) is not a member of F(t)");
  }

  Integrand g;
  g.kind = Integrand::Kind::SINGLE;
  g.dim = f.dim;
  g.single = [multi](double t) { return order_sup(multi(t)); };
  g.name = f.name + "_sup";
  g.descriptor = "order_sup(" + f.descriptor + ")";

  Integrand gg;
  gg.kind = Integrand::Kind::MULTI;
  gg.dim = f.dim;
  gg.multi = [multi](double t) {
    const ConvexBody ft = multi(t);
    return translate(ft, -order_sup(ft));
  };
  gg.name = f.name + "_below_sup";
  gg.descriptor = "below_sup(" + f.descriptor + ")";

  double neg_defect = 0.0, pos_dir_defect = 0.0;
  for (double t : sample_points(t_samples)) {
    const ConvexBody gt = gg.multi(t);
    for (std::size_t j = 0; j < grid->size(); ++j) {
      const double s = support(gt, grid->direction(j));
      neg_defect = std::max(neg_defect, -s);
      if (grid->is_nonnegative(j)) pos_dir_defect = std::max(pos_dir_defect, s);
    }
  }

  IntegrationReport jf = integrate_order(f, seq, n, opts);
  IntegrationReport jg = integrate_order(g, seq, n, opts);
  IntegrationReport jgg = integrate_order(gg, seq, n, opts);
  if (!jf.ok() || !jg.ok() || !jgg.ok())
    return skipped(id, f, "an order integral did not reach its index");

  const ConvexBody target = translate(*jf.body, -*jg.point);
  const double deco_defect = hausdorff(*jgg.body, target, opts.hausdorff_tol);

  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("negative_support_defect", neg_defect, 1e-10);
  r.add("nonneg_direction_defect", pos_dir_defect, 1e-10);
  r.add("decomposition_defect", deco_defect, 2.0 * norm(seq.at(n), NormKind::L2) + 1e-9);
  r.info.emplace_back("order_index", n);
  r.finalize();
  return r;
}

TheoremReport check_sup_selection(const Integrand& f, const OSequence& seq, int n,
                                  const IntegrateOptions& opts) {
  const std::string id = "sup_selection";
  auto multi = f.multi;
  Integrand g;
  g.kind = Integrand::Kind::SINGLE;
  g.dim = f.dim;
  g.single = [multi](double t) { return order_sup(multi(t)); };
  g.name = f.name + "_sup";
  g.descriptor = "order_sup(" + f.descriptor + ")";

  IntegrationReport jf = integrate_order(f, seq, n, opts);
  IntegrationReport jg = integrate_order(g, seq, n, opts);
  if (!jf.ok() || !jg.ok()) return skipped(id, f, "an order integral did not reach its index");

  const LatticeVector diff = *jg.point - order_sup(*jf.body);
  const LatticeVector bound = 2.0 * seq.at(n);
  double defect = 0.0;
  for (std::size_t j = 0; j < diff.dim(); ++j)
    defect = std::max(defect, std::fabs(diff[j]) - bound[j]);

  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("componentwise_defect", std::max(0.0, defect), 0.0);
  r.info.emplace_back("sup_gap", norm(diff, NormKind::SUP));
  r.info.emplace_back("order_index", n);
  r.finalize();
  return r;
}

TheoremReport check_sigma_additivity(const Integrand& f, double eps, int n_pieces,
                                     const IntegrateOptions& opts) {
  const std::string id = "sigma_additivity";
  std::vector<std::pair<double, ConvexBody>> terms;
  for (int k = 0; k < n_pieces; ++k) {
    IntegrateOptions sub = opts;
    sub.domain = MeasurableSet({{std::pow(0.5, k + 1), std::pow(0.5, k)}});
    IntegrationReport jk = integrate_norm(f, eps, sub);
    if (!jk.ok()) return skipped(id, f, "a piece integral did not reach tolerance");
    terms.emplace_back(1.0, *jk.body);
  }
  IntegrateOptions tail = opts;
  tail.domain = MeasurableSet({{std::pow(0.5, n_pieces), 1.0}});
  IntegrationReport jtail = integrate_norm(f, eps, tail);
  if (!jtail.ok()) return skipped(id, f, "the union integral did not reach tolerance");

  const ConvexBody partial = minkowski_combination(terms);
  const double sum_defect = hausdorff(partial, *jtail.body, opts.hausdorff_tol);

  // permuting the first terms must be exact under canonical accumulation
  std::vector<std::pair<double, ConvexBody>> permuted = terms;
  std::reverse(permuted.begin(),
               permuted.begin() + std::min<std::ptrdiff_t>(6, static_cast<std::ptrdiff_t>(permuted.size())));
  const ConvexBody partial2 = minkowski_combination(permuted);
  const double perm_defect = partial == partial2 ? 0.0 : 1.0;

  const double k_bound = norm(abs_bound(f.multi(1.0)), NormKind::SUP);

  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("sum_defect", sum_defect, (n_pieces + 2) * eps);
  r.add("permutation_defect", perm_defect, 0.0);
  r.info.emplace_back("pieces", n_pieces);
  r.info.emplace_back("truncation_tail_bound", std::pow(0.5, n_pieces) * k_bound);
  r.finalize();
  return r;
}

TheoremReport check_uniform_integrability(const Integrand& f, int directions, int levels,
                                          double eps, const IntegrateOptions& opts) {
  const std::string id = "uniform_integrability";
  const GridPtr grid = grid_for(f, opts);
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(directions), grid->size());
  auto multi = f.multi;

  double k_bound = 0.0;
  for (double t : sample_points(33)) {
    const ConvexBody ft = multi(t);
    for (std::size_t j = 0; j < m; ++j)
      k_bound = std::max(k_bound, std::fabs(support(ft, grid->direction(j))));
  }

  std::vector<double> probe(static_cast<std::size_t>(levels) + 1, 0.0);
  for (int k = 0; k <= levels; ++k) {
    IntegrateOptions sub = opts;
    sub.domain = MeasurableSet({{0.0, std::pow(0.5, k)}});
    double worst = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const LatticeVector u = grid->direction_vec(j).vec();
      Integrand s;
      s.kind = Integrand::Kind::SINGLE;
      s.dim = 1;
      s.single = [multi, u](double t) {
        return LatticeVector{std::fabs(support(multi(t), u.coords().data()))};
      };
      s.name = "support_modulus";
      s.descriptor = "abs_support(" + f.descriptor + ")";
      IntegrationReport rep = integrate_norm(s, eps, sub);
      if (!rep.ok()) return skipped(id, f, "a support integral did not reach tolerance");
      worst = std::max(worst, (*rep.point)[0]);
    }
    probe[static_cast<std::size_t>(k)] = worst;
  }

  double mono_defect = 0.0;
  for (int k = 0; k < levels; ++k)
    mono_defect = std::max(mono_defect,
                           probe[static_cast<std::size_t>(k) + 1] - probe[static_cast<std::size_t>(k)]);

  TheoremReport r;
  r.theorem_id = id;
  r.fixture = f.descriptor;
  r.add("deepest_tail_value", probe.back(), k_bound * std::pow(0.5, levels) + 4.0 * eps);
  r.add("monotonicity_defect", std::max(0.0, mono_defect), 2.0 * eps + 1e-12);
  r.info.emplace_back("levels", levels);
  r.info.emplace_back("support_bound", k_bound);
  r.finalize();
  return r;
}

}  // namespace gauge
