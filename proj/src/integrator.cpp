#include "gauge/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace gauge {

std::string to_string(Path p) { return p == Path::GEOMETRIC ? "geometric" : "embedded"; }

Path path_from_string(const std::string& s) {
  if (s == "geometric" || s == "GEOMETRIC") return Path::GEOMETRIC;
  if (s == "embedded" || s == "EMBEDDED") return Path::EMBEDDED;
  throw ConfigError("unknown path: " + s);
}

std::string to_string(IntegrationStatus s) {
  switch (s) {
    case IntegrationStatus::OK: return "OK";
    case IntegrationStatus::NOT_INTEGRABLE_AT_TOLERANCE: return "NOT-INTEGRABLE-AT-TOLERANCE";
    case IntegrationStatus::NOT_INTEGRABLE_AT_ORDER_INDEX:
      return "NOT-INTEGRABLE-AT-ORDER-INDEX";
  }
  return "OK";
}

// --- plain Riemann sums -----------------------------------------------------

LatticeVector riemann_sum_single(const Integrand& f, const TaggedPartition& p) {
  if (f.kind != Integrand::Kind::SINGLE)
    throw std::invalid_argument("riemann_sum_single expects a single-valued integrand");
  LatticeVector acc = LatticeVector::zero(static_cast<std::size_t>(f.dim));
  for (const auto& c : p.cells) acc = acc + (c.b - c.a) * f.single(c.tag);
  return acc;
}

ConvexBody riemann_sum_geometric(const Integrand& f, const TaggedPartition& p,
                                 std::size_t vertex_cap) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("riemann_sum_geometric expects a set-valued integrand");
  ConvexBody acc = ConvexBody::singleton(LatticeVector::zero(static_cast<std::size_t>(f.dim)));
  for (const auto& c : p.cells) {
    acc = minkowski_sum(acc, scale(c.b - c.a, f.multi(c.tag)));
    if (acc.count() > vertex_cap)
      throw VertexOverflow("geometric accumulation exceeded the vertex cap; use the embedded path");
  }
  return acc;
}

SupportVector riemann_sum_embedded(const Integrand& f, const TaggedPartition& p,
                                   const GridPtr& grid) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("riemann_sum_embedded expects a set-valued integrand");
  const GridPtr g = grid ? grid : DirectionGrid::make(f.dim);
  SupportVector acc{g, std::vector<double>(g->size(), 0.0)};
  for (const auto& c : p.cells) {
    const double mu = c.b - c.a;
    const ConvexBody body = f.multi(c.tag);
    for (std::size_t j = 0; j < g->size(); ++j)
      acc.values[j] += mu * support(body, g->direction(j));
  }
  return acc;
}

RiemannSum riemann_sum(const Integrand& f, const TaggedPartition& p, Path path,
                       const GridPtr& grid) {
  if (f.kind == Integrand::Kind::SINGLE) return riemann_sum_single(f, p);
  if (path == Path::GEOMETRIC) return riemann_sum_geometric(f, p);
  return riemann_sum_embedded(f, p, grid);
}

// --- stopping-rule algebras ---------------------------------------------------

namespace {

struct SingleAlg {
  const Integrand* f;
  NormKind nk;
  using V = LatticeVector;

  V zero() const { return LatticeVector::zero(static_cast<std::size_t>(f->dim)); }
  V term(double tag, double mu) const { return mu * f->single(tag); }
  V add(const V& a, const V& b) const { return a + b; }
  void accumulate(V& acc, double tag, double mu) const {
    const LatticeVector v = f->single(tag);
    for (std::size_t j = 0; j < acc.dim(); ++j) acc[j] += mu * v[j];
  }
  V half(const V& a) const { return 0.5 * a; }
  double gap(const V& a, const V& b) const { return norm(a - b, nk); }
  bool order_ok(const V& a, const V& b, const LatticeVector& bn) const {
    return in_order_interval(a - b, bn);
  }
  double order_threshold(const LatticeVector& bn) const { return norm(bn, nk); }
  void store(IntegrationReport& rep, const V& v) const { rep.point = v; }
  void store_accepted(IntegrationReport& rep, const V& v) const {
    rep.accepted_points.push_back(v);
  }
};

struct GeoAlg {
  const Integrand* f;
  std::size_t vertex_cap;
  double haus_tol, cont_tol;
  using V = ConvexBody;

  V zero() const {
    return ConvexBody::singleton(LatticeVector::zero(static_cast<std::size_t>(f->dim)));
  }
  V term(double tag, double mu) const { return scale(mu, f->multi(tag)); }
  V add(const V& a, const V& b) const {
    ConvexBody s = minkowski_sum(a, b);
    if (s.count() > vertex_cap)
      throw VertexOverflow("geometric accumulation exceeded the vertex cap; use the embedded path");
    return s;
  }
  V half(const V& a) const { return scale(0.5, a); }
  void accumulate(V& acc, double tag, double mu) const { acc = add(acc, term(tag, mu)); }
  double gap(const V& a, const V& b) const { return hausdorff(a, b, haus_tol); }
  bool order_ok(const V& a, const V& b, const LatticeVector& bn) const {
    return contains(order_neighborhood(b, bn), a, cont_tol) &&
           contains(order_neighborhood(a, bn), b, cont_tol);
  }
  double order_threshold(const LatticeVector& bn) const { return norm(bn, NormKind::L2); }
  void store(IntegrationReport& rep, const V& v) const { rep.body = v; }
  void store_accepted(IntegrationReport& rep, const V& v) const {
    rep.accepted_bodies.push_back(v);
  }
};

struct EmbAlg {
  const Integrand* f;
  GridPtr grid;
  using V = SupportVector;

  V zero() const { return V{grid, std::vector<double>(grid->size(), 0.0)}; }
  V term(double tag, double mu) const {
    const ConvexBody body = f->multi(tag);
    V v{grid, std::vector<double>(grid->size())};
    for (std::size_t j = 0; j < grid->size(); ++j)
      v.values[j] = mu * support(body, grid->direction(j));
    return v;
  }
  V add(const V& a, const V& b) const { return sv_add(a, b); }
  V half(const V& a) const { return sv_scale(0.5, a); }
  void accumulate(V& acc, double tag, double mu) const {
    const ConvexBody body = f->multi(tag);
    const double* bv = body.flat().data();
    const std::size_t nv = body.count();
    const std::size_t m = grid->size();
    if (grid->dim() == 2) {
      for (std::size_t j = 0; j < m; ++j) {
        const double ux = grid->direction(j)[0], uy = grid->direction(j)[1];
        double best = -std::numeric_limits<double>::infinity();
        const double* v = bv;
        for (std::size_t i = 0; i < nv; ++i, v += 2) {
          const double s = ux * v[0] + uy * v[1];
          best = s > best ? s : best;
        }
        acc.values[j] += mu * best;
      }
      return;
    }
    for (std::size_t j = 0; j < m; ++j)
      acc.values[j] += mu * support(body, grid->direction(j));
  }
  double gap(const V& a, const V& b) const { return sup_distance(a, b); }
  // order intervals taken in the image M-space with radius ||b_n||_sup
  bool order_ok(const V& a, const V& b, const LatticeVector& bn) const {
    const double beta = norm(bn, NormKind::SUP);
    for (std::size_t j = 0; j < a.values.size(); ++j) {
      if (std::fabs(a.values[j] - b.values[j]) > beta) return false;
    }
    return true;
  }
  double order_threshold(const LatticeVector& bn) const { return norm(bn, NormKind::SUP); }
  void store(IntegrationReport& rep, const V& v) const {
    rep.embedded = v;
    rep.body = reconstruct(v);
  }
  void store_accepted(IntegrationReport& rep, const V& v) const {
    rep.accepted_embedded.push_back(v);
  }
};

// One pass over the partition, also reporting the sum without the last cell.
template <class Alg>
void sum_with_prefix(const Alg& alg, const TaggedPartition& p, typename Alg::V& total,
                     typename Alg::V& prefix) {
  typename Alg::V acc = alg.zero();
  prefix = acc;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const auto& c = p.cells[i];
    if (i + 1 == p.cells.size()) prefix = acc;
    alg.accumulate(acc, c.tag, c.b - c.a);
  }
  total = std::move(acc);
}

template <class Alg>
typename Alg::V perturbed_sum(const Alg& alg, const TaggedPartition& p,
                              const typename Alg::V& prefix) {
  if (p.mode == TagMode::PERRON) {
    // left-endpoint tags
    typename Alg::V acc = alg.zero();
    for (const auto& c : p.cells) alg.accumulate(acc, c.a, c.b - c.a);
    return acc;
  }
  // FREE: re-tag the final cell at the far point t = 0
  const auto& last = p.cells.back();
  return alg.add(prefix, alg.term(0.0, last.b - last.a));
}

template <class Alg>
IntegrationReport run_loop(const Alg& alg, const Integrand& f, StopKind kind, double eps,
                           const std::optional<OSequence>& seq, int n_target,
                           const IntegrateOptions& opts) {
  using V = typename Alg::V;
  IntegrationReport rep;
  rep.path = opts.path;
  rep.mode = opts.mode;
  rep.stop_kind = kind;
  rep.epsilon = eps;
  rep.osequence = seq;
  rep.order_index = n_target;
  rep.dimension = f.dim;
  rep.integrand_name = f.name;
  rep.integrand_descriptor = f.descriptor;

  LatticeVector bn = LatticeVector::zero(static_cast<std::size_t>(f.dim));
  if (kind == StopKind::ORDER) {
    bn = seq->at(n_target);
    rep.stop_threshold = alg.order_threshold(bn);
  } else {
    rep.stop_threshold = eps;
  }

  auto pair_ok = [&](const V& x, const V& y, double& worst) {
    const double g = alg.gap(x, y);
    worst = std::max(worst, g);
    return kind == StopKind::NORM ? g <= eps : alg.order_ok(x, y, bn);
  };

  TaggedPartition p = initial_partition(opts.domain, opts.mode);
  if (p.cells.empty()) {
    const V z = alg.zero();
    alg.store(rep, z);
    rep.status = IntegrationStatus::OK;
    return rep;
  }

  V total = alg.zero(), prefix = alg.zero();
  sum_with_prefix(alg, p, total, prefix);
  V pert = perturbed_sum(alg, p, prefix);
  std::optional<V> prev;

  for (int level = 0;; ++level) {
    const V& primary = opts.swap_tag_roles ? pert : total;
    const V& secondary = opts.swap_tag_roles ? total : pert;
    double worst = 0.0;
    bool ok = pair_ok(primary, secondary, worst);
    if (prev) ok = pair_ok(primary, *prev, worst) && ok;
    if (ok || level >= opts.refinement_cap) {
      rep.refinements = level;
      rep.final_gap = worst;
      rep.status = ok ? IntegrationStatus::OK
                      : (kind == StopKind::NORM
                             ? IntegrationStatus::NOT_INTEGRABLE_AT_TOLERANCE
                             : IntegrationStatus::NOT_INTEGRABLE_AT_ORDER_INDEX);
      alg.store(rep, primary);
      if (prev) alg.store_accepted(rep, *prev);
      alg.store_accepted(rep, primary);
      alg.store_accepted(rep, secondary);
      return rep;
    }
    prev = primary;
    if (opts.mode == TagMode::FREE) {
      // incremental advance: the left halves keep their parent tags, so
      // S_next = T_next (+) last-cell term with
      // T_next = S/2 without last (+) right-mid sums/2 without last
      //          (+) (mu_last/2) F(tag_last)
      V nsum = alg.zero();
      V nprefix = nsum;
      for (std::size_t i = 0; i < p.cells.size(); ++i) {
        const auto& c = p.cells[i];
        if (i + 1 == p.cells.size()) nprefix = nsum;
        const double rm = 0.5 * (0.5 * (c.a + c.b) + c.b);
        alg.accumulate(nsum, rm, c.b - c.a);
      }
      const auto& lastp = p.cells.back();
      const double mu_half = 0.5 * (lastp.b - lastp.a);
      const double rm_last = 0.5 * (0.5 * (lastp.a + lastp.b) + lastp.b);
      V t_next = alg.add(alg.add(alg.half(prefix), alg.half(nprefix)),
                         alg.term(lastp.tag, mu_half));
      total = alg.add(t_next, alg.term(rm_last, mu_half));
      pert = alg.add(t_next, alg.term(0.0, mu_half));
      prefix = std::move(t_next);
      p = refine(p);
    } else {
      p = refine(p);
      sum_with_prefix(alg, p, total, prefix);
      pert = perturbed_sum(alg, p, prefix);
    }
  }
}

template <class Fn>
IntegrationReport dispatch(const Integrand& f, const IntegrateOptions& opts, Fn&& run) {
  if (f.kind == Integrand::Kind::SINGLE) {
    return run(SingleAlg{&f, opts.norm_kind});
  }
  if (opts.path == Path::GEOMETRIC) {
    return run(GeoAlg{&f, opts.vertex_cap, opts.hausdorff_tol, opts.contains_tol});
  }
  const GridPtr g = opts.grid ? opts.grid : DirectionGrid::make(f.dim);
  return run(EmbAlg{&f, g});
}

}  // namespace

IntegrationReport integrate_norm(const Integrand& f, double eps, const IntegrateOptions& opts) {
  if (!(eps > 0.0)) throw std::invalid_argument("norm tolerance must be positive");
  return dispatch(f, opts, [&](const auto& alg) {
    return run_loop(alg, f, StopKind::NORM, eps, std::nullopt, 0, opts);
  });
}

IntegrationReport integrate_order(const Integrand& f, const OSequence& seq, int n_target,
                                  const IntegrateOptions& opts) {
  if (n_target < 0) throw std::invalid_argument("order index must be >= 0");
  if (static_cast<int>(seq.base.dim()) != f.dim)
    throw std::invalid_argument("(o)-sequence dimension does not match the integrand");
  return dispatch(f, opts, [&](const auto& alg) {
    return run_loop(alg, f, StopKind::ORDER, 0.0, std::optional<OSequence>(seq), n_target, opts);
  });
}

// --- exact paths -----------------------------------------------------------------

ConvexBody minkowski_combination(std::vector<std::pair<double, ConvexBody>> terms) {
  if (terms.empty()) throw std::invalid_argument("empty Minkowski combination");
  const int dim = terms.front().second.dim();
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second.flat() < y.second.flat();
  });
  ConvexBody acc = ConvexBody::singleton(LatticeVector::zero(static_cast<std::size_t>(dim)));
  for (const auto& [mu, body] : terms) {
    if (mu < 0.0) throw std::invalid_argument("Minkowski combination weights must be >= 0");
    acc = minkowski_sum(acc, scale(mu, body));
  }
  return acc;
}

ConvexBody integrate_simple(const SimpleSteps& steps) {
  if (steps.empty()) throw std::invalid_argument("simple integral needs at least one step");
  const int dim = steps.front().second.dim();
  for (std::size_t i = 0; i < steps.size(); ++i) {
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      for (const auto& [a1, b1] : steps[i].first.intervals()) {
        for (const auto& [a2, b2] : steps[j].first.intervals()) {
          if (std::min(b1, b2) - std::max(a1, a2) > 1e-12)
            throw std::invalid_argument("simple integral steps must be pairwise disjoint");
        }
      }
    }
  }
  std::vector<std::pair<double, ConvexBody>> terms;
  terms.reserve(steps.size());
  for (const auto& [set, body] : steps) terms.emplace_back(measure(set), body);
  ConvexBody r = minkowski_combination(std::move(terms));
  if (r.dim() != dim) throw std::logic_error("simple integral dimension drift");
  return r;
}

MonotoneBracket integrate_monotone_bracket(const Integrand& f, int n, double monotone_tol) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("monotone bracketing expects a set-valued integrand");
  if (n < 1) throw std::invalid_argument("monotone bracketing needs n >= 1");
  std::vector<ConvexBody> at;
  at.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) at.push_back(f.multi(static_cast<double>(i) / n));
  for (int i = 0; i < n; ++i) {
    if (!contains(at[static_cast<std::size_t>(i) + 1], at[static_cast<std::size_t>(i)],
                  monotone_tol))
      throw std::invalid_argument("integrand failed the inclusion-monotonicity spot check");
  }
  const double mu = 1.0 / n;
  ConvexBody lower = ConvexBody::singleton(LatticeVector::zero(static_cast<std::size_t>(f.dim)));
  ConvexBody upper = lower;
  for (int i = 0; i < n; ++i) {
    lower = minkowski_sum(lower, scale(mu, at[static_cast<std::size_t>(i)]));
    upper = minkowski_sum(upper, scale(mu, at[static_cast<std::size_t>(i) + 1]));
  }
  MonotoneBracket br{std::move(lower), std::move(upper), 0.0};
  const double k = norm(abs_bound(at.back()), NormKind::SUP);
  br.bound = 2.0 * k / n;
  return br;
}

ConvexBody phi_outer(const Integrand& f, const MeasurableSet& e, int n, int trials,
                     const PhiOuterOptions& opts) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("phi_outer expects a set-valued integrand");
  if (n < 1 || trials < 1) throw std::invalid_argument("phi_outer needs n >= 1, trials >= 1");
  const GridPtr grid = opts.grid ? opts.grid : DirectionGrid::make(f.dim);
  const SupportVector ball =
      embed(ConvexBody::norm_ball(f.dim, opts.ball_kind, 64), grid);
  std::optional<SupportVector> acc;
  for (int k = 0; k < trials; ++k) {
    const Gauge g = Gauge::constant(opts.base_delta * std::pow(0.5, k));
    const TaggedPartition pi = cousin_partition_of(g, e, opts.cousin_depth_cap);
    SupportVector s = riemann_sum_embedded(f, pi, grid);
    s = sv_add(s, sv_scale(1.0 / n, ball));
    acc = acc ? sv_min(*acc, s) : s;
  }
  return reconstruct(*acc);
}

StoppingTrace trace_stopping_decisions(const Integrand& f, const OSequence& seq, int n_target,
                                       const IntegrateOptions& opts, int max_levels) {
  if (f.kind != Integrand::Kind::MULTI)
    throw std::invalid_argument("stopping trace expects a set-valued integrand");
  const GridPtr grid = opts.grid ? opts.grid : DirectionGrid::make(f.dim);
  const EmbAlg alg{&f, grid};
  const LatticeVector bn = seq.at(n_target);
  const double beta = norm(bn, NormKind::SUP);

  StoppingTrace tr;
  TaggedPartition p = initial_partition(opts.domain, opts.mode);
  std::optional<SupportVector> prev;
  bool order_done = false, norm_done = false;
  for (int level = 0; level < max_levels && !(order_done && norm_done); ++level) {
    SupportVector total, prefix;
    sum_with_prefix(alg, p, total, prefix);
    const SupportVector pert = perturbed_sum(alg, p, prefix);
    bool ord = alg.order_ok(total, pert, bn);
    bool nrm = sup_distance(total, pert) <= beta;
    double g = sup_distance(total, pert);
    if (prev) {
      ord = ord && alg.order_ok(total, *prev, bn);
      nrm = nrm && sup_distance(total, *prev) <= beta;
      g = std::max(g, sup_distance(total, *prev));
    }
    tr.order_accepts.push_back(ord);
    tr.norm_accepts.push_back(nrm);
    tr.gaps.push_back(g);
    order_done = order_done || ord;
    norm_done = norm_done || nrm;
    prev = total;
    p = refine(p);
  }
  return tr;
}

}  // namespace gauge
