#include "doctest.h"

#include <cmath>

#include "gauge/checks.hpp"
#include "gauge/config.hpp"
#include "helpers.hpp"

using namespace gauge;

namespace {
const OSequence kSeq1(LatticeVector{1.0}, 0.5);
const OSequence kSeq2(LatticeVector{1.0, 1.0}, 0.5);
}  // namespace

TEST_CASE("support_point_selection picks extreme points deterministically") {
  const Integrand f = make_interval_0t(1);
  const SelectionFunction right = support_point_selection(f, Direction(LatticeVector{1.0}));
  const SelectionFunction left = support_point_selection(f, Direction(LatticeVector{-1.0}));
  for (double t : {0.0, 0.25, 0.8, 1.0}) {
    CHECK(right.eval(t)[0] == doctest::Approx(t));
    CHECK(left.eval(t)[0] == doctest::Approx(0.0));
  }
  // tie along the right edge of t * unit square resolves lexicographically up
  const Integrand sq = make_linear_body(
      ConvexBody::box(LatticeVector{0, 0}, LatticeVector{1, 1}));
  const SelectionFunction sel = support_point_selection(sq, Direction(LatticeVector{1.0, 0.0}));
  const LatticeVector v = sel.eval(0.6);
  CHECK(v[0] == doctest::Approx(0.6));
  CHECK(v[1] == doctest::Approx(0.6));  // the (t, t) corner wins the tie
  // a genuine selection: member of F(t)
  CHECK(distance_to_body(v, sq.multi(0.6)) <= 1e-10);
}

TEST_CASE("aumann inclusion check") {
  const Integrand f = make_interval_0t(1);
  std::vector<Direction> dirs{Direction(LatticeVector{1.0}), Direction(LatticeVector{-1.0})};
  const TheoremReport r = check_aumann_inclusion(f, dirs, 1e-4);
  CHECK(r.verdict == Verdict::PASS);

  // selection integrals are support points of the constant body
  const ConvexBody c = ConvexBody::box(LatticeVector{-1, 0}, LatticeVector{2, 1});
  std::vector<Direction> dirs2;
  const GridPtr g = DirectionGrid::make(2, 16);
  for (std::size_t j = 0; j < g->size(); ++j) dirs2.push_back(g->direction_vec(j));
  const TheoremReport rc = check_aumann_inclusion(make_constant(c), dirs2, 1e-4);
  CHECK(rc.verdict == Verdict::PASS);

  const TheoremReport rl = check_aumann_inclusion(
      make_linear_body(ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1})), dirs2, 1e-4);
  CHECK(rl.verdict == Verdict::PASS);
}

TEST_CASE("hull of selection integrals reconstructs the integral within grid error") {
  const ConvexBody c = ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1});
  const Integrand f = make_linear_body(c);
  const double eps = 1e-4;
  const IntegrationReport j = integrate_norm(f, eps);
  REQUIRE(j.ok());
  const GridPtr g = DirectionGrid::make(2, 32);
  std::vector<LatticeVector> points;
  for (std::size_t k = 0; k < g->size(); ++k) {
    const IntegrationReport sel =
        integrate_norm(selection_integrand(f, g->direction_vec(k)), eps);
    REQUIRE(sel.ok());
    points.push_back(*sel.point);
  }
  const ConvexBody hull = ConvexBody::from_vertices(points);
  // easy direction: selection integrals sit inside the integral
  CHECK(contains(order_neighborhood(*j.body, LatticeVector{3 * eps, 3 * eps}), hull, 1e-9));
  // probe of the closure direction at grid resolution
  CHECK(hausdorff(hull, *j.body) <= 1e-2 * 2.83 + 3 * eps);
}

TEST_CASE("nonnegative decomposition check") {
  for (const Integrand& f :
       {make_translate_box(1), make_interval_0t(2),
        make_linear_body(ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1}))}) {
    const TheoremReport r = check_nonneg_decomposition(f, 1e-4);
    INFO(f.descriptor);
    CHECK(r.verdict == Verdict::PASS);
  }
  // closed-form spot check of the translate fixture decomposition
  const Integrand f = make_translate_box(1);
  const GridPtr g1 = DirectionGrid::make(1);
  const Integrand sel = selection_integrand(f, g1->direction_vec(1));  // direction -1
  const IntegrationReport jf = integrate_norm(sel, 1e-6);
  REQUIRE(jf.ok());
  CHECK(std::fabs((*jf.point)[0] - 0.5) <= 2e-6);  // f(t) = t integrates to 1/2
}

TEST_CASE("order decomposition check and its hypothesis gate") {
  const TheoremReport r1 = check_order_decomposition(make_translate_box(1), kSeq1, 12);
  CHECK(r1.verdict == Verdict::PASS);
  CHECK(r1.max_residual() <= 1e-8);

  const TheoremReport r2 = check_order_decomposition(make_interval_0t(2), kSeq2, 12);
  CHECK(r2.verdict == Verdict::PASS);

  // the triangle fixture violates sup F(t) in F(t): SKIPPED, never FAIL
  const TheoremReport r3 = check_order_decomposition(make_triangle_fixture(), kSeq2, 12);
  CHECK(r3.verdict == Verdict::SKIPPED);
  CHECK(r3.skip_reason.find("sup") != std::string::npos);
}

TEST_CASE("order decomposition matches interval arithmetic on [t, t+1]") {
  // g(t) = t + 1, G = [-1, 0], J_F = [0.5, 1.5]
  const Integrand f = make_translate_box(1);
  const IntegrationReport jf = integrate_order(f, kSeq1, 14);
  REQUIRE(jf.ok());
  CHECK(hausdorff(*jf.body, ConvexBody::interval(0.5, 1.5)) <= 1e-4);
  const ConvexBody gt = translate(f.multi(0.3), -order_sup(f.multi(0.3)));
  CHECK(hausdorff(gt, ConvexBody::interval(-1, 0)) <= 1e-12);
  CHECK(support(gt, Direction(LatticeVector{1.0})) == doctest::Approx(0.0));
}

TEST_CASE("sup selection check") {
  const TheoremReport r1 = check_sup_selection(make_interval_0t(1), kSeq1, 20);
  CHECK(r1.verdict == Verdict::PASS);
  const TheoremReport r2 = check_sup_selection(make_sym_interval(2), kSeq2, 20);
  CHECK(r2.verdict == Verdict::PASS);
  const TheoremReport r3 = check_sup_selection(make_constant(
      ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1})), kSeq2, 20);
  CHECK(r3.verdict == Verdict::PASS);
}

TEST_CASE("sigma additivity check") {
  const Integrand f =
      make_linear_body(ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1}));
  const TheoremReport r = check_sigma_additivity(f, 1e-4, 10);
  CHECK(r.verdict == Verdict::PASS);

  // constant body: partial sum equals (1 - 2^-N) C
  const ConvexBody c = ConvexBody::box(LatticeVector{0, 0}, LatticeVector{1, 2});
  const TheoremReport rc = check_sigma_additivity(make_constant(c), 1e-4, 10);
  CHECK(rc.verdict == Verdict::PASS);
}

TEST_CASE("uniform integrability probe") {
  const Integrand f =
      make_linear_body(ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1}));
  const TheoremReport r = check_uniform_integrability(f, 8, 8, 1e-5);
  CHECK(r.verdict == Verdict::PASS);

  // zero multifunction probes identically zero
  const Integrand z = make_constant(ConvexBody::singleton(LatticeVector{0, 0}));
  const TheoremReport rz = check_uniform_integrability(z, 4, 6, 1e-6);
  CHECK(rz.verdict == Verdict::PASS);
  for (const auto& [name, value] : rz.residuals) {
    if (name == "deepest_tail_value") CHECK(value <= 1e-12);
  }

  // quadratic decay of the probe for the linear fixture
  const Integrand f1 = make_linear_body(ConvexBody::interval(-1, 1));
  IntegrateOptions o;
  for (int k : {1, 2, 3}) {
    o.domain = MeasurableSet({{0.0, std::pow(0.5, k)}});
    Integrand s;
    s.kind = Integrand::Kind::SINGLE;
    s.dim = 1;
    auto multi = f1.multi;
    s.single = [multi](double t) {
      const double u = 1.0;
      return LatticeVector{std::fabs(support(multi(t), &u))};
    };
    s.name = s.descriptor = "abs_support";
    const IntegrationReport rep = integrate_norm(s, 1e-7, o);
    REQUIRE(rep.ok());
    CHECK(std::fabs((*rep.point)[0] - std::pow(4.0, -k) / 2.0) <= 1e-6);
  }
}

TEST_CASE("checks re-run bit-identically") {
  const Integrand f =
      make_linear_body(ConvexBody::box(LatticeVector{-1, -1}, LatticeVector{1, 1}));
  const TheoremReport a = check_nonneg_decomposition(f, 1e-3);
  const TheoremReport b = check_nonneg_decomposition(f, 1e-3);
  CHECK(config::theorem_to_json(a).dump() == config::theorem_to_json(b).dump());
}
