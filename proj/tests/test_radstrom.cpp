#include "doctest.h"

#include <cmath>

#include "gauge/radstrom.hpp"
#include "helpers.hpp"

using namespace gauge;

TEST_CASE("direction grids") {
  const GridPtr g1 = DirectionGrid::make(1);
  REQUIRE(g1->size() == 2);
  CHECK(g1->direction(0)[0] == 1.0);
  CHECK(g1->direction(1)[0] == -1.0);
  CHECK_THROWS_AS(DirectionGrid::make(1, 4), std::invalid_argument);

  const GridPtr g2 = DirectionGrid::make(2, 64);
  REQUIRE(g2->size() == 64);
  CHECK(g2->direction(0)[0] == 1.0);
  CHECK(g2->direction(16)[1] == 1.0);  // +e2 at m/4
  CHECK_THROWS_AS(DirectionGrid::make(2, 30), std::invalid_argument);

  const GridPtr g3 = DirectionGrid::make(3, 242);
  REQUIRE(g3->size() == 242);
  for (const GridPtr& g : {g1, g2, g3}) {
    for (std::size_t j = 0; j < g->size(); ++j) {
      double n2 = 0.0, anti = 0.0;
      const double* u = g->direction(j);
      const double* v = g->direction(g->antipode(j));
      for (int c = 0; c < g->dim(); ++c) {
        n2 += u[c] * u[c];
        anti += std::fabs(u[c] + v[c]);
      }
      CHECK(std::fabs(std::sqrt(n2) - 1.0) <= 1e-12);
      CHECK(anti <= 1e-12);
    }
  }
}

TEST_CASE("embed basics") {
  const GridPtr g1 = DirectionGrid::make(1);
  const SupportVector s = embed(ConvexBody::interval(0, 1), g1);
  CHECK(s.values[0] == doctest::Approx(1.0));
  CHECK(s.values[1] == doctest::Approx(0.0));
  const GridPtr g2 = DirectionGrid::make(2, 64);
  const SupportVector z = embed(ConvexBody::singleton(LatticeVector{0, 0}), g2);
  for (double v : z.values) CHECK(v == 0.0);
}

TEST_CASE("embed is positively linear") {
  const GridPtr g = DirectionGrid::make(2, 64);
  auto r = testutil::rng(51);
  std::uniform_real_distribution<double> lam(0.0, 3.0);
  for (int rep = 0; rep < 100; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 2);
    const ConvexBody b = testutil::random_polytope(r, 2);
    const double l = lam(r);
    const SupportVector sum = embed(minkowski_sum(a, b), g);
    const SupportVector parts = sv_add(embed(a, g), embed(b, g));
    CHECK(sup_distance(sum, parts) <= 1e-12);
    const SupportVector mixed = embed(minkowski_sum(scale(l, a), b), g);
    const SupportVector linear = sv_add(sv_scale(l, embed(a, g)), embed(b, g));
    CHECK(sup_distance(mixed, linear) <= 1e-10);
  }
}

TEST_CASE("max identity: hull union embeds to the componentwise maximum") {
  const GridPtr g = DirectionGrid::make(2, 64);
  auto r = testutil::rng(53);
  for (int rep = 0; rep < 100; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 2);
    const ConvexBody b = testutil::random_polytope(r, 2);
    const SupportVector lhs = embed(hull_union(a, b), g);
    const SupportVector rhs = sv_max(embed(a, g), embed(b, g));
    CHECK(sup_distance(lhs, rhs) <= 1e-12);
  }
}

TEST_CASE("sup_distance is the d=1 isometry and a lower bound elsewhere") {
  const GridPtr g1 = DirectionGrid::make(1);
  auto r = testutil::rng(57);
  for (int rep = 0; rep < 100; ++rep) {
    const ConvexBody a = testutil::random_interval(r);
    const ConvexBody b = testutil::random_interval(r);
    const double sd = sup_distance(embed(a, g1), embed(b, g1));
    CHECK(std::fabs(sd - hausdorff(a, b)) <= 1e-12);
  }
  const SupportVector s = embed(ConvexBody::interval(0, 1), g1);
  CHECK(sup_distance(s, s) == 0.0);

  const GridPtr g2 = DirectionGrid::make(2, 256);
  for (int rep = 0; rep < 40; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 2);
    const ConvexBody b = testutil::random_polytope(r, 2);
    const double sd = sup_distance(embed(a, g2), embed(b, g2));
    const double dh = hausdorff(a, b);
    const double diam = 2.0 * std::max(norm(abs_bound(a), NormKind::L2),
                                       norm(abs_bound(b), NormKind::L2));
    CHECK(sd <= dh + 1e-9);
    CHECK(dh <= sd + 1e-2 * std::max(diam, 1e-6));
  }
}

TEST_CASE("sampled isometry never exceeds the true distance") {
  const GridPtr g = DirectionGrid::make(2, 64);
  auto r = testutil::rng(59);
  for (int rep = 0; rep < 100; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 2);
    const ConvexBody b = testutil::random_polytope(r, 2);
    CHECK(sup_distance(embed(a, g), embed(b, g)) <= hausdorff(a, b) + 1e-9);
  }
}

TEST_CASE("reconstruct in d=1 is exact") {
  const GridPtr g1 = DirectionGrid::make(1);
  SupportVector s{g1, {1.0, 0.0}};
  CHECK(reconstruct(s) == ConvexBody::interval(0, 1));
  SupportVector zero{g1, {0.0, 0.0}};
  const ConvexBody z = reconstruct(zero);
  CHECK(z.count() == 1);
  CHECK(z.vertex(0)[0] == 0.0);
  SupportVector bad{g1, {-1.0, 0.0}};
  CHECK_THROWS_AS(reconstruct(bad), InconsistentSupport);
}

TEST_CASE("reconstruct round trip is within the circumscribed-polytope bound") {
  const GridPtr g = DirectionGrid::make(2, 64);
  const ConvexBody square = ConvexBody::box(LatticeVector{0, 0}, LatticeVector{1, 1});
  const ConvexBody back = reconstruct(embed(square, g));
  // diam * (1 - cos(pi/m)) for the unit square at m = 64
  CHECK(hausdorff(square, back) <= 1.8e-3);
  CHECK(contains(back, square, 1e-9));  // outer approximation

  // random round trips stay within the documented grid bound
  auto r = testutil::rng(61);
  for (int rep = 0; rep < 30; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 2);
    const ConvexBody back2 = reconstruct(embed(a, g));
    CHECK(contains(back2, a, 1e-9));
    const double bound =
        reconstruction_error_bound(*g, norm(abs_bound(a), NormKind::L2)) + 1e-9;
    CHECK(hausdorff(a, back2) <= bound);
  }
}

TEST_CASE("reconstruct in d=3 recovers boxes and stays outer") {
  const GridPtr g = DirectionGrid::make(3, 242);
  const ConvexBody box =
      ConvexBody::box(LatticeVector{-0.5, 0.0, 0.25}, LatticeVector{1.0, 2.0, 0.75});
  const ConvexBody back = reconstruct(embed(box, g));
  CHECK(hausdorff(box, back) <= 1e-9);

  auto r = testutil::rng(67);
  for (int rep = 0; rep < 5; ++rep) {
    const ConvexBody a = testutil::random_polytope(r, 3);
    const ConvexBody back2 = reconstruct(embed(a, g));
    CHECK(contains(back2, a, 1e-8));
    const double bound =
        reconstruction_error_bound(*g, norm(abs_bound(a), NormKind::L2)) + 1e-8;
    CHECK(hausdorff(a, back2) <= bound);
  }
}

TEST_CASE("M-space identity on embeddings of opposed zero-anchored bodies") {
  const GridPtr g = DirectionGrid::make(2, 64);
  auto r = testutil::rng(71);
  std::uniform_real_distribution<double> pos(0.1, 2.0);
  for (int rep = 0; rep < 50; ++rep) {
    const LatticeVector p{pos(r), pos(r)};
    const ConvexBody a = hull_union(ConvexBody::singleton(LatticeVector{0, 0}),
                                    ConvexBody::singleton(-(pos(r) * p)));
    const ConvexBody b = hull_union(ConvexBody::singleton(LatticeVector{0, 0}),
                                    ConvexBody::singleton(pos(r) * p));
    const SupportVector sa = embed(a, g), sb = embed(b, g);
    for (double v : sa.values) CHECK(v >= -1e-12);
    for (double v : sb.values) CHECK(v >= -1e-12);
    double na = 0, nb = 0, nsum = 0;
    for (std::size_t j = 0; j < sa.values.size(); ++j) {
      na = std::max(na, sa.values[j]);
      nb = std::max(nb, sb.values[j]);
      nsum = std::max(nsum, sa.values[j] + sb.values[j]);
    }
    CHECK(nsum == doctest::Approx(std::max(na, nb)).epsilon(1e-10));
  }
}

TEST_CASE("grid mismatch is rejected") {
  const SupportVector a = embed(ConvexBody::interval(0, 1), DirectionGrid::make(1));
  const SupportVector b{DirectionGrid::make(2, 64), std::vector<double>(64, 0.0)};
  CHECK_THROWS_AS(sup_distance(a, b), std::invalid_argument);
}
