#pragma once

// Shared test utilities: deterministic random fixtures, independent
// quadrature and geometry oracles, and partition builders. Oracle code
// here must stay independent of the engine paths it checks.

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "gauge/convex.hpp"
#include "gauge/lattice.hpp"
#include "gauge/partition.hpp"

namespace testutil {

inline std::mt19937_64 rng(unsigned long long seed) { return std::mt19937_64(seed); }

inline gauge::LatticeVector random_vector(std::mt19937_64& r, int dim, double lo = -1.0,
                                          double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> c(static_cast<std::size_t>(dim));
  for (double& x : c) x = u(r);
  return gauge::LatticeVector(std::move(c));
}

inline gauge::ConvexBody random_polytope(std::mt19937_64& r, int dim, int max_vertices = 8) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int k = nv(r);
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(k * dim));
  for (int i = 0; i < k * dim; ++i) flat.push_back(u(r));
  return gauge::ConvexBody::from_points(dim, std::move(flat));
}

inline gauge::ConvexBody random_interval(std::mt19937_64& r) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const double a = u(r), b = u(r);
  return gauge::ConvexBody::interval(std::min(a, b), std::max(a, b));
}

// Composite Simpson quadrature; independent 1-D oracle for support
// integrals (panels even, >= 2).
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels = 4096) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Uniform n-cell partition of [0,1] with midpoint tags.
inline gauge::TaggedPartition uniform_partition(int n, gauge::TagMode mode) {
  gauge::TaggedPartition p;
  p.mode = mode;
  for (int i = 0; i < n; ++i) {
    const double a = static_cast<double>(i) / n;
    const double b = static_cast<double>(i + 1) / n;
    p.cells.push_back({a, b, 0.5 * (a + b)});
  }
  return p;
}

// Brute-force support maximum over an explicit vertex list (oracle for the
// engine's support routine).
inline double support_oracle(const gauge::ConvexBody& c, const std::vector<double>& u) {
  double best = -1e300;
  for (std::size_t i = 0; i < c.count(); ++i) {
    double s = 0.0;
    for (int j = 0; j < c.dim(); ++j) s += u[static_cast<std::size_t>(j)] * c.vertex(i)[j];
    best = std::max(best, s);
  }
  return best;
}

}  // namespace testutil
