#pragma once

// Arithmetic of nonempty compact convex bodies in R^d (d <= 3), in vertex
// representation: Minkowski operations, support functions, Hausdorff
// distance via nearest-point projection, componentwise order bounds, and
// order neighborhoods U(C, b) = C + [-b, b].

#include <cstddef>
#include <vector>

#include "gauge/lattice.hpp"

namespace gauge {

// Unit (l2) direction vector.
class Direction {
public:
  explicit Direction(LatticeVector u);
  const LatticeVector& vec() const { return u_; }
  std::size_t dim() const { return u_.dim(); }
  double operator[](std::size_t i) const { return u_[i]; }

private:
  LatticeVector u_;
};

// Nonempty compact convex polytope, stored as an irredundant vertex list
// (flat row-major array). Normalization on construction keeps the list
// canonical: d=1 -> [lo, hi]; d=2 -> CCW hull from the lexicographic
// minimum; d=3 -> lexicographically sorted extreme points.
class ConvexBody {
public:
  static ConvexBody from_points(int dim, std::vector<double> flat_coords);
  static ConvexBody from_vertices(const std::vector<LatticeVector>& vertices);
  static ConvexBody singleton(const LatticeVector& p);
  static ConvexBody interval(double lo, double hi);
  static ConvexBody box(const LatticeVector& lo, const LatticeVector& hi);
  // Regular n-gon inscribed in the l2 unit circle (d=2); [-1,1] in d=1.
  static ConvexBody ball_poly(int dim, int n);
  // Unit ball of the given norm as a polytope (SUP -> cube, L1 -> cross
  // polytope, L2 -> ball_poly / spiral polytope in d=3).
  static ConvexBody norm_ball(int dim, NormKind kind, int l2_facets = 64);

  int dim() const { return dim_; }
  std::size_t count() const { return v_.size() / static_cast<std::size_t>(dim_); }
  const double* vertex(std::size_t i) const { return v_.data() + i * static_cast<std::size_t>(dim_); }
  LatticeVector vertex_vec(std::size_t i) const;
  const std::vector<double>& flat() const { return v_; }

  bool operator==(const ConvexBody& o) const { return dim_ == o.dim_ && v_ == o.v_; }

private:
  ConvexBody(int dim, std::vector<double> flat, bool already_normal);
  friend ConvexBody minkowski_sum(const ConvexBody&, const ConvexBody&);
  friend ConvexBody scale(double, const ConvexBody&);
  friend ConvexBody translate(const ConvexBody&, const LatticeVector&);

  std::vector<double> v_;
  int dim_;
};

// sup over the body of <u, x>; attained at a vertex.
double support(const ConvexBody& c, const Direction& u);
double support(const ConvexBody& c, const double* u);
// Index of a maximizing vertex, ties broken toward the lexicographically
// greatest vertex (deterministic selections).
std::size_t support_argmax(const ConvexBody& c, const double* u, double tie_tol = 1e-12);

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b);
ConvexBody scale(double lambda, const ConvexBody& a);
ConvexBody translate(const ConvexBody& a, const LatticeVector& v);
ConvexBody hull_union(const ConvexBody& a, const ConvexBody& b);

// Distance from point p to the body, by projection onto the hull
// (simplex-refining Gilbert scheme); accurate to tol.
double distance_to_body(const LatticeVector& p, const ConvexBody& c, double tol = 1e-12,
                        int max_iter = 10000);

// Hausdorff distance, accurate to tol.
double hausdorff(const ConvexBody& a, const ConvexBody& b, double tol = 1e-10);

// Componentwise supremum / infimum over the body.
LatticeVector order_sup(const ConvexBody& c);
LatticeVector order_inf(const ConvexBody& c);
// Componentwise max of |x_j| over the body: order_sup(C) v (-order_inf(C)).
LatticeVector abs_bound(const ConvexBody& c);

// U(C, b) = C + [-b, b], b >= 0 componentwise.
ConvexBody order_neighborhood(const ConvexBody& c, const LatticeVector& b);

// true iff every vertex of b lies within projection distance tol of a.
bool contains(const ConvexBody& a, const ConvexBody& b, double tol);

}  // namespace gauge
