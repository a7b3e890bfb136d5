#pragma once

// Concrete support-function embedding i : cwk(R^d) -> R^m. Bodies are
// sampled on a fixed antipodally-symmetric direction grid; the image
// carries the sup norm and componentwise order (an M-space), where
// Hausdorff distance becomes the sup distance of support vectors and the
// hull union becomes the componentwise maximum. Reconstruction inverts the
// sampling as the circumscribed polytope of the grid halfspaces.

#include <memory>
#include <vector>

#include "gauge/convex.hpp"
#include "gauge/lattice.hpp"

namespace gauge {

class DirectionGrid {
public:
  // d=1: {+1,-1}. d=2: m equally spaced (m % 4 == 0), starting at +e1.
  // d=3: +-e_j plus an antipodal spiral ((m - 6) even), starting at +e1.
  static std::shared_ptr<const DirectionGrid> make(int dim, int m = 0);
  static int default_size(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return dirs_.size() / static_cast<std::size_t>(dim_); }
  const double* direction(std::size_t j) const {
    return dirs_.data() + j * static_cast<std::size_t>(dim_);
  }
  Direction direction_vec(std::size_t j) const;
  std::size_t antipode(std::size_t j) const;
  // true iff direction j is componentwise nonnegative
  bool is_nonnegative(std::size_t j) const;

  bool operator==(const DirectionGrid& o) const { return dim_ == o.dim_ && dirs_ == o.dirs_; }

private:
  DirectionGrid(int dim, std::vector<double> dirs) : dirs_(std::move(dirs)), dim_(dim) {}

  std::vector<double> dirs_;
  int dim_;
};

using GridPtr = std::shared_ptr<const DirectionGrid>;

// Element of the image M-space: support values of a body on a grid.
struct SupportVector {
  GridPtr grid;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

SupportVector embed(const ConvexBody& c, const GridPtr& grid);

// Componentwise operations in the image space.
SupportVector sv_add(const SupportVector& a, const SupportVector& b);
SupportVector sv_scale(double lambda, const SupportVector& a);
SupportVector sv_max(const SupportVector& a, const SupportVector& b);
SupportVector sv_min(const SupportVector& a, const SupportVector& b);

// max_j |a_j - b_j|; grids must agree.
double sup_distance(const SupportVector& a, const SupportVector& b);

// Support values of the box [-b, b] on the grid: h_j = sum_k |u_jk| b_k.
std::vector<double> box_support(const DirectionGrid& grid, const LatticeVector& b);

// Circumscribed polytope of the grid halfspaces {x : <u_j, x> <= s_j}.
// Exact in d=1; throws InconsistentSupport when the intersection is empty.
ConvexBody reconstruct(const SupportVector& s);

// One-sided Hausdorff error of reconstructing a body of the given
// circumradius from its grid samples.
double reconstruction_error_bound(const DirectionGrid& grid, double circumradius);

}  // namespace gauge
