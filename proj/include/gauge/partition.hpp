#pragma once

// Tagged partitions of [0,1] into closed subintervals, gauges and
// gamma-fineness, Cousin construction of fine Perron partitions, and
// measurable sets as finite unions of closed intervals under Lebesgue
// measure.

#include <functional>
#include <string>
#include <vector>

#include "gauge/errors.hpp"

namespace gauge {

enum class TagMode { PERRON, FREE };

std::string to_string(TagMode m);
TagMode tag_mode_from_string(const std::string& s);

// Strictly positive evaluable map on [0,1].
struct Gauge {
  std::function<double(double)> delta;
  std::string descriptor = "custom";

  double operator()(double t) const;

  static Gauge constant(double value);
  static Gauge affine(double intercept, double slope);
  // value i on [breaks[i], breaks[i+1]); breaks[0] = 0, breaks.back() = 1.
  static Gauge piecewise(std::vector<double> breaks, std::vector<double> values);
};

// Finite union of closed subintervals of [0,1], disjoint after
// normalization (overlapping or touching intervals merge; degenerate
// intervals are kept).
class MeasurableSet {
public:
  MeasurableSet() = default;
  explicit MeasurableSet(std::vector<std::pair<double, double>> intervals);
  static MeasurableSet full() { return MeasurableSet({{0.0, 1.0}}); }

  const std::vector<std::pair<double, double>>& intervals() const { return iv_; }
  bool empty() const { return iv_.empty(); }

private:
  std::vector<std::pair<double, double>> iv_;
};

double measure(const MeasurableSet& e);

struct TaggedPartition {
  struct Cell {
    double a, b, tag;
  };
  std::vector<Cell> cells;
  TagMode mode = TagMode::PERRON;

  double max_cell_length() const;
};

// Structural validity: cells non-overlapping, covering the domain, tags in
// [0,1], and tag-in-cell when mode is PERRON.
bool is_valid(const TaggedPartition& p, const MeasurableSet& domain = MeasurableSet::full(),
              double tol = 1e-12);

// gamma-fineness: every cell inside the open ball (tag - g(tag), tag + g(tag)),
// plus the Perron tag condition when mode is PERRON.
bool is_fine(const TaggedPartition& p, const Gauge& g);

// Cousin construction over a single interval or over [0,1]: recursive
// bisection accepting an interval as soon as its midpoint or an endpoint
// works as a fine tag. Depth capped (default 60).
TaggedPartition cousin_partition(const Gauge& g, int depth_cap = 60);
TaggedPartition cousin_partition_on(const Gauge& g, double a, double b, int depth_cap = 60);
TaggedPartition cousin_partition_of(const Gauge& g, const MeasurableSet& e, int depth_cap = 60);

// Uniform bisection; PERRON re-tags both halves at their midpoints, FREE
// keeps the parent tag on the left half and midpoint-tags the right half.
TaggedPartition refine(const TaggedPartition& p);

// Cells intersected with e (empty intersections dropped); FREE keeps tags,
// PERRON clamps tags into the intersected cell.
TaggedPartition restrict(const TaggedPartition& p, const MeasurableSet& e);

// Level-0 partition of e: one midpoint-tagged cell per interval.
TaggedPartition initial_partition(const MeasurableSet& e, TagMode mode);

// Dump format: header "a,b,tag" followed by one CSV row per cell.
std::string partition_to_csv(const TaggedPartition& p);

}  // namespace gauge
