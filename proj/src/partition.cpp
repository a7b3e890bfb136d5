#include "gauge/partition.hpp"

#include <algorithm>
#include <cstdio>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gauge {

std::string to_string(TagMode m) { return m == TagMode::PERRON ? "perron" : "free"; }

TagMode tag_mode_from_string(const std::string& s) {
  if (s == "perron" || s == "PERRON") return TagMode::PERRON;
  if (s == "free" || s == "FREE") return TagMode::FREE;
  throw ConfigError("unknown tag mode: " + s);
}

double Gauge::operator()(double t) const {
  const double v = delta(t);
  if (!(v > 0.0)) throw std::invalid_argument("gauge must be strictly positive");
  return v;
}

Gauge Gauge::constant(double value) {
  if (!(value > 0.0)) throw std::invalid_argument("constant gauge must be positive");
  return Gauge{[value](double) { return value; }, "constant(" + std::to_string(value) + ")"};
}

Gauge Gauge::affine(double intercept, double slope) {
  if (!(intercept > 0.0) || intercept + slope <= 0.0)
    throw std::invalid_argument("affine gauge must stay positive on [0,1]");
  return Gauge{[intercept, slope](double t) { return intercept + slope * t; },
               "affine(" + std::to_string(intercept) + "," + std::to_string(slope) + ")"};
}

Gauge Gauge::piecewise(std::vector<double> breaks, std::vector<double> values) {
  if (breaks.size() != values.size() + 1 || breaks.front() != 0.0 || breaks.back() != 1.0)
    throw std::invalid_argument("piecewise gauge needs breaks 0=b0<...<bn=1 with n values");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) throw std::invalid_argument("piecewise breaks must increase");
  }
  for (double v : values) {
    if (!(v > 0.0)) throw std::invalid_argument("piecewise gauge values must be positive");
  }
  auto fn = [breaks, values](double t) {
    const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks.begin());
    idx = idx == 0 ? 0 : idx - 1;
    if (idx >= values.size()) idx = values.size() - 1;
    return values[idx];
  };
  return Gauge{fn, "piecewise(" + std::to_string(values.size()) + ")"};
}

MeasurableSet::MeasurableSet(std::vector<std::pair<double, double>> intervals) {
  for (auto& [a, b] : intervals) {
    if (!(a >= 0.0 && b <= 1.0 && a <= b))
      throw std::invalid_argument("measurable set intervals must satisfy 0 <= a <= b <= 1");
  }
  std::sort(intervals.begin(), intervals.end());
  for (const auto& [a, b] : intervals) {
    if (!iv_.empty() && a <= iv_.back().second) {
      iv_.back().second = std::max(iv_.back().second, b);
    } else {
      iv_.emplace_back(a, b);
    }
  }
}

double measure(const MeasurableSet& e) {
  double s = 0.0;
  for (const auto& [a, b] : e.intervals()) s += b - a;
  return s;
}

double TaggedPartition::max_cell_length() const {
  double m = 0.0;
  for (const Cell& c : cells) m = std::max(m, c.b - c.a);
  return m;
}

bool is_valid(const TaggedPartition& p, const MeasurableSet& domain, double tol) {
  std::vector<std::pair<double, double>> ivs;
  ivs.reserve(p.cells.size());
  for (const auto& c : p.cells) {
    if (!(c.a <= c.b)) return false;
    if (!(c.tag >= 0.0 && c.tag <= 1.0)) return false;
    if (p.mode == TagMode::PERRON && !(c.tag >= c.a && c.tag <= c.b)) return false;
    ivs.emplace_back(c.a, c.b);
  }
  std::sort(ivs.begin(), ivs.end());
  for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
    if (ivs[i].second > ivs[i + 1].first + tol) return false;  // overlapping interiors
  }
  // coverage: merged cells must reproduce the domain up to tol
  std::vector<std::pair<double, double>> merged;
  for (const auto& iv : ivs) {
    if (!merged.empty() && iv.first <= merged.back().second + tol) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  const auto& dom = domain.intervals();
  std::size_t k = 0;
  for (const auto& [a, b] : dom) {
    if (b - a <= tol) continue;  // degenerate domain pieces need no cells
    if (k >= merged.size()) return false;
    if (std::fabs(merged[k].first - a) > tol || std::fabs(merged[k].second - b) > tol) return false;
    ++k;
  }
  return k == merged.size();
}

bool is_fine(const TaggedPartition& p, const Gauge& g) {
  for (const auto& c : p.cells) {
    if (p.mode == TagMode::PERRON && !(c.tag >= c.a && c.tag <= c.b)) return false;
    const double d = g(c.tag);
    if (!(c.tag - d < c.a && c.b < c.tag + d)) return false;
  }
  return true;
}

namespace {

void cousin_rec(const Gauge& g, double a, double b, int depth, int depth_cap,
                std::vector<TaggedPartition::Cell>& out) {
  const double mid = 0.5 * (a + b);
  for (double t : {mid, a, b}) {
    const double d = g(t);
    if (t - d < a && b < t + d) {
      out.push_back({a, b, t});
      return;
    }
  }
  if (depth >= depth_cap) {
    std::ostringstream msg;
    msg << "Cousin bisection exceeded depth " << depth_cap << " on [" << a << ", " << b << "]";
    throw CousinDepthError(msg.str());
  }
  cousin_rec(g, a, mid, depth + 1, depth_cap, out);
  cousin_rec(g, mid, b, depth + 1, depth_cap, out);
}

}  // namespace

TaggedPartition cousin_partition_on(const Gauge& g, double a, double b, int depth_cap) {
  TaggedPartition p;
  p.mode = TagMode::PERRON;
  cousin_rec(g, a, b, 0, depth_cap, p.cells);
  return p;
}

TaggedPartition cousin_partition(const Gauge& g, int depth_cap) {
  return cousin_partition_on(g, 0.0, 1.0, depth_cap);
}

TaggedPartition cousin_partition_of(const Gauge& g, const MeasurableSet& e, int depth_cap) {
  TaggedPartition p;
  p.mode = TagMode::PERRON;
  for (const auto& [a, b] : e.intervals()) {
    if (b - a <= 0.0) continue;
    cousin_rec(g, a, b, 0, depth_cap, p.cells);
  }
  return p;
}

TaggedPartition refine(const TaggedPartition& p) {
  TaggedPartition r;
  r.mode = p.mode;
  r.cells.reserve(2 * p.cells.size());
  for (const auto& c : p.cells) {
    const double mid = 0.5 * (c.a + c.b);
    if (p.mode == TagMode::PERRON) {
      r.cells.push_back({c.a, mid, 0.5 * (c.a + mid)});
      r.cells.push_back({mid, c.b, 0.5 * (mid + c.b)});
    } else {
      r.cells.push_back({c.a, mid, c.tag});
      r.cells.push_back({mid, c.b, 0.5 * (mid + c.b)});
    }
  }
  return r;
}

TaggedPartition restrict(const TaggedPartition& p, const MeasurableSet& e) {
  TaggedPartition r;
  r.mode = p.mode;
  for (const auto& c : p.cells) {
    for (const auto& [a, b] : e.intervals()) {
      const double lo = std::max(c.a, a);
      const double hi = std::min(c.b, b);
      if (lo >= hi) continue;
      double tag = c.tag;
      if (p.mode == TagMode::PERRON) tag = std::clamp(tag, lo, hi);
      r.cells.push_back({lo, hi, tag});
    }
  }
  return r;
}

TaggedPartition initial_partition(const MeasurableSet& e, TagMode mode) {
  TaggedPartition p;
  p.mode = mode;
  for (const auto& [a, b] : e.intervals()) {
    if (b - a <= 0.0) continue;
    p.cells.push_back({a, b, 0.5 * (a + b)});
  }
  return p;
}

std::string partition_to_csv(const TaggedPartition& p) {
  std::ostringstream os;
  os << "a,b,tag\n";
  char buf[128];
  for (const auto& c : p.cells) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", c.a, c.b, c.tag);
    os << buf;
  }
  return os.str();
}

}  // namespace gauge
