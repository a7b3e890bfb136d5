#include "gauge/radstrom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gauge/errors.hpp"

namespace gauge {

namespace {

constexpr double kGoldenAngle = 2.399963229728653;  // pi * (3 - sqrt 5)

std::vector<double> make_dirs(int dim, int m) {
  std::vector<double> dirs;
  if (dim == 1) {
    if (m != 2) throw std::invalid_argument("d=1 grid is exactly {+1,-1}");
    dirs = {1.0, -1.0};
    return dirs;
  }
  if (dim == 2) {
    if (m < 4 || m % 4 != 0) throw std::invalid_argument("d=2 grid size must be a multiple of 4");
    dirs.reserve(2 * static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
      const double th = 2.0 * std::numbers::pi * j / m;
      dirs.push_back(std::cos(th));
      dirs.push_back(std::sin(th));
    }
    // snap the axis directions exactly
    auto snap = [&](int j, double x, double y) {
      dirs[2 * static_cast<std::size_t>(j)] = x;
      dirs[2 * static_cast<std::size_t>(j) + 1] = y;
    };
    snap(0, 1, 0);
    snap(m / 4, 0, 1);
    snap(m / 2, -1, 0);
    snap(3 * m / 4, 0, -1);
    return dirs;
  }
  if (dim == 3) {
    if (m < 8 || m % 2 != 0) throw std::invalid_argument("d=3 grid size must be even and >= 8");
    dirs.reserve(3 * static_cast<std::size_t>(m));
    for (int j = 0; j < 3; ++j) {
      for (double s : {1.0, -1.0}) {
        double p[3] = {0, 0, 0};
        p[j] = s;
        dirs.insert(dirs.end(), p, p + 3);
      }
    }
    const int pairs = (m - 6) / 2;
    for (int i = 0; i < pairs; ++i) {
      // open upper hemisphere, poles and equator excluded
      const double z = (i + 0.5) / (pairs + 0.5);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double th = kGoldenAngle * (i + 1);
      const double p[3] = {r * std::cos(th), r * std::sin(th), z};
      dirs.insert(dirs.end(), p, p + 3);
      for (double c : p) dirs.push_back(-c);
    }
    return dirs;
  }
  throw std::invalid_argument("direction grids support d in 1..3");
}

}  // namespace

std::shared_ptr<const DirectionGrid> DirectionGrid::make(int dim, int m) {
  if (m == 0) m = default_size(dim);
  return std::shared_ptr<const DirectionGrid>(new DirectionGrid(dim, make_dirs(dim, m)));
}

int DirectionGrid::default_size(int dim) {
  switch (dim) {
    case 1: return 2;
    case 2: return 64;
    case 3: return 242;
    default: throw std::invalid_argument("direction grids support d in 1..3");
  }
}

Direction DirectionGrid::direction_vec(std::size_t j) const {
  return Direction(LatticeVector(
      std::vector<double>(direction(j), direction(j) + dim_)));
}

std::size_t DirectionGrid::antipode(std::size_t j) const {
  const std::size_t m = size();
  if (dim_ == 2) return (j + m / 2) % m;
  return j ^ std::size_t{1};  // d=1 and the paired d=3 layout
}

bool DirectionGrid::is_nonnegative(std::size_t j) const {
  const double* u = direction(j);
  for (int c = 0; c < dim_; ++c) {
    if (u[c] < 0.0) return false;
  }
  return true;
}

SupportVector embed(const ConvexBody& c, const GridPtr& grid) {
  if (!grid) throw std::invalid_argument("null direction grid");
  if (grid->dim() != c.dim()) throw std::invalid_argument("grid/body dimension mismatch");
  SupportVector s;
  s.grid = grid;
  s.values.resize(grid->size());
  for (std::size_t j = 0; j < grid->size(); ++j) s.values[j] = support(c, grid->direction(j));
  return s;
}

namespace {
void require_same_grid(const SupportVector& a, const SupportVector& b) {
  if (a.grid == b.grid) return;
  if (a.grid && b.grid && *a.grid == *b.grid) return;
  throw std::invalid_argument("support vectors live on different grids");
}
}  // namespace

SupportVector sv_add(const SupportVector& a, const SupportVector& b) {
  require_same_grid(a, b);
  SupportVector r = a;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] += b.values[j];
  return r;
}

SupportVector sv_scale(double lambda, const SupportVector& a) {
  if (lambda < 0.0) throw std::invalid_argument("support vectors scale by lambda >= 0 only");
  SupportVector r = a;
  for (double& v : r.values) v *= lambda;
  return r;
}

SupportVector sv_max(const SupportVector& a, const SupportVector& b) {
  require_same_grid(a, b);
  SupportVector r = a;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] = std::max(r.values[j], b.values[j]);
  return r;
}

SupportVector sv_min(const SupportVector& a, const SupportVector& b) {
  require_same_grid(a, b);
  SupportVector r = a;
  for (std::size_t j = 0; j < r.values.size(); ++j) r.values[j] = std::min(r.values[j], b.values[j]);
  return r;
}

double sup_distance(const SupportVector& a, const SupportVector& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t j = 0; j < a.values.size(); ++j)
    m = std::max(m, std::fabs(a.values[j] - b.values[j]));
  return m;
}

std::vector<double> box_support(const DirectionGrid& grid, const LatticeVector& b) {
  if (static_cast<int>(b.dim()) != grid.dim())
    throw std::invalid_argument("box radius dimension mismatch");
  std::vector<double> h(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double* u = grid.direction(j);
    double s = 0.0;
    for (std::size_t c = 0; c < b.dim(); ++c) s += std::fabs(u[c]) * b[c];
    h[j] = s;
  }
  return h;
}

namespace {

void check_antipodal_consistency(const SupportVector& s, double tol) {
  const DirectionGrid& g = *s.grid;
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (s.values[j] + s.values[g.antipode(j)] < -tol)
      throw InconsistentSupport("support values describe an empty body (antipodal gap)");
  }
}

ConvexBody reconstruct1(const SupportVector& s) {
  // grid layout is {+1, -1}
  const double hi = s.values[0];
  const double lo = -s.values[1];
  if (lo > hi) return ConvexBody::singleton(LatticeVector{(lo + hi) / 2});
  return ConvexBody::interval(lo, hi);
}

ConvexBody reconstruct2(const SupportVector& s) {
  const DirectionGrid& g = *s.grid;
  const std::size_t m = g.size();
  double scale = 1.0;
  for (double v : s.values) scale = std::max(scale, std::fabs(v));
  const double ctol = 1e-9 * scale;

  std::vector<double> cand;
  for (std::size_t i = 0; i < m; ++i) {
    const double* ui = g.direction(i);
    for (std::size_t j = i + 1; j < m; ++j) {
      const double* uj = g.direction(j);
      const double det = ui[0] * uj[1] - ui[1] * uj[0];
      if (std::fabs(det) < 1e-12) continue;
      const double x = (s.values[i] * uj[1] - s.values[j] * ui[1]) / det;
      const double y = (s.values[j] * ui[0] - s.values[i] * uj[0]) / det;
      bool ok = true;
      for (std::size_t k = 0; k < m && ok; ++k) {
        const double* uk = g.direction(k);
        ok = uk[0] * x + uk[1] * y <= s.values[k] + ctol;
      }
      if (ok) {
        cand.push_back(x);
        cand.push_back(y);
      }
    }
  }
  if (cand.empty()) throw InconsistentSupport("support values describe an empty body (d=2)");
  return ConvexBody::from_points(2, std::move(cand));
}

ConvexBody reconstruct3(const SupportVector& s) {
  const DirectionGrid& g = *s.grid;
  const std::size_t m = g.size();
  double scale = 1.0;
  for (double v : s.values) scale = std::max(scale, std::fabs(v));
  const double ctol = 1e-9 * scale;

  // axis box start: +-e_j sit at indices 2j, 2j+1
  std::vector<double> lo(3), hi(3);
  for (std::size_t j = 0; j < 3; ++j) {
    hi[j] = s.values[2 * j];
    lo[j] = -s.values[2 * j + 1];
    if (lo[j] > hi[j]) {
      if (lo[j] > hi[j] + ctol)
        throw InconsistentSupport("support values describe an empty body (axis gap)");
      lo[j] = hi[j] = (lo[j] + hi[j]) / 2;
    }
  }
  std::vector<double> pts;
  for (int mask = 0; mask < 8; ++mask) {
    for (int j = 0; j < 3; ++j)
      pts.push_back((mask >> j) & 1 ? hi[static_cast<std::size_t>(j)] : lo[static_cast<std::size_t>(j)]);
  }

  std::vector<double> kept, cut, cand2, next;
  for (std::size_t j = 6; j < m; ++j) {
    const double* u = g.direction(j);
    const double sj = s.values[j];
    kept.clear();
    cut.clear();
    for (std::size_t i = 0; i + 3 <= pts.size(); i += 3) {
      const double dp = u[0] * pts[i] + u[1] * pts[i + 1] + u[2] * pts[i + 2];
      auto& dst = dp <= sj + ctol ? kept : cut;
      dst.insert(dst.end(), pts.begin() + static_cast<long>(i), pts.begin() + static_cast<long>(i + 3));
    }
    if (cut.empty()) continue;
    if (kept.empty()) throw InconsistentSupport("support values describe an empty body (d=3)");

    // in-plane frame for the clip plane
    double e1[3], e2[3];
    {
      const double ax = std::fabs(u[0]), ay = std::fabs(u[1]), az = std::fabs(u[2]);
      double t[3] = {0, 0, 0};
      t[ax <= ay && ax <= az ? 0 : (ay <= az ? 1 : 2)] = 1.0;
      // e1 = normalize(t - <t,u> u), e2 = u x e1
      const double tu = t[0] * u[0] + t[1] * u[1] + t[2] * u[2];
      for (int c = 0; c < 3; ++c) e1[c] = t[c] - tu * u[c];
      const double n1 = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
      for (double& c : e1) c /= n1;
      e2[0] = u[1] * e1[2] - u[2] * e1[1];
      e2[1] = u[2] * e1[0] - u[0] * e1[2];
      e2[2] = u[0] * e1[1] - u[1] * e1[0];
    }

    // new face vertices: extreme points of all kept-cut segment crossings
    cand2.clear();
    std::vector<double> cand3;
    for (std::size_t a = 0; a + 3 <= kept.size(); a += 3) {
      const double da = sj - (u[0] * kept[a] + u[1] * kept[a + 1] + u[2] * kept[a + 2]);
      for (std::size_t b = 0; b + 3 <= cut.size(); b += 3) {
        const double db = (u[0] * cut[b] + u[1] * cut[b + 1] + u[2] * cut[b + 2]) - sj;
        const double t = da + db > 0 ? da / (da + db) : 0.0;
        double p[3];
        for (std::size_t c = 0; c < 3; ++c)
          p[c] = kept[a + c] + t * (cut[b + c] - kept[a + c]);
        cand3.insert(cand3.end(), p, p + 3);
        cand2.push_back(p[0] * e1[0] + p[1] * e1[1] + p[2] * e1[2]);
        cand2.push_back(p[0] * e2[0] + p[1] * e2[1] + p[2] * e2[2]);
      }
    }
    // planar hull indices via matching coordinates
    ConvexBody face = ConvexBody::from_points(2, cand2);
    next = kept;
    for (std::size_t fi = 0; fi < face.count(); ++fi) {
      const double fx = face.vertex(fi)[0], fy = face.vertex(fi)[1];
      // recover the matching 3-D candidate (first within rounding)
      for (std::size_t b = 0; b + 3 <= cand3.size(); b += 3) {
        const double px = cand3[b] * e1[0] + cand3[b + 1] * e1[1] + cand3[b + 2] * e1[2];
        const double py = cand3[b] * e2[0] + cand3[b + 1] * e2[1] + cand3[b + 2] * e2[2];
        if (px == fx && py == fy) {
          next.insert(next.end(), cand3.begin() + static_cast<long>(b),
                      cand3.begin() + static_cast<long>(b + 3));
          break;
        }
      }
    }
    pts = next;
  }
  return ConvexBody::from_points(3, std::move(pts));
}

}  // namespace

ConvexBody reconstruct(const SupportVector& s) {
  if (!s.grid) throw std::invalid_argument("support vector without grid");
  if (s.values.size() != s.grid->size())
    throw std::invalid_argument("support vector length does not match grid");
  double scale = 1.0;
  for (double v : s.values) scale = std::max(scale, std::fabs(v));
  check_antipodal_consistency(s, 1e-9 * scale);
  switch (s.grid->dim()) {
    case 1: return reconstruct1(s);
    case 2: return reconstruct2(s);
    default: return reconstruct3(s);
  }
}

double reconstruction_error_bound(const DirectionGrid& grid, double circumradius) {
  if (grid.dim() == 1) return 0.0;
  double theta;  // covering radius of the grid on the sphere
  if (grid.dim() == 2) {
    theta = std::numbers::pi / static_cast<double>(grid.size());
  } else {
    // measured against a deterministic probe set, with a safety margin
    const int probes = 4096;
    double worst = 1.0;
    for (int i = 0; i < probes; ++i) {
      const double z = 2.0 * (i + 0.5) / probes - 1.0;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double th = kGoldenAngle * i;
      const double p[3] = {r * std::cos(th), r * std::sin(th), z};
      double best = -1.0;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double* u = grid.direction(j);
        best = std::max(best, p[0] * u[0] + p[1] * u[1] + p[2] * u[2]);
      }
      worst = std::min(worst, best);
    }
    theta = std::acos(std::clamp(worst, -1.0, 1.0)) * 1.5 + 0.01;
  }
  // A separating direction missed by angle <= theta lets a point of the
  // intersection stick out by at most 2 R tan(theta) / (1 - 2 sin(theta/2)).
  const double denom = 1.0 - 2.0 * std::sin(theta / 2.0);
  if (denom <= 0.1) return 20.0 * circumradius * std::tan(theta);
  return 2.0 * circumradius * std::tan(theta) / denom;
}

}  // namespace gauge
