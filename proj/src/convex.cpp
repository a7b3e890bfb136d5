#include "gauge/convex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gauge {

namespace {

double max_abs_coord(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// --- planar hull -----------------------------------------------------------

struct P2 {
  double x, y;
  bool operator<(const P2& o) const { return x < o.x || (x == o.x && y < o.y); }
  bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

double cross(const P2& o, const P2& a, const P2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain; strictly convex output (collinear points dropped), CCW,
// starting at the lexicographic minimum.
std::vector<P2> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<P2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

std::vector<double> flatten2(const std::vector<P2>& pts) {
  std::vector<double> flat;
  flat.reserve(2 * pts.size());
  for (const P2& p : pts) {
    flat.push_back(p.x);
    flat.push_back(p.y);
  }
  return flat;
}

std::vector<P2> to_p2(const std::vector<double>& flat) {
  std::vector<P2> pts(flat.size() / 2);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = {flat[2 * i], flat[2 * i + 1]};
  return pts;
}

// --- nearest point on a small simplex --------------------------------------

struct SimplexResult {
  std::array<double, 3> point{};
  int support[4];
  int support_size = 0;
  double dist2 = std::numeric_limits<double>::infinity();
};

bool solve_gram(std::array<std::array<double, 3>, 3>& g, std::array<double, 3>& b, int n) {
  double gmax = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) gmax = std::max(gmax, std::fabs(g[r][c]));
  }
  const double piv_tol = 1e-13 * std::max(gmax, 1e-300);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(g[r][col]) > std::fabs(g[piv][col])) piv = r;
    }
    if (std::fabs(g[piv][col]) < piv_tol) return false;
    std::swap(g[piv], g[col]);
    std::swap(b[piv], b[col]);
    for (int r = col + 1; r < n; ++r) {
      const double f = g[r][col] / g[col][col];
      for (int c = col; c < n; ++c) g[r][c] -= f * g[col][c];
      b[r] -= f * b[col];
    }
  }
  for (int col = n; col-- > 0;) {
    for (int c = col + 1; c < n; ++c) b[col] -= g[col][c] * b[c];
    b[col] /= g[col][col];
  }
  return true;
}

// Nearest point of conv{w_0..w_{k-1}} to p by enumerating the affine
// subproblems over vertex subsets of size <= dim+1; smaller subsets are
// visited first so they win ties.
SimplexResult nearest_on_simplex(const double* p, int dim, const double* const* w, int k) {
  SimplexResult best;
  for (int size = 1; size <= std::min(k, dim + 1); ++size) {
    for (int mask = 1; mask < (1 << k); ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != size) continue;
      int idx[4];
      int m = 0;
      for (int i = 0; i < k; ++i) {
        if (mask & (1 << i)) idx[m++] = i;
      }
      const double* w0 = w[idx[0]];
      std::array<std::array<double, 3>, 3> g{};
      std::array<double, 3> rhs{};
      for (int i = 1; i < m; ++i) {
        for (int j = 1; j < m; ++j) {
          double s = 0.0;
          for (int c = 0; c < dim; ++c) s += (w[idx[i]][c] - w0[c]) * (w[idx[j]][c] - w0[c]);
          g[i - 1][j - 1] = s;
        }
        double s = 0.0;
        for (int c = 0; c < dim; ++c) s += (w[idx[i]][c] - w0[c]) * (p[c] - w0[c]);
        rhs[i - 1] = s;
      }
      if (m > 1 && !solve_gram(g, rhs, m - 1)) continue;
      double lam[4];
      double lam0 = 1.0;
      bool feasible = true;
      for (int i = 1; i < m; ++i) {
        lam[i] = rhs[i - 1];
        lam0 -= lam[i];
        if (lam[i] < -1e-12) feasible = false;
      }
      lam[0] = lam0;
      if (lam0 < -1e-12) feasible = false;
      if (!feasible) continue;
      std::array<double, 3> y{};
      for (int i = 0; i < m; ++i) {
        for (int c = 0; c < dim; ++c) y[static_cast<std::size_t>(c)] += lam[i] * w[idx[i]][c];
      }
      double d2 = 0.0;
      for (int c = 0; c < dim; ++c) {
        const double t = y[static_cast<std::size_t>(c)] - p[c];
        d2 += t * t;
      }
      if (d2 < best.dist2) {
        best.dist2 = d2;
        best.point = y;
        best.support_size = m;
        for (int i = 0; i < m; ++i) best.support[i] = idx[i];
      }
    }
  }
  return best;
}

// Distance from point p to conv(pts), Gilbert-style simplex refinement.
double distance_to_points(const double* p, int dim, const double* pts, std::size_t n, double tol,
                          int max_iter) {
  double scale = 1.0;
  for (int j = 0; j < dim; ++j) scale = std::max(scale, std::fabs(p[j]));
  for (std::size_t i = 0; i < n * static_cast<std::size_t>(dim); ++i)
    scale = std::max(scale, std::fabs(pts[i]));

  std::size_t active[8];
  int na = 1;
  active[0] = 0;
  double prev_gn = std::numeric_limits<double>::infinity();
  int stagnant = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    const double* w[8];
    for (int i = 0; i < na; ++i) w[i] = pts + active[i] * static_cast<std::size_t>(dim);
    SimplexResult r = nearest_on_simplex(p, dim, w, na);
    std::size_t reduced[8];
    for (int i = 0; i < r.support_size; ++i) reduced[i] = active[r.support[i]];
    na = r.support_size;
    std::copy(reduced, reduced + na, active);

    double g[3], gn2 = 0.0;
    for (int j = 0; j < dim; ++j) {
      g[j] = p[j] - r.point[static_cast<std::size_t>(j)];
      gn2 += g[j] * g[j];
    }
    const double gn = std::sqrt(gn2);
    if (gn <= 1e-14 * scale) return 0.0;
    // rounding stalls mean the simplex cannot improve further
    if (gn >= prev_gn - 1e-15 * scale) {
      if (++stagnant > 4) return std::min(gn, prev_gn);
    } else {
      stagnant = 0;
    }
    prev_gn = std::min(prev_gn, gn);

    double bestdot = -std::numeric_limits<double>::infinity();
    std::size_t bi = 0;
    const double* v = pts;
    for (std::size_t i = 0; i < n; ++i, v += dim) {
      double s = 0.0;
      for (int j = 0; j < dim; ++j) s += g[j] * v[j];
      if (s > bestdot) {
        bestdot = s;
        bi = i;
      }
    }
    double sx = 0.0;
    for (int j = 0; j < dim; ++j) sx += g[j] * r.point[static_cast<std::size_t>(j)];
    const double gap = (bestdot - sx) / gn;
    if (gap <= tol) return gn;
    // no progress if the chosen vertex already sits in the active simplex
    bool present = false;
    const double* cand = pts + bi * static_cast<std::size_t>(dim);
    for (int i = 0; i < na && !present; ++i) {
      bool same = true;
      for (int j = 0; j < dim; ++j) same = same && w[i][j] == cand[j];
      present = same;
    }
    if (present) return gn;
    if (na >= 7) return gn;  // defensive; cannot happen for dim <= 3
    active[na++] = bi;
  }
  throw ProjectionError("hull projection did not converge within iteration cap");
}

std::vector<double> normalize1(const std::vector<double>& flat) {
  double lo = flat[0], hi = flat[0];
  for (double x : flat) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo == hi) return {lo};
  return {lo, hi};
}

std::vector<double> normalize2(const std::vector<double>& flat) {
  return flatten2(hull2d(to_p2(flat)));
}

// d=3: lexicographic dedupe, then drop every vertex lying within tolerance
// of the hull of the remaining ones; removing an interior point does not
// change the hull, so a single pass suffices.
std::vector<double> normalize_nd(int dim, const std::vector<double>& flat) {
  const std::size_t d = static_cast<std::size_t>(dim);
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i + d <= flat.size(); i += d)
    pts.emplace_back(flat.begin() + static_cast<long>(i), flat.begin() + static_cast<long>(i + d));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const double tol = 1e-12 * std::max(1.0, max_abs_coord(flat));
  std::vector<double> rest;
  for (std::size_t i = 0; i < pts.size() && pts.size() > 1;) {
    rest.clear();
    rest.reserve((pts.size() - 1) * d);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k != i) rest.insert(rest.end(), pts[k].begin(), pts[k].end());
    }
    const double dist =
        distance_to_points(pts[i].data(), dim, rest.data(), pts.size() - 1, tol / 8, 10000);
    if (dist <= tol) {
      pts.erase(pts.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  std::vector<double> out;
  out.reserve(pts.size() * d);
  for (const auto& p : pts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

// --- Direction --------------------------------------------------------------

Direction::Direction(LatticeVector u) : u_(std::move(u)) {
  const double n = norm(u_, NormKind::L2);
  if (!(n > 0.0)) throw std::invalid_argument("direction must be nonzero");
  if (std::fabs(n - 1.0) > 1e-12) u_ = (1.0 / n) * u_;
}

// --- ConvexBody construction --------------------------------------------------

ConvexBody::ConvexBody(int dim, std::vector<double> flat, bool /*already_normal*/)
    : v_(std::move(flat)), dim_(dim) {
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("body dimension must be in 1..3");
  if (v_.empty() || v_.size() % static_cast<std::size_t>(dim_) != 0)
    throw std::invalid_argument("body vertex list must be a nonempty multiple of dim");
  for (double x : v_) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite body vertex");
  }
}

LatticeVector ConvexBody::vertex_vec(std::size_t i) const {
  return LatticeVector(std::vector<double>(vertex(i), vertex(i) + dim_));
}

ConvexBody ConvexBody::from_points(int dim, std::vector<double> flat) {
  ConvexBody raw(dim, std::move(flat), false);
  if (dim == 1) return ConvexBody(1, normalize1(raw.v_), true);
  if (dim == 2) return ConvexBody(2, normalize2(raw.v_), true);
  return ConvexBody(dim, normalize_nd(dim, raw.v_), true);
}

ConvexBody ConvexBody::from_vertices(const std::vector<LatticeVector>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("body needs at least one vertex");
  const int dim = static_cast<int>(vertices.front().dim());
  std::vector<double> flat;
  flat.reserve(vertices.size() * static_cast<std::size_t>(dim));
  for (const auto& v : vertices) {
    if (static_cast<int>(v.dim()) != dim) throw std::invalid_argument("mixed vertex dimensions");
    flat.insert(flat.end(), v.coords().begin(), v.coords().end());
  }
  return from_points(dim, std::move(flat));
}

ConvexBody ConvexBody::singleton(const LatticeVector& p) {
  return ConvexBody(static_cast<int>(p.dim()), p.coords(), true);
}

ConvexBody ConvexBody::interval(double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  return from_points(1, {lo, hi});
}

ConvexBody ConvexBody::box(const LatticeVector& lo, const LatticeVector& hi) {
  const std::size_t d = lo.dim();
  if (hi.dim() != d) throw std::invalid_argument("box bounds dimension mismatch");
  if (!leq(lo, hi)) throw std::invalid_argument("box lower bound must be <= upper bound");
  std::vector<double> flat;
  const std::size_t corners = std::size_t{1} << d;
  flat.reserve(corners * d);
  for (std::size_t mask = 0; mask < corners; ++mask) {
    for (std::size_t j = 0; j < d; ++j) flat.push_back((mask >> j) & 1 ? hi[j] : lo[j]);
  }
  return from_points(static_cast<int>(d), std::move(flat));
}

ConvexBody ConvexBody::ball_poly(int dim, int n) {
  if (dim == 1) return interval(-1.0, 1.0);
  if (n < 3) throw std::invalid_argument("ball_poly needs n >= 3");
  if (dim == 2) {
    std::vector<double> flat;
    flat.reserve(2 * static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const double th = 2.0 * std::numbers::pi * k / n;
      flat.push_back(std::cos(th));
      flat.push_back(std::sin(th));
    }
    return from_points(2, std::move(flat));
  }
  if (dim == 3) {
    std::vector<double> flat;
    for (int j = 0; j < 3; ++j) {
      for (double s : {1.0, -1.0}) {
        double p[3] = {0, 0, 0};
        p[j] = s;
        flat.insert(flat.end(), p, p + 3);
      }
    }
    const int pairs = std::max(1, (n - 6) / 2);
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < pairs; ++i) {
      const double z = (i + 0.5) / (pairs + 0.5);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double th = ga * (i + 1);
      const double p[3] = {r * std::cos(th), r * std::sin(th), z};
      flat.insert(flat.end(), p, p + 3);
      for (double c : p) flat.push_back(-c);
    }
    return from_points(3, std::move(flat));
  }
  throw std::invalid_argument("ball_poly supports d <= 3");
}

ConvexBody ConvexBody::norm_ball(int dim, NormKind kind, int l2_facets) {
  switch (kind) {
    case NormKind::SUP:
      return box(LatticeVector::constant(static_cast<std::size_t>(dim), -1.0),
                 LatticeVector::constant(static_cast<std::size_t>(dim), 1.0));
    case NormKind::L1: {
      std::vector<double> flat;
      for (int j = 0; j < dim; ++j) {
        for (double s : {1.0, -1.0}) {
          std::vector<double> p(static_cast<std::size_t>(dim), 0.0);
          p[static_cast<std::size_t>(j)] = s;
          flat.insert(flat.end(), p.begin(), p.end());
        }
      }
      return from_points(dim, std::move(flat));
    }
    case NormKind::L2:
      return ball_poly(dim, l2_facets);
  }
  throw std::invalid_argument("unknown norm kind");
}

// --- support -------------------------------------------------------------------

double support(const ConvexBody& c, const double* u) {
  const int d = c.dim();
  const std::size_t n = c.count();
  double best = -std::numeric_limits<double>::infinity();
  const double* v = c.flat().data();
  for (std::size_t i = 0; i < n; ++i, v += d) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += u[j] * v[j];
    best = std::max(best, s);
  }
  return best;
}

double support(const ConvexBody& c, const Direction& u) {
  if (static_cast<int>(u.dim()) != c.dim())
    throw std::invalid_argument("direction/body dimension mismatch");
  return support(c, u.vec().coords().data());
}

std::size_t support_argmax(const ConvexBody& c, const double* u, double tie_tol) {
  const int d = c.dim();
  const std::size_t n = c.count();
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += u[j] * c.vertex(i)[j];
    best = std::max(best, s);
  }
  const double tol = tie_tol * std::max(1.0, std::fabs(best));
  std::size_t pick = n;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += u[j] * c.vertex(i)[j];
    if (s < best - tol) continue;
    if (pick == n) {
      pick = i;
      continue;
    }
    const double* a = c.vertex(i);
    const double* b = c.vertex(pick);
    for (int j = 0; j < d; ++j) {
      if (a[j] != b[j]) {
        if (a[j] > b[j]) pick = i;
        break;
      }
    }
  }
  return pick;
}

// --- Minkowski arithmetic --------------------------------------------------------

namespace {

// Edge-merge Minkowski sum of two canonical CCW polygons (counts >= 2); a
// two-vertex "ring" (segment) walks its edge and its reverse. Rings start
// at the bottommost-leftmost vertex so edge angles ascend through [0,2pi);
// exactly parallel edges are combined.
std::vector<double> mink2_merge(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t na = a.size() / 2, nb = b.size() / 2;
  auto bottom = [](const std::vector<double>& f, std::size_t n) {
    std::size_t s = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (f[2 * i + 1] < f[2 * s + 1] ||
          (f[2 * i + 1] == f[2 * s + 1] && f[2 * i] < f[2 * s])) {
        s = i;
      }
    }
    return s;
  };
  const std::size_t sa = bottom(a, na), sb = bottom(b, nb);
  auto edge = [](const std::vector<double>& f, std::size_t n, std::size_t s, std::size_t i,
                 double* e) {
    const std::size_t p = (s + i) % n, q = (s + i + 1) % n;
    e[0] = f[2 * q] - f[2 * p];
    e[1] = f[2 * q + 1] - f[2 * p + 1];
  };
  auto half = [](const double* e) { return (e[1] > 0.0 || (e[1] == 0.0 && e[0] > 0.0)) ? 0 : 1; };

  std::vector<double> out;
  out.reserve(2 * (na + nb));
  double cx = a[2 * sa] + b[2 * sb];
  double cy = a[2 * sa + 1] + b[2 * sb + 1];
  out.push_back(cx);
  out.push_back(cy);
  std::size_t i = 0, j = 0;
  double ea[2], eb[2];
  while (i < na || j < nb) {
    int take;
    if (i == na) {
      take = 1;
    } else if (j == nb) {
      take = 0;
    } else {
      edge(a, na, sa, i, ea);
      edge(b, nb, sb, j, eb);
      const int ha = half(ea), hb = half(eb);
      if (ha != hb) {
        take = ha < hb ? 0 : 1;
      } else {
        const double cr = ea[0] * eb[1] - ea[1] * eb[0];
        // relative parallelism test: combine edges whose angle differs only
        // by rounding, so fixed-direction accumulations stay minimal
        const double par_tol =
            1e-15 * std::sqrt((ea[0] * ea[0] + ea[1] * ea[1]) * (eb[0] * eb[0] + eb[1] * eb[1]));
        const bool same_dir = ea[0] * eb[0] + ea[1] * eb[1] > 0.0;
        if (std::fabs(cr) <= par_tol && same_dir) {
          take = 2;
        } else {
          take = cr > 0.0 ? 0 : (cr < 0.0 ? 1 : 2);
        }
      }
    }
    if (take != 1) {
      edge(a, na, sa, i, ea);
      cx += ea[0];
      cy += ea[1];
      ++i;
    }
    if (take != 0) {
      edge(b, nb, sb, j, eb);
      cx += eb[0];
      cy += eb[1];
      ++j;
    }
    out.push_back(cx);
    out.push_back(cy);
  }
  out.resize(out.size() - 2);  // the walk closes on the start vertex

  const std::size_t n = out.size() / 2;
  std::vector<double> pruned;
  pruned.reserve(out.size());
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = (k + n - 1) % n, q = (k + 1) % n;
    const P2 o{out[2 * p], out[2 * p + 1]};
    const P2 m{out[2 * k], out[2 * k + 1]};
    const P2 r{out[2 * q], out[2 * q + 1]};
    const double lin = std::sqrt(((m.x - o.x) * (m.x - o.x) + (m.y - o.y) * (m.y - o.y)) *
                                 ((r.x - m.x) * (r.x - m.x) + (r.y - m.y) * (r.y - m.y)));
    if (cross(o, m, r) > 1e-15 * lin) {
      pruned.push_back(m.x);
      pruned.push_back(m.y);
    }
  }
  if (pruned.size() < 6) {
    // collinear sum: reduce to the extreme points of the walk
    P2 lo{out[0], out[1]}, hi = lo;
    for (std::size_t k = 1; k < n; ++k) {
      const P2 q{out[2 * k], out[2 * k + 1]};
      if (q < lo) lo = q;
      if (hi < q) hi = q;
    }
    if (lo == hi) return {lo.x, lo.y};
    return {lo.x, lo.y, hi.x, hi.y};
  }
  const std::size_t np = pruned.size() / 2;
  std::size_t s = 0;
  for (std::size_t k = 1; k < np; ++k) {
    if (pruned[2 * k] < pruned[2 * s] ||
        (pruned[2 * k] == pruned[2 * s] && pruned[2 * k + 1] < pruned[2 * s + 1])) {
      s = k;
    }
  }
  std::rotate(pruned.begin(), pruned.begin() + static_cast<long>(2 * s), pruned.end());
  return pruned;
}

}  // namespace

ConvexBody minkowski_sum(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Minkowski sum dimension mismatch");
  const int d = a.dim();
  if (a.count() == 1) return translate(b, a.vertex_vec(0));
  if (b.count() == 1) return translate(a, b.vertex_vec(0));
  if (d == 1) {
    const double lo = a.flat().front() + b.flat().front();
    const double hi = a.flat().back() + b.flat().back();
    return lo == hi ? ConvexBody(1, {lo}, true) : ConvexBody(1, {lo, hi}, true);
  }
  if (d == 2) return ConvexBody(2, mink2_merge(a.flat(), b.flat()), true);
  std::vector<double> flat;
  flat.reserve(a.count() * b.count() * static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < a.count(); ++i) {
    for (std::size_t j = 0; j < b.count(); ++j) {
      for (int c = 0; c < d; ++c) flat.push_back(a.vertex(i)[c] + b.vertex(j)[c]);
    }
  }
  return ConvexBody::from_points(d, std::move(flat));
}

ConvexBody scale(double lambda, const ConvexBody& a) {
  if (lambda == 0.0)
    return ConvexBody::singleton(LatticeVector::zero(static_cast<std::size_t>(a.dim())));
  std::vector<double> flat(a.flat());
  for (double& x : flat) x *= lambda;
  // positive scaling preserves hull structure and canonical order
  if (lambda > 0.0) return ConvexBody(a.dim(), std::move(flat), true);
  return ConvexBody::from_points(a.dim(), std::move(flat));
}

ConvexBody translate(const ConvexBody& a, const LatticeVector& v) {
  if (static_cast<int>(v.dim()) != a.dim())
    throw std::invalid_argument("translation dimension mismatch");
  std::vector<double> flat(a.flat());
  const std::size_t d = static_cast<std::size_t>(a.dim());
  for (std::size_t i = 0; i < flat.size(); ++i) flat[i] += v[i % d];
  // translation can perturb canonical vertex ordering through rounding only
  // in ties; renormalize in d=2 is cheap relative to its uses, but the
  // ordering is preserved exactly except for exact-tie reshuffles, which do
  // not occur for strictly convex vertex lists
  return ConvexBody(a.dim(), std::move(flat), true);
}

ConvexBody hull_union(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("hull union dimension mismatch");
  std::vector<double> flat(a.flat());
  flat.insert(flat.end(), b.flat().begin(), b.flat().end());
  return ConvexBody::from_points(a.dim(), std::move(flat));
}

// --- distance, order bounds, containment -------------------------------------------

double distance_to_body(const LatticeVector& p, const ConvexBody& c, double tol, int max_iter) {
  if (static_cast<int>(p.dim()) != c.dim())
    throw std::invalid_argument("point/body dimension mismatch");
  return distance_to_points(p.coords().data(), c.dim(), c.flat().data(), c.count(), tol, max_iter);
}

double hausdorff(const ConvexBody& a, const ConvexBody& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Hausdorff dimension mismatch");
  if (!(tol > 0.0)) throw std::invalid_argument("Hausdorff tolerance must be positive");
  double h = 0.0;
  for (std::size_t i = 0; i < a.count(); ++i)
    h = std::max(h, distance_to_body(a.vertex_vec(i), b, tol));
  for (std::size_t i = 0; i < b.count(); ++i)
    h = std::max(h, distance_to_body(b.vertex_vec(i), a, tol));
  return h;
}

LatticeVector order_sup(const ConvexBody& c) {
  const std::size_t d = static_cast<std::size_t>(c.dim());
  std::vector<double> r(c.vertex(0), c.vertex(0) + d);
  for (std::size_t i = 1; i < c.count(); ++i) {
    for (std::size_t j = 0; j < d; ++j) r[j] = std::max(r[j], c.vertex(i)[j]);
  }
  return LatticeVector(std::move(r));
}

LatticeVector order_inf(const ConvexBody& c) {
  const std::size_t d = static_cast<std::size_t>(c.dim());
  std::vector<double> r(c.vertex(0), c.vertex(0) + d);
  for (std::size_t i = 1; i < c.count(); ++i) {
    for (std::size_t j = 0; j < d; ++j) r[j] = std::min(r[j], c.vertex(i)[j]);
  }
  return LatticeVector(std::move(r));
}

LatticeVector abs_bound(const ConvexBody& c) {
  return lattice_sup(order_sup(c), -order_inf(c));
}

ConvexBody order_neighborhood(const ConvexBody& c, const LatticeVector& b) {
  if (static_cast<int>(b.dim()) != c.dim())
    throw std::invalid_argument("order neighborhood dimension mismatch");
  for (std::size_t j = 0; j < b.dim(); ++j) {
    if (b[j] < 0.0) throw std::invalid_argument("order neighborhood radius must be >= 0");
  }
  return minkowski_sum(c, ConvexBody::box(-b, b));
}

bool contains(const ConvexBody& a, const ConvexBody& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("containment dimension mismatch");
  if (tol < 0.0) throw std::invalid_argument("containment tolerance must be >= 0");
  for (std::size_t i = 0; i < b.count(); ++i) {
    if (distance_to_body(b.vertex_vec(i), a, std::min(1e-13, tol / 4 + 1e-16)) > tol) return false;
  }
  return true;
}

}  // namespace gauge
