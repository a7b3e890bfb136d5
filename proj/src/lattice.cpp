#include "gauge/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace gauge {

std::string to_string(NormKind k) {
  switch (k) {
    case NormKind::L1: return "L1";
    case NormKind::L2: return "L2";
    case NormKind::SUP: return "SUP";
  }
  return "SUP";
}

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "L1" || s == "l1") return NormKind::L1;
  if (s == "L2" || s == "l2") return NormKind::L2;
  if (s == "SUP" || s == "sup" || s == "Linf" || s == "LINF") return NormKind::SUP;
  throw ConfigError("unknown norm kind: " + s);
}

namespace {
void require_finite(const std::vector<double>& c) {
  for (double x : c) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite coordinate in lattice vector");
  }
}
void require_same_dim(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lattice vector dimension mismatch");
}
}  // namespace

LatticeVector::LatticeVector(std::vector<double> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw std::invalid_argument("lattice vector must have dimension >= 1");
  require_finite(c_);
}

LatticeVector::LatticeVector(std::initializer_list<double> coords)
    : LatticeVector(std::vector<double>(coords)) {}

LatticeVector LatticeVector::constant(std::size_t dim, double value) {
  return LatticeVector(std::vector<double>(dim, value));
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
  return LatticeVector(std::move(r));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
  return LatticeVector(std::move(r));
}

LatticeVector operator-(const LatticeVector& a) {
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
  return LatticeVector(std::move(r));
}

LatticeVector operator*(double s, const LatticeVector& a) {
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
  return LatticeVector(std::move(r));
}

LatticeVector lattice_sup(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
  return LatticeVector(std::move(r));
}

LatticeVector lattice_inf(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::min(a[i], b[i]);
  return LatticeVector(std::move(r));
}

LatticeVector modulus(const LatticeVector& a) {
  std::vector<double> r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::fabs(a[i]);
  return LatticeVector(std::move(r));
}

bool leq(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(a[i] <= b[i])) return false;
  }
  return true;
}

double dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_dim(a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

double norm(const LatticeVector& a, NormKind k) {
  double s = 0.0;
  switch (k) {
    case NormKind::L1:
      for (std::size_t i = 0; i < a.dim(); ++i) s += std::fabs(a[i]);
      return s;
    case NormKind::L2:
      for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * a[i];
      return std::sqrt(s);
    case NormKind::SUP:
      for (std::size_t i = 0; i < a.dim(); ++i) s = std::max(s, std::fabs(a[i]));
      return s;
  }
  return s;
}

bool in_order_interval(const LatticeVector& x, const LatticeVector& b) {
  require_same_dim(x, b);
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (b[i] < 0.0) throw std::invalid_argument("order interval radius must be nonnegative");
  }
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (std::fabs(x[i]) > b[i]) return false;
  }
  return true;
}

OSequence::OSequence(LatticeVector base_vec, double ratio_val)
    : base(std::move(base_vec)), ratio(ratio_val) {
  for (std::size_t i = 0; i < base.dim(); ++i) {
    if (!(base[i] > 0.0)) throw std::invalid_argument("(o)-sequence base must be strictly positive");
  }
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("(o)-sequence ratio must lie in (0,1)");
}

LatticeVector OSequence::at(int n) const {
  if (n < 0) throw std::invalid_argument("(o)-sequence index must be >= 0");
  return std::pow(ratio, n) * base;
}

}  // namespace gauge
