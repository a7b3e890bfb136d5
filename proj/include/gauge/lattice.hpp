#pragma once

// Finite-dimensional Banach lattice substrate: vectors of R^d under the
// componentwise order, with selectable norms and geometric (o)-sequences.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gauge/errors.hpp"

namespace gauge {

enum class NormKind { L1, L2, SUP };

std::string to_string(NormKind k);
NormKind norm_kind_from_string(const std::string& s);

class LatticeVector {
public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<double> coords);
  LatticeVector(std::initializer_list<double> coords);
  static LatticeVector constant(std::size_t dim, double value);
  static LatticeVector zero(std::size_t dim) { return constant(dim, 0.0); }

  std::size_t dim() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  const std::vector<double>& coords() const { return c_; }

  bool operator==(const LatticeVector& o) const { return c_ == o.c_; }

private:
  std::vector<double> c_;
};

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector operator*(double s, const LatticeVector& a);

// Componentwise lattice operations.
LatticeVector lattice_sup(const LatticeVector& a, const LatticeVector& b);
LatticeVector lattice_inf(const LatticeVector& a, const LatticeVector& b);
LatticeVector modulus(const LatticeVector& a);

// Componentwise partial order.
bool leq(const LatticeVector& a, const LatticeVector& b);

double dot(const LatticeVector& a, const LatticeVector& b);
double norm(const LatticeVector& a, NormKind k);

// true iff |x| <= b componentwise (closed order interval [-b, b]).
bool in_order_interval(const LatticeVector& x, const LatticeVector& b);

// Antitone positive sequence b_n = ratio^n * base, infimum 0.
struct OSequence {
  OSequence(LatticeVector base_vec, double ratio_val);
  LatticeVector at(int n) const;

  LatticeVector base;
  double ratio;
};

}  // namespace gauge
