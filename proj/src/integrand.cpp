#include "gauge/integrand.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gauge {

namespace {

std::string body_text(const ConvexBody& c) {
  std::ostringstream os;
  os << "body[d=" << c.dim() << ",k=" << c.count() << "]";
  return os.str();
}

ConvexBody unit_sym_box(int dim) {
  return ConvexBody::box(LatticeVector::constant(static_cast<std::size_t>(dim), -1.0),
                         LatticeVector::constant(static_cast<std::size_t>(dim), 1.0));
}

}  // namespace

Integrand make_linear_body(const ConvexBody& c) {
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = c.dim();
  f.multi = [c](double t) { return scale(t, c); };
  f.name = "linear_body";
  f.descriptor = "linear_body(" + body_text(c) + ")";
  return f;
}

Integrand make_interval_0t(int dim) {
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = dim;
  const std::size_t d = static_cast<std::size_t>(dim);
  f.multi = [d](double t) {
    if (t < 0.0) throw std::invalid_argument("interval_0t expects t >= 0");
    return ConvexBody::box(LatticeVector::zero(d), LatticeVector::constant(d, t));
  };
  f.name = "interval_0t";
  f.descriptor = "interval_0t(d=" + std::to_string(dim) + ")";
  return f;
}

Integrand make_sym_interval(int dim) {
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = dim;
  const std::size_t d = static_cast<std::size_t>(dim);
  f.multi = [d](double t) {
    const double r = std::fabs(t);
    return ConvexBody::box(LatticeVector::constant(d, -r), LatticeVector::constant(d, r));
  };
  f.name = "sym_interval";
  f.descriptor = "sym_interval(d=" + std::to_string(dim) + ")";
  return f;
}

Integrand make_translate_box(int dim) {
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = dim;
  const std::size_t d = static_cast<std::size_t>(dim);
  f.multi = [d](double t) {
    return ConvexBody::box(LatticeVector::constant(d, t), LatticeVector::constant(d, t + 1.0));
  };
  f.name = "translate_box";
  f.descriptor = "translate_box(d=" + std::to_string(dim) + ")";
  return f;
}

Integrand make_constant(const ConvexBody& c) {
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = c.dim();
  f.multi = [c](double) { return c; };
  f.name = "constant";
  f.descriptor = "constant(" + body_text(c) + ")";
  return f;
}

Integrand make_simple(const SimpleSteps& steps, int dim) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].second.dim() != dim)
      throw std::invalid_argument("simple step body dimension mismatch");
    for (std::size_t j = i + 1; j < steps.size(); ++j) {
      for (const auto& [a1, b1] : steps[i].first.intervals()) {
        for (const auto& [a2, b2] : steps[j].first.intervals()) {
          if (std::min(b1, b2) - std::max(a1, a2) > 1e-12)
            throw std::invalid_argument("simple steps must be pairwise disjoint");
        }
      }
    }
  }
  Integrand f;
  f.kind = Integrand::Kind::MULTI;
  f.dim = dim;
  const LatticeVector origin = LatticeVector::zero(static_cast<std::size_t>(dim));
  f.multi = [steps, origin](double t) {
    for (const auto& [set, body] : steps) {
      for (const auto& [a, b] : set.intervals()) {
        if (t >= a && t <= b) return body;
      }
    }
    return ConvexBody::singleton(origin);
  };
  f.name = "simple";
  f.descriptor = "simple(" + std::to_string(steps.size()) + " steps)";
  return f;
}

Integrand make_single_poly(const std::vector<double>& powers) {
  if (powers.empty()) throw std::invalid_argument("single_poly needs at least one power");
  for (double p : powers) {
    if (p < 0.0) throw std::invalid_argument("single_poly powers must be >= 0");
  }
  Integrand f;
  f.kind = Integrand::Kind::SINGLE;
  f.dim = static_cast<int>(powers.size());
  f.single = [powers](double t) {
    std::vector<double> c(powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) c[j] = std::pow(t, powers[j]);
    return LatticeVector(std::move(c));
  };
  std::ostringstream os;
  os << "single_poly(";
  for (std::size_t j = 0; j < powers.size(); ++j) os << (j ? "," : "") << powers[j];
  os << ")";
  f.name = "single_poly";
  f.descriptor = os.str();
  return f;
}

Integrand as_singleton_multi(const Integrand& f) {
  if (f.kind != Integrand::Kind::SINGLE)
    throw std::invalid_argument("as_singleton_multi expects a single-valued integrand");
  Integrand g;
  g.kind = Integrand::Kind::MULTI;
  g.dim = f.dim;
  auto inner = f.single;
  g.multi = [inner](double t) { return ConvexBody::singleton(inner(t)); };
  g.name = f.name + "_singleton";
  g.descriptor = "singleton(" + f.descriptor + ")";
  return g;
}

std::vector<Integrand> builtin_multi_fixtures(int dim) {
  const std::size_t d = static_cast<std::size_t>(dim);
  SimpleSteps steps;
  steps.emplace_back(MeasurableSet({{0.0, 0.5}}),
                     ConvexBody::box(LatticeVector::zero(d), LatticeVector::constant(d, 1.0)));
  steps.emplace_back(MeasurableSet({{0.5, 1.0}}), unit_sym_box(dim));
  return {
      make_linear_body(unit_sym_box(dim)),
      make_interval_0t(dim),
      make_sym_interval(dim),
      make_translate_box(dim),
      make_constant(unit_sym_box(dim)),
      make_simple(steps, dim),
  };
}

Integrand make_triangle_fixture() {
  const ConvexBody tri = ConvexBody::from_points(2, {0, 0, 1, 0, 0, 1});
  Integrand f = make_linear_body(tri);
  f.name = "linear_triangle";
  f.descriptor = "linear_body(triangle)";
  return f;
}

}  // namespace gauge
