#include "gauge/config.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "gauge/radstrom.hpp"

namespace gauge::config {

namespace {

LatticeVector parse_vector(const json& j, int dim) {
  if (!j.is_array() || j.empty()) throw ConfigError("expected a nonempty coordinate array");
  std::vector<double> c;
  for (const auto& x : j) {
    if (!x.is_number()) throw ConfigError("coordinates must be numbers");
    c.push_back(x.get<double>());
  }
  if (dim > 0 && static_cast<int>(c.size()) != dim)
    throw ConfigError("coordinate array has the wrong dimension");
  return LatticeVector(std::move(c));
}

double require_number(const json& j, const char* key, double fallback,
                      bool required = false) {
  if (!j.contains(key)) {
    if (required) throw ConfigError(std::string("missing required field: ") + key);
    return fallback;
  }
  if (!j.at(key).is_number()) throw ConfigError(std::string("field must be a number: ") + key);
  return j.at(key).get<double>();
}

}  // namespace

ConvexBody parse_body(const json& j, int dim, unsigned long long seed) {
  try {
    if (!j.is_object()) throw ConfigError("body literal must be an object");
    if (j.contains("vertices")) {
      const auto& vs = j.at("vertices");
      if (!vs.is_array() || vs.empty()) throw ConfigError("body needs a nonempty vertex list");
      std::vector<LatticeVector> pts;
      for (const auto& v : vs) pts.push_back(parse_vector(v, dim));
      return ConvexBody::from_vertices(pts);
    }
    if (j.contains("interval")) {
      const auto& iv = j.at("interval");
      if (dim != 1) throw ConfigError("interval bodies require dimension 1");
      if (!iv.is_array() || iv.size() != 2) throw ConfigError("interval takes [lo, hi]");
      return ConvexBody::interval(iv.at(0).get<double>(), iv.at(1).get<double>());
    }
    if (j.contains("box")) {
      const auto& b = j.at("box");
      return ConvexBody::box(parse_vector(b.at("lo"), dim), parse_vector(b.at("hi"), dim));
    }
    if (j.contains("ball_poly")) {
      return ConvexBody::ball_poly(dim, j.at("ball_poly").get<int>());
    }
    if (j.contains("singleton")) {
      return ConvexBody::singleton(parse_vector(j.at("singleton"), dim));
    }
    if (j.contains("random_polygon")) {
      const int k = j.at("random_polygon").value("points", 6);
      if (k < 1 || k > 64) throw ConfigError("random_polygon points must be in 1..64");
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> coord(-1.0, 1.0);
      std::vector<double> flat;
      for (int i = 0; i < k * dim; ++i) flat.push_back(coord(rng));
      return ConvexBody::from_points(dim, std::move(flat));
    }
    throw ConfigError("unrecognized body literal");
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("inconsistent body literal: ") + e.what());
  }
}

Gauge parse_gauge(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("gauge needs a kind");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "constant") return Gauge::constant(require_number(j, "value", 0.0, true));
    if (kind == "affine")
      return Gauge::affine(require_number(j, "intercept", 0.0, true),
                           require_number(j, "slope", 0.0, true));
    if (kind == "piecewise") {
      std::vector<double> breaks, values;
      for (const auto& x : j.at("breaks")) breaks.push_back(x.get<double>());
      for (const auto& x : j.at("values")) values.push_back(x.get<double>());
      return Gauge::piecewise(std::move(breaks), std::move(values));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid gauge: ") + e.what());
  }
  throw ConfigError("unknown gauge kind: " + kind);
}

Integrand parse_integrand(const json& j, int dim, unsigned long long seed) {
  if (!j.is_object() || !j.contains("name")) throw ConfigError("integrand needs a name");
  const std::string name = j.at("name").get<std::string>();
  const std::size_t d = static_cast<std::size_t>(dim);
  const ConvexBody default_box = ConvexBody::box(LatticeVector::constant(d, -1.0),
                                                 LatticeVector::constant(d, 1.0));
  try {
    if (name == "linear_body")
      return make_linear_body(j.contains("body") ? parse_body(j.at("body"), dim, seed)
                                                 : default_box);
    if (name == "interval_0t") return make_interval_0t(dim);
    if (name == "sym_interval") return make_sym_interval(dim);
    if (name == "translate_box") return make_translate_box(dim);
    if (name == "constant")
      return make_constant(j.contains("body") ? parse_body(j.at("body"), dim, seed) : default_box);
    if (name == "linear_triangle") {
      if (dim != 2) throw ConfigError("linear_triangle requires dimension 2");
      return make_triangle_fixture();
    }
    if (name == "simple") {
      SimpleSteps steps;
      for (const auto& st : j.at("steps")) {
        std::vector<std::pair<double, double>> ivs;
        for (const auto& iv : st.at("set"))
          ivs.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
        steps.emplace_back(MeasurableSet(std::move(ivs)), parse_body(st.at("body"), dim, seed));
      }
      return make_simple(steps, dim);
    }
    if (name == "single_poly") {
      std::vector<double> powers;
      if (j.contains("powers")) {
        for (const auto& p : j.at("powers")) powers.push_back(p.get<double>());
      } else {
        powers.assign(d, 1.0);
      }
      if (static_cast<int>(powers.size()) != dim)
        throw ConfigError("single_poly powers must match the dimension");
      return make_single_poly(powers);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid integrand: ") + e.what());
  }
  throw ConfigError("unknown integrand: " + name);
}

MeasurableSet parse_domain(const json& j) {
  std::vector<std::pair<double, double>> ivs;
  for (const auto& iv : j) {
    if (!iv.is_array() || iv.size() != 2) throw ConfigError("domain intervals take [a, b]");
    ivs.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
  }
  try {
    return MeasurableSet(std::move(ivs));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid domain: ") + e.what());
  }
}

StopSpec parse_stop(const json& j, int dim) {
  if (!j.is_object() || !j.contains("kind")) throw ConfigError("stop rule needs a kind");
  StopSpec s;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "norm") {
    s.kind = StopKind::NORM;
    s.epsilon = require_number(j, "epsilon", 0.0, true);
    if (!(s.epsilon > 0.0)) throw ConfigError("stop epsilon must be positive");
    return s;
  }
  if (kind == "order") {
    s.kind = StopKind::ORDER;
    LatticeVector base = LatticeVector::constant(static_cast<std::size_t>(dim), 1.0);
    if (j.contains("base")) {
      if (j.at("base").is_number()) {
        base = LatticeVector::constant(static_cast<std::size_t>(dim), j.at("base").get<double>());
      } else {
        base = parse_vector(j.at("base"), dim);
      }
    }
    const double ratio = require_number(j, "ratio", 0.5);
    try {
      s.sequence = OSequence(base, ratio);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid (o)-sequence: ") + e.what());
    }
    s.index = static_cast<int>(require_number(j, "index", 0.0, true));
    if (s.index < 0) throw ConfigError("order index must be >= 0");
    return s;
  }
  throw ConfigError("unknown stop kind: " + kind);
}

IntegrateOptions parse_options(const json& j, int dim) {
  IntegrateOptions o;
  o.mode = tag_mode_from_string(j.value("mode", "perron"));
  o.path = path_from_string(j.value("path", dim >= 3 ? "embedded" : "geometric"));
  o.norm_kind = norm_kind_from_string(j.value("norm", "SUP"));
  if (j.contains("domain")) o.domain = parse_domain(j.at("domain"));
  o.refinement_cap = static_cast<int>(require_number(j, "refinement_cap", 24.0));
  if (o.refinement_cap < 0 || o.refinement_cap > 40)
    throw ConfigError("refinement_cap must be in 0..40");
  const int m = static_cast<int>(require_number(j, "grid_size", 0.0));
  try {
    o.grid = DirectionGrid::make(dim, m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid grid: ") + e.what());
  }
  o.swap_tag_roles = j.value("swap_tag_roles", false);
  return o;
}

json body_to_json(const ConvexBody& c) {
  json verts = json::array();
  for (std::size_t i = 0; i < c.count(); ++i) {
    json v = json::array();
    for (int k = 0; k < c.dim(); ++k) v.push_back(c.vertex(i)[k]);
    verts.push_back(v);
  }
  return json{{"dimension", c.dim()}, {"vertices", verts}};
}

json report_to_json(const IntegrationReport& rep) {
  json j;
  j["status"] = to_string(rep.status);
  j["path"] = to_string(rep.path);
  j["partition_mode"] = to_string(rep.mode);
  j["refinements"] = rep.refinements;
  j["final_gap"] = rep.final_gap;
  j["dimension"] = rep.dimension;
  j["integrand"] = {{"name", rep.integrand_name}, {"descriptor", rep.integrand_descriptor}};
  if (rep.stop_kind == StopKind::NORM) {
    j["stop_rule"] = {{"kind", "norm"}, {"epsilon", rep.epsilon}};
  } else {
    json base = json::array();
    for (std::size_t i = 0; i < rep.osequence->base.dim(); ++i)
      base.push_back(rep.osequence->base[i]);
    j["stop_rule"] = {{"kind", "order"},
                      {"base", base},
                      {"ratio", rep.osequence->ratio},
                      {"index", rep.order_index}};
  }
  j["stop_threshold"] = rep.stop_threshold;
  if (rep.point) {
    json p = json::array();
    for (std::size_t i = 0; i < rep.point->dim(); ++i) p.push_back((*rep.point)[i]);
    j["result"] = {{"point", p}};
  } else if (rep.body) {
    j["result"] = body_to_json(*rep.body);
    if (rep.embedded) j["result"]["support_values"] = rep.embedded->values;
  }
  return j;
}

json theorem_to_json(const TheoremReport& rep) {
  json j;
  j["theorem_id"] = rep.theorem_id;
  j["fixture"] = rep.fixture;
  j["verdict"] = to_string(rep.verdict);
  if (rep.verdict == Verdict::SKIPPED) j["skip_reason"] = rep.skip_reason;
  json res = json::object(), tol = json::object(), info = json::object();
  for (const auto& [k, v] : rep.residuals) res[k] = v;
  for (const auto& [k, v] : rep.tolerances) tol[k] = v;
  for (const auto& [k, v] : rep.info) info[k] = v;
  j["residuals"] = res;
  j["tolerances"] = tol;
  j["info"] = info;
  j["max_residual"] = rep.max_residual();
  return j;
}

json default_manifest() {
  json checks = json::array();
  auto add = [&](const char* id, json fixture, json params) {
    checks.push_back(json{{"id", id}, {"fixture", fixture}, {"params", params}});
  };
  add("aumann_inclusion", {{"name", "interval_0t"}, {"dim", 1}},
      {{"epsilon", 1e-4}, {"directions", 2}});
  add("aumann_inclusion", {{"name", "linear_body"}, {"dim", 2}},
      {{"epsilon", 1e-4}, {"directions", 16}});
  add("aumann_inclusion", {{"name", "constant"}, {"dim", 2}},
      {{"epsilon", 1e-4}, {"directions", 8}});
  add("nonneg_decomposition", {{"name", "translate_box"}, {"dim", 1}}, {{"epsilon", 1e-4}});
  add("nonneg_decomposition", {{"name", "linear_body"}, {"dim", 2}}, {{"epsilon", 1e-4}});
  add("nonneg_decomposition", {{"name", "interval_0t"}, {"dim", 2}}, {{"epsilon", 1e-4}});
  add("order_decomposition", {{"name", "translate_box"}, {"dim", 1}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 12}});
  add("order_decomposition", {{"name", "interval_0t"}, {"dim", 2}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 12}});
  add("order_decomposition", {{"name", "linear_triangle"}, {"dim", 2}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 12}});
  add("sup_selection", {{"name", "interval_0t"}, {"dim", 1}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 20}});
  add("sup_selection", {{"name", "sym_interval"}, {"dim", 2}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 20}});
  add("sup_selection", {{"name", "linear_body"}, {"dim", 2}},
      {{"base", 1.0}, {"ratio", 0.5}, {"index", 20}});
  add("sigma_additivity", {{"name", "linear_body"}, {"dim", 2}},
      {{"epsilon", 1e-4}, {"pieces", 10}});
  add("sigma_additivity", {{"name", "constant"}, {"dim", 2}}, {{"epsilon", 1e-4}, {"pieces", 10}});
  add("uniform_integrability", {{"name", "linear_body"}, {"dim", 2}},
      {{"epsilon", 1e-5}, {"directions", 16}, {"levels", 8}});
  add("uniform_integrability", {{"name", "constant"}, {"dim", 1}},
      {{"epsilon", 1e-5}, {"directions", 2}, {"levels", 8}});
  return json{{"checks", checks}};
}

TheoremReport run_check(const json& entry, unsigned long long seed) {
  if (!entry.is_object() || !entry.contains("id") || !entry.contains("fixture"))
    throw ConfigError("manifest entries need id and fixture");
  const std::string id = entry.at("id").get<std::string>();
  const json& fx = entry.at("fixture");
  const int dim = fx.value("dim", 1);
  if (dim < 1 || dim > 3) throw ConfigError("fixture dimension must be in 1..3");
  const Integrand f = parse_integrand(fx, dim, seed);
  const json params = entry.value("params", json::object());

  IntegrateOptions opts = parse_options(params, dim);
  const double eps = require_number(params, "epsilon", 1e-4);
  const int index = static_cast<int>(require_number(params, "index", 12.0));
  LatticeVector base = LatticeVector::constant(static_cast<std::size_t>(dim),
                                               require_number(params, "base", 1.0));
  const OSequence seq(base, require_number(params, "ratio", 0.5));

  if (id == "aumann_inclusion") {
    const int nd = static_cast<int>(require_number(params, "directions", 8.0));
    std::vector<Direction> dirs;
    for (int k = 0; k < nd && k < static_cast<int>(opts.grid->size()); ++k)
      dirs.push_back(opts.grid->direction_vec(static_cast<std::size_t>(k)));
    return check_aumann_inclusion(f, dirs, eps, opts);
  }
  if (id == "nonneg_decomposition") return check_nonneg_decomposition(f, eps, opts);
  if (id == "order_decomposition") return check_order_decomposition(f, seq, index, opts);
  if (id == "sup_selection") return check_sup_selection(f, seq, index, opts);
  if (id == "sigma_additivity") {
    const int pieces = static_cast<int>(require_number(params, "pieces", 10.0));
    if (pieces < 1 || pieces > 40) throw ConfigError("pieces must be in 1..40");
    return check_sigma_additivity(f, eps, pieces, opts);
  }
  if (id == "uniform_integrability") {
    const int nd = static_cast<int>(require_number(params, "directions", 8.0));
    const int levels = static_cast<int>(require_number(params, "levels", 8.0));
    return check_uniform_integrability(f, nd, levels, eps, opts);
  }
  throw ConfigError("unknown theorem id: " + id);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write file: " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gauge::config
