#include "gauge/cli.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "gauge/config.hpp"
#include "gauge/radstrom.hpp"

namespace gauge::cli {

namespace {

using config::format_double;
using config::json;

json load_config(const std::string& path) {
  const std::string text = config::read_file(path);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config is not valid JSON: " + path);
  return j;
}

std::string csv_sibling(const std::string& json_path) {
  const auto dot = json_path.rfind('.');
  if (dot == std::string::npos) return json_path + ".csv";
  return json_path.substr(0, dot) + ".csv";
}

int run_guarded(bool quiet, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    (void)quiet;
    return 1;
  }
}

struct LevelSums {
  double consec_gap = 0.0;
  double tag_gap = 0.0;
  std::size_t cells = 0;
};

TaggedPartition perturb_tags(const TaggedPartition& p) {
  TaggedPartition q = p;
  if (p.mode == TagMode::PERRON) {
    for (auto& c : q.cells) c.tag = c.a;
  } else if (!q.cells.empty()) {
    q.cells.back().tag = 0.0;
  }
  return q;
}

}  // namespace

int cmd_integrate(const CommonArgs& args) {
  return run_guarded(args.quiet, [&]() -> int {
    const json cfg = load_config(args.config_path);
    const int dim = static_cast<int>(cfg.value("dimension", 1));
    if (dim < 1 || dim > 3) throw ConfigError("dimension must be in 1..3");
    if (!cfg.contains("integrand")) throw ConfigError("config needs an integrand");
    const Integrand f = config::parse_integrand(cfg.at("integrand"), dim, args.seed);
    const IntegrateOptions opts = config::parse_options(cfg, dim);
    if (!cfg.contains("stop")) throw ConfigError("config needs a stop rule");
    const config::StopSpec stop = config::parse_stop(cfg.at("stop"), dim);

    const IntegrationReport rep =
        stop.kind == StopKind::NORM
            ? integrate_norm(f, stop.epsilon, opts)
            : integrate_order(f, *stop.sequence, stop.index, opts);

    const std::string out = args.out_path.empty() ? "report.json" : args.out_path;
    config::write_file_atomic(out, config::report_to_json(rep).dump(2) + "\n");
    if (!args.quiet) {
      std::cout << "integrate: " << to_string(rep.status) << " after " << rep.refinements
                << " refinements (gap " << format_double(rep.final_gap) << ") -> " << out << "\n";
    }
    return 0;
  });
}

int cmd_verify(const CommonArgs& args) {
  return run_guarded(args.quiet, [&]() -> int {
    const json manifest =
        args.config_path.empty() ? config::default_manifest() : load_config(args.config_path);
    if (!manifest.contains("checks") || !manifest.at("checks").is_array())
      throw ConfigError("manifest needs a checks array");
    static const char* known[] = {"aumann_inclusion",   "nonneg_decomposition",
                                  "order_decomposition", "sup_selection",
                                  "sigma_additivity",    "uniform_integrability"};
    for (const auto& entry : manifest.at("checks")) {
      const std::string id = entry.value("id", "");
      bool ok = false;
      for (const char* k : known) ok = ok || id == k;
      if (!ok) throw ConfigError("unknown theorem id: " + id);
    }

    json out_reports = json::array();
    std::ostringstream csv;
    csv << "theorem_id,fixture,verdict,max_residual\n";
    bool any_fail = false;
    for (const auto& entry : manifest.at("checks")) {
      const TheoremReport rep = config::run_check(entry, args.seed);
      out_reports.push_back(config::theorem_to_json(rep));
      csv << rep.theorem_id << "," << rep.fixture << "," << to_string(rep.verdict) << ","
          << format_double(rep.max_residual()) << "\n";
      any_fail = any_fail || rep.verdict == Verdict::FAIL;
      if (!args.quiet) {
        std::cout << "[" << to_string(rep.verdict) << "] " << rep.theorem_id << " "
                  << rep.fixture;
        if (rep.verdict == Verdict::SKIPPED) std::cout << " (" << rep.skip_reason << ")";
        std::cout << "\n";
      }
    }
    const std::string out = args.out_path.empty() ? "verify_report.json" : args.out_path;
    config::write_file_atomic(out, out_reports.dump(2) + "\n");
    config::write_file_atomic(csv_sibling(out), csv.str());
    if (!args.quiet) std::cout << (any_fail ? "verify: FAIL\n" : "verify: all checks pass\n");
    return any_fail ? 1 : 0;
  });
}

int cmd_convergence(const CommonArgs& args) {
  return run_guarded(args.quiet, [&]() -> int {
    const json cfg = load_config(args.config_path);
    const int dim = static_cast<int>(cfg.value("dimension", 1));
    if (dim < 1 || dim > 3) throw ConfigError("dimension must be in 1..3");
    if (!cfg.contains("integrand")) throw ConfigError("config needs an integrand");
    const Integrand f = config::parse_integrand(cfg.at("integrand"), dim, args.seed);
    const IntegrateOptions opts = config::parse_options(cfg, dim);
    const bool bracket = cfg.value("bracket", false);
    std::ostringstream csv;

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
      return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    if (bracket) {
      if (f.kind != Integrand::Kind::MULTI)
        throw ConfigError("bracket mode needs a set-valued integrand");
      std::vector<int> cells{10, 100, 1000};
      if (cfg.contains("cells")) {
        cells.clear();
        for (const auto& n : cfg.at("cells")) cells.push_back(n.get<int>());
      }
      csv << "level,cells,hausdorff_gap,tag_perturbation_gap,elapsed_ms,bracket_bound\n";
      int level = 0;
      for (int n : cells) {
        const auto t0 = clock::now();
        const MonotoneBracket br = integrate_monotone_bracket(f, n);
        const double gap = hausdorff(br.lower, br.upper, opts.hausdorff_tol);
        csv << level++ << "," << n << "," << format_double(gap) << "," << format_double(0.0)
            << "," << format_double(ms_since(t0)) << "," << format_double(br.bound) << "\n";
      }
    } else {
      const int max_level = static_cast<int>(cfg.value("max_level", 10));
      if (max_level < 0 || max_level > 24) throw ConfigError("max_level must be in 0..24");
      const std::string driver = cfg.value("driver", "bisect");
      csv << "level,cells,hausdorff_gap,tag_perturbation_gap,elapsed_ms\n";

      auto metric = [&](const RiemannSum& x, const RiemannSum& y) -> double {
        if (std::holds_alternative<LatticeVector>(x))
          return norm(std::get<LatticeVector>(x) - std::get<LatticeVector>(y), opts.norm_kind);
        if (std::holds_alternative<ConvexBody>(x))
          return hausdorff(std::get<ConvexBody>(x), std::get<ConvexBody>(y), opts.hausdorff_tol);
        return sup_distance(std::get<SupportVector>(x), std::get<SupportVector>(y));
      };
      auto sum_of = [&](const TaggedPartition& p) {
        return riemann_sum(f, p, opts.path, opts.grid);
      };

      std::optional<RiemannSum> prev;
      TaggedPartition p = initial_partition(opts.domain, opts.mode);
      for (int level = 0; level <= max_level; ++level) {
        const auto t0 = clock::now();
        TaggedPartition part = p;
        if (driver == "gauge") {
          const Gauge base =
              cfg.contains("gauge") ? config::parse_gauge(cfg.at("gauge")) : Gauge::constant(0.5);
          const double shrink = std::pow(0.5, level);
          Gauge g{[base, shrink](double t) { return base(t) * shrink; }, "scaled"};
          part = cousin_partition_of(g, opts.domain);
        } else if (driver != "bisect") {
          throw ConfigError("unknown convergence driver: " + driver);
        }
        const RiemannSum s = sum_of(part);
        const RiemannSum sp = sum_of(perturb_tags(part));
        const double tag_gap = metric(s, sp);
        const double consec = prev ? metric(s, *prev) : tag_gap;
        csv << level << "," << part.cells.size() << "," << format_double(consec) << ","
            << format_double(tag_gap) << "," << format_double(ms_since(t0)) << "\n";
        prev = s;
        if (driver == "bisect") p = refine(p);
      }
    }

    const std::string out = args.out_path.empty() ? "convergence.csv" : args.out_path;
    config::write_file_atomic(out, csv.str());
    if (!args.quiet) std::cout << "convergence table -> " << out << "\n";
    return 0;
  });
}

int cmd_embed(const CommonArgs& args) {
  return run_guarded(args.quiet, [&]() -> int {
    const json cfg = load_config(args.config_path);
    const int dim = static_cast<int>(cfg.value("dimension", 1));
    if (dim < 1 || dim > 3) throw ConfigError("dimension must be in 1..3");
    GridPtr grid;
    try {
      grid = DirectionGrid::make(dim, static_cast<int>(cfg.value("grid_size", 0)));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("invalid grid: ") + e.what());
    }
    if (!cfg.contains("bodies") || !cfg.at("bodies").is_array())
      throw ConfigError("embed config needs a bodies array");

    std::ostringstream csv;
    for (std::size_t j = 0; j < grid->size(); ++j) {
      if (j) csv << ",";
      csv << "u_" << (j + 1) << "(";
      for (int c = 0; c < dim; ++c) {
        if (c) csv << "|";
        csv << format_double(grid->direction(j)[c]);
      }
      csv << ")";
    }
    csv << "\n";
    for (const auto& lit : cfg.at("bodies")) {
      const ConvexBody body = config::parse_body(lit, dim, args.seed);
      const SupportVector s = embed(body, grid);
      for (std::size_t j = 0; j < s.values.size(); ++j) {
        if (j) csv << ",";
        csv << format_double(s.values[j]);
      }
      csv << "\n";
    }

    const std::string out = args.out_path.empty() ? "embed.csv" : args.out_path;
    config::write_file_atomic(out, csv.str());
    if (!args.quiet)
      std::cout << "embedded " << cfg.at("bodies").size() << " bodies -> " << out << "\n";
    return 0;
  });
}

}  // namespace gauge::cli
