// gauge-integral: numerical gauge integration of set-valued maps on [0,1].

#include <iostream>

#include "CLI11.hpp"

#include "gauge/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"numerical gauge integration of set-valued maps on [0,1]"};
  app.require_subcommand(1);

  gauge::cli::CommonArgs args;
  auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* c = sub->add_option("--config", args.config_path, "JSON config path");
    if (config_required) c->required();
    sub->add_option("--out", args.out_path, "output file path");
    sub->add_option("--seed", args.seed, "seed for randomized fixture generation");
    sub->add_flag("--quiet", args.quiet, "suppress progress output");
  };

  CLI::App* integrate =
      app.add_subcommand("integrate", "run one integration and write its report");
  add_common(integrate, true);
  CLI::App* verify =
      app.add_subcommand("verify", "run the verification suite (builtin manifest by default)");
  add_common(verify, false);
  CLI::App* convergence =
      app.add_subcommand("convergence", "tabulate Cauchy gaps per refinement level");
  add_common(convergence, true);
  CLI::App* embed = app.add_subcommand("embed", "dump support vectors of bodies as CSV");
  add_common(embed, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (integrate->parsed()) return gauge::cli::cmd_integrate(args);
  if (verify->parsed()) return gauge::cli::cmd_verify(args);
  if (convergence->parsed()) return gauge::cli::cmd_convergence(args);
  if (embed->parsed()) return gauge::cli::cmd_embed(args);
  std::cerr << "no subcommand\n";
  return 2;
}
