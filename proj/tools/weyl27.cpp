// weyl27: orbits of line arrangements on a general cubic surface.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "weyl27/cli.hpp"

int main(int argc, char** argv) {
  using weyl27::cli::Command;
  CLI::App app{"W(E6) orbits of arrangements of the 27 lines on a cubic surface"};
  app.require_subcommand(1);

  weyl27::cli::RunConfig cfg;
  cfg.workers = weyl27::cli::default_workers();
  std::string format = "text";
  std::string output;
  int n = -1;
  std::string roots;
  std::vector<std::string> sets;

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Write the report to this file");
    sub->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-w,--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto with_n = [&](CLI::App* sub) { sub->add_option("-n,--n", n, "Only arrangements of this size")->check(CLI::Range(0, 27)); };

  const std::map<std::string, Command> names{
      {"group", Command::group},       {"enumerate", Command::enumerate},   {"classify", Command::classify},
      {"pairs", Command::pairs},       {"invariants", Command::invariants}, {"export-gap", Command::export_gap},
      {"verify", Command::verify},
  };
  auto* group = app.add_subcommand("group", "Build W(E6) from the simple reflections and check the generators");
  auto* enumerate = app.add_subcommand("enumerate", "List minimal orbit representatives");
  auto* classify = app.add_subcommand("classify", "Group orbits by combinatorial type");
  auto* pairs = app.add_subcommand("pairs", "Report the Zariski tuples and their distinguishing invariants");
  auto* invariants = app.add_subcommand("invariants", "Lattice invariants of arrangements");
  auto* export_gap = app.add_subcommand("export-gap", "Write the generators in cycle notation");
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  for (auto* sub : {group, enumerate, classify, pairs, invariants, export_gap, verify}) common(sub);
  with_n(enumerate);
  with_n(classify);
  with_n(invariants);
  group->add_option("--roots", roots, "JSON file with six root vectors to use instead of the built-in basis");
  invariants->add_option("-s,--set", sets, "Arrangement as comma-separated 1-based line indices (repeatable)");

  CLI11_PARSE(app, argc, argv);

  for (const auto& [name, cmd] : names)
    if (app.got_subcommand(name)) cfg.command = cmd;
  cfg.format = weyl27::cli::parse_format(format);
  if (!output.empty()) cfg.output_path = output;
  if (n >= 0) cfg.n_filter = n;
  if (!roots.empty()) cfg.roots_path = roots;
  try {
    for (const auto& s : sets) cfg.sets.push_back(weyl27::cli::parse_index_list(s));
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 1;
  }
  return weyl27::cli::run(cfg, std::cout, std::cerr);
}
