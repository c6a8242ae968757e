#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "passivelens/config.hpp"
#include "passivelens/error.hpp"
#include "passivelens/pipeline.hpp"

namespace {

constexpr const char* kVersion = "passivelens 0.1.0";

// --system name=path: adds a system on the fly; an existing name from
// the config keeps its parsed/corrections files and only swaps the
// output path.
void merge_cli_systems(passivelens::config::RunConfig& cfg,
                       const std::vector<std::string>& system_args) {
  using passivelens::Error;
  for (const auto& arg : system_args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size())
      throw Error("--system expects name=path, got \"" + arg + "\"");
    const std::string name = arg.substr(0, eq);
    const std::string path = arg.substr(eq + 1);
    bool found = false;
    for (auto& spec : cfg.systems) {
      if (spec.name == name) {
        spec.output = path;
        found = true;
      }
    }
    if (!found) cfg.systems.push_back({name, path, {}, std::nullopt});
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Passive-construction extraction, translation-strategy annotation\n"
               "and MT evaluation for Chinese-English parallel corpora."};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> system_args;
  std::string format;

  CLI::App* extract =
      app.add_subcommand("extract", "Detect passives, apply cleaning, partition into subsets");
  CLI::App* annotate =
      app.add_subcommand("annotate", "Label translation strategies for every subset side");
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Score systems against the human references and report");
  for (CLI::App* sub : {extract, annotate, evaluate})
    sub->add_option("--config", config_path, "run configuration file (key=value)")->required();
  evaluate->add_option("--system", system_args,
                       "system output as name=path (repeatable; column order follows)");
  evaluate->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "md", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "E2: " << e.what() << std::endl;
    return 2;
  }

  try {
    auto cfg = passivelens::config::load_config(config_path);
    std::vector<std::string> warnings;
    if (extract->parsed()) {
      warnings = passivelens::pipeline::cmd_extract(cfg);
    } else if (annotate->parsed()) {
      warnings = passivelens::pipeline::cmd_annotate(cfg);
    } else {
      merge_cli_systems(cfg, system_args);
      if (!format.empty()) cfg.format = format;
      warnings = passivelens::pipeline::cmd_evaluate(cfg);
    }
    for (const auto& w : warnings) std::cerr << "W: " << w << std::endl;
    return 0;
  } catch (const passivelens::Error& e) {
    std::cerr << "E" << e.exit_code() << ": " << e.what() << std::endl;
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "E1: internal error: " << e.what() << std::endl;
    return 1;
  }
}
