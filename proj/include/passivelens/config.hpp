#ifndef PASSIVELENS_CONFIG_HPP
#define PASSIVELENS_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "passivelens/annotator.hpp"
#include "passivelens/evaluator.hpp"
#include "passivelens/extractor.hpp"

namespace passivelens::config {

// One machine-translation system under evaluation. `output` is the
// translations TSV; `parsed` optionally carries dependency-parsed
// versions of the same translations (sentence ids = pair ids, one file
// per language) so the rule annotator can run on them; `corrections`
// optionally overrides labels for that system.
struct SystemSpec {
  std::string name;
  std::string output;
  std::vector<std::string> parsed;
  std::optional<std::string> corrections;
};

// Parsed key=value run configuration. Relative paths are resolved
// against the directory containing the config file.
//
// Keys: parsed (repeatable), manifest, register_map, output_dir,
// corrections, precedence.zh, precedence.en, verb_tag_pattern, subsets,
// format, consistency.granularity, label_universe.{zh,en},
// strategy_universe.{zh,en}, system.<name>.{output,parsed,corrections}.
struct RunConfig {
  std::vector<std::string> parsed_files;
  std::string manifest;
  std::string register_map;
  std::string output_dir;
  std::optional<std::string> corrections;
  annotator::RuleConfig rules = annotator::RuleConfig::defaults();
  std::vector<extractor::SubsetId> subsets{extractor::kAllSubsets.begin(),
                                           extractor::kAllSubsets.end()};
  std::string format = "json";  // json | md | csv
  std::optional<evaluator::StructureGranularity> granularity;
  int label_universe_zh = 0;  // 0 = language default
  int label_universe_en = 0;
  int strategy_universe_zh = 0;
  int strategy_universe_en = 0;
  std::vector<SystemSpec> systems;  // order of first appearance
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& in, const std::string& origin, const std::string& base_dir);

}  // namespace passivelens::config

#endif
