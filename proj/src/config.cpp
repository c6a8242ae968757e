#include "passivelens/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "passivelens/error.hpp"
#include "passivelens/text_util.hpp"

namespace passivelens::config {

namespace {

std::vector<std::string> split_commas(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const std::string trimmed = text::trim(part);
    if (!trimmed.empty()) out.push_back(trimmed);
  }
  return out;
}

std::string resolve(const std::string& base_dir, const std::string& value) {
  std::filesystem::path p(value);
  if (p.is_absolute() || base_dir.empty()) return p.lexically_normal().string();
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

int parse_positive_int(const std::string& value, const std::string& where) {
  try {
    const int v = std::stoi(value);
    if (v <= 0) throw std::out_of_range("");
    return v;
  } catch (const std::exception&) {
    throw Error(where + ": expected a positive integer, got \"" + value + "\"");
  }
}

SystemSpec& system_entry(RunConfig& cfg, const std::string& name) {
  for (auto& s : cfg.systems)
    if (s.name == name) return s;
  cfg.systems.push_back(SystemSpec{name, "", {}, std::nullopt});
  return cfg.systems.back();
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& origin, const std::string& base_dir) {
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = text::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::string where = origin + ":" + std::to_string(lineno);

    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) throw Error(where + ": expected key=value");
    const std::string key = text::trim(trimmed.substr(0, eq));
    const std::string value = text::trim(trimmed.substr(eq + 1));
    if (key.empty()) throw Error(where + ": empty key");
    if (value.empty()) throw Error(where + ": empty value for key \"" + key + "\"");

    if (key == "parsed") {
      cfg.parsed_files.push_back(resolve(base_dir, value));
    } else if (key == "manifest") {
      cfg.manifest = resolve(base_dir, value);
    } else if (key == "register_map") {
      cfg.register_map = resolve(base_dir, value);
    } else if (key == "output_dir") {
      cfg.output_dir = resolve(base_dir, value);
    } else if (key == "corrections") {
      cfg.corrections = resolve(base_dir, value);
    } else if (key == "precedence.zh") {
      cfg.rules.precedence_zh = split_commas(value);
      if (cfg.rules.precedence_zh.empty()) throw Error(where + ": empty precedence.zh list");
    } else if (key == "precedence.en") {
      cfg.rules.precedence_en = split_commas(value);
      if (cfg.rules.precedence_en.empty()) throw Error(where + ": empty precedence.en list");
    } else if (key == "verb_tag_pattern") {
      cfg.rules.verb_tag_pattern = value;
    } else if (key == "subsets") {
      cfg.subsets.clear();
      for (const auto& part : split_commas(value)) {
        extractor::SubsetId id;
        try {
          id = extractor::parse_subset(part);
        } catch (const Error& e) {
          throw Error(where + ": " + e.what());
        }
        for (auto seen : cfg.subsets)
          if (seen == id) throw Error(where + ": subset \"" + part + "\" listed twice");
        cfg.subsets.push_back(id);
      }
      if (cfg.subsets.empty()) throw Error(where + ": empty subsets list");
    } else if (key == "format") {
      if (value != "json" && value != "md" && value != "csv")
        throw Error(where + ": format must be json, md or csv");
      cfg.format = value;
    } else if (key == "consistency.granularity") {
      if (value == "label") cfg.granularity = evaluator::StructureGranularity::label;
      else if (value == "strategy") cfg.granularity = evaluator::StructureGranularity::strategy;
      else throw Error(where + ": consistency.granularity must be label or strategy");
    } else if (key == "label_universe.zh") {
      cfg.label_universe_zh = parse_positive_int(value, where);
    } else if (key == "label_universe.en") {
      cfg.label_universe_en = parse_positive_int(value, where);
    } else if (key == "strategy_universe.zh") {
      cfg.strategy_universe_zh = parse_positive_int(value, where);
    } else if (key == "strategy_universe.en") {
      cfg.strategy_universe_en = parse_positive_int(value, where);
    } else if (key.rfind("system.", 0) == 0) {
      const std::string rest = key.substr(7);
      const auto dot = rest.rfind('.');
      if (dot == std::string::npos || dot == 0)
        throw Error(where + ": expected system.<name>.output/.parsed/.corrections");
      const std::string name = rest.substr(0, dot);
      const std::string field = rest.substr(dot + 1);
      SystemSpec& spec = system_entry(cfg, name);
      if (field == "output") spec.output = resolve(base_dir, value);
      else if (field == "parsed") spec.parsed.push_back(resolve(base_dir, value));
      else if (field == "corrections") spec.corrections = resolve(base_dir, value);
      else throw Error(where + ": unknown system field \"" + field + "\"");
    } else {
      throw Error(where + ": unknown config key \"" + key + "\"");
    }
  }

  for (const auto& s : cfg.systems)
    if (s.output.empty())
      throw Error(origin + ": system \"" + s.name + "\" has no output file");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file \"" + path + "\"");
  const std::string base_dir = std::filesystem::path(path).parent_path().string();
  return parse_config(in, path, base_dir);
}

}  // namespace passivelens::config
