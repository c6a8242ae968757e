#include "passivelens/pipeline.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "passivelens/error.hpp"
#include "passivelens/text_util.hpp"

namespace passivelens::pipeline {

namespace fs = std::filesystem;
using annotator::Annotation;
using annotator::Correction;
using annotator::Side;
using corpus::Language;
using corpus::ParsedSentence;
using corpus::SentencePair;
using extractor::Subset;
using extractor::SubsetId;

namespace {

// Parsed files are monolingual; the language comes from the first
// "# lang =" comment. A file with no sentences loads as empty.
std::optional<Language> detect_language(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::string line;
  bool saw_content = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] != '#') {
      saw_content = true;
      continue;
    }
    const std::string body = text::trim(line.substr(1));
    const auto eq = body.find('=');
    if (eq == std::string::npos) continue;
    if (text::trim(body.substr(0, eq)) == "lang")
      return corpus::parse_language(text::trim(body.substr(eq + 1)));
    saw_content = true;
  }
  if (saw_content)
    throw Error("cannot infer language of \"" + path + "\": no \"# lang =\" line");
  return std::nullopt;
}

const Subset& subset_of(const ExtractOutcome& ex, SubsetId id) {
  return ex.subsets.at(static_cast<std::size_t>(id));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << content;
  if (!out) throw Error("write failed for \"" + path + "\"");
}

void append_run_log(const config::RunConfig& cfg, const std::string& line) {
  std::ofstream out(cfg.output_dir + "/run.log", std::ios::binary | std::ios::app);
  if (!out) return;  // the log is advisory
  const std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  out << stamp << ' ' << line << '\n';
}

class Timer {
public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_outputs_configured(const config::RunConfig& cfg) {
  if (cfg.output_dir.empty()) throw Error("config missing key \"output_dir\"");
}

// Applies one corrections file across several annotation lists (the
// same pair can sit in two subsets); every correction must hit at least
// one annotation.
void apply_corrections_across(const std::vector<std::vector<Annotation>*>& lists,
                              const std::vector<Correction>& corrections,
                              const std::string& origin) {
  for (const auto& c : corrections) {
    bool applied = false;
    for (auto* list : lists) {
      for (auto& a : *list) {
        if (a.pair_id != c.pair_id || a.side != c.side) continue;
        if (labels::label_language(a.label) != labels::label_language(c.corrected_label))
          throw Error(origin + ": correction for pair \"" + c.pair_id +
                      "\" uses a label of the wrong language");
        a.label = c.corrected_label;
        a.strategy = labels::strategy_of(a.label);
        a.voice = labels::voice_of(a.strategy);
        a.verified = true;
        applied = true;
      }
    }
    if (!applied)
      throw Error(origin + ": correction for pair \"" + c.pair_id + "\" (side " +
                  annotator::to_string(c.side) + ") matched no annotation");
  }
}

}  // namespace

Loaded load_inputs(const config::RunConfig& cfg) {
  if (cfg.parsed_files.empty())
    throw Error("config declares no parsed files (key \"parsed\")");
  if (cfg.manifest.empty()) throw Error("config missing key \"manifest\"");
  if (cfg.register_map.empty()) throw Error("config missing key \"register_map\"");

  Loaded loaded;
  loaded.registers = corpus::load_register_map(cfg.register_map);
  std::vector<std::vector<ParsedSentence>> files;
  for (const auto& path : cfg.parsed_files) {
    const auto lang = detect_language(path);
    if (lang) files.push_back(corpus::load_parsed_file(path, *lang));
  }
  loaded.store = corpus::build_store(files);
  loaded.pairs = corpus::load_manifest(cfg.manifest, loaded.registers, loaded.store);

  std::set<std::string> ids;
  for (const auto& p : loaded.pairs)
    if (!ids.insert(p.pair_id).second)
      throw Error("manifest repeats pair id \"" + p.pair_id + "\"");
  return loaded;
}

ExtractOutcome run_extract(const Loaded& loaded) {
  ExtractOutcome ex;
  for (const auto& p : loaded.pairs) {
    const auto verdict = extractor::clean_pair(p);
    ex.cleaning.emplace_back(p.pair_id, verdict);
    if (verdict.keep) ex.kept.push_back(&p);
  }
  ex.subsets = extractor::partition_subsets(ex.kept);
  ex.census = extractor::subset_census(ex.subsets, ex.kept);
  return ex;
}

std::map<SubsetId, SubsetAnnotations> run_annotate(const Loaded& /*loaded*/,
                                                   const ExtractOutcome& extract,
                                                   const config::RunConfig& cfg) {
  std::map<std::string, const SentencePair*> by_id;
  for (const auto* p : extract.kept) by_id.emplace(p->pair_id, p);

  std::map<SubsetId, SubsetAnnotations> out;
  for (SubsetId sid : cfg.subsets) {
    SubsetAnnotations anns;
    for (const auto& pid : subset_of(extract, sid).pair_ids) {
      const SentencePair* p = by_id.at(pid);
      anns.source.push_back(
          annotator::make_annotation(pid, Side::source, annotator::annotate(p->source, cfg.rules)));
      anns.target.push_back(
          annotator::make_annotation(pid, Side::target, annotator::annotate(p->target, cfg.rules)));
    }
    out.emplace(sid, std::move(anns));
  }

  if (cfg.corrections) {
    const auto corrections = annotator::load_corrections(*cfg.corrections);
    std::vector<std::vector<Annotation>*> lists;
    for (auto& [sid, anns] : out) {
      lists.push_back(&anns.source);
      lists.push_back(&anns.target);
    }
    apply_corrections_across(lists, corrections, *cfg.corrections);
  }
  return out;
}

metrics::Segment reference_segment(const ParsedSentence& s) {
  metrics::Segment seg;
  if (s.language == Language::zh) {
    seg.text = s.text ? *s.text : s.surface("");
    std::vector<std::string> words;
    for (const auto& t : s.tokens) words.push_back(t.form);
    seg.pretokenized = std::move(words);
  } else {
    seg.text = s.text ? *s.text : s.surface(" ");
  }
  return seg;
}

std::map<std::string, metrics::Segment> load_system_output(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open system output \"" + path + "\"");
  std::map<std::string, metrics::Segment> out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto cols = text::split_tsv(line);
    if (!saw_header) {
      if (cols.empty() || cols[0] != "pair_id")
        throw Error(where + ": system output must start with a pair_id header row");
      saw_header = true;
      continue;
    }
    if (cols.size() != 2 && cols.size() != 3)
      throw Error(where + ": expected 2 or 3 columns, got " + std::to_string(cols.size()));
    metrics::Segment seg;
    seg.text = cols[1];
    if (cols.size() == 3 && !cols[2].empty()) seg.pretokenized = text::split_whitespace(cols[2]);
    if (!out.emplace(cols[0], std::move(seg)).second)
      throw Error(where + ": duplicate pair id \"" + cols[0] + "\"");
  }
  if (!saw_header) throw Error(path + ": empty system output, header required");
  return out;
}

namespace {

std::vector<Annotation> order_annotations(const std::vector<Annotation>& rows, Side side,
                                          const std::vector<std::string>& pair_ids,
                                          const std::string& path) {
  std::map<std::string, const Annotation*> by_id;
  for (const auto& a : rows) {
    if (a.side != side) continue;
    if (!by_id.emplace(a.pair_id, &a).second)
      throw Error(path + ": duplicate annotation for pair \"" + a.pair_id + "\"");
  }
  std::vector<Annotation> out;
  for (const auto& pid : pair_ids) {
    const auto it = by_id.find(pid);
    if (it == by_id.end())
      throw Error(path + ": no annotation for pair \"" + pid +
                  "\"; the annotate step is out of date, re-run it");
    out.push_back(*it->second);
  }
  if (by_id.size() != pair_ids.size())
    throw Error(path + ": annotations do not match the current subset membership; re-run annotate");
  return out;
}

}  // namespace

evaluator::Report run_evaluate(const Loaded& /*loaded*/, const ExtractOutcome& extract,
                               const config::RunConfig& cfg) {
  require_outputs_configured(cfg);
  std::map<std::string, const SentencePair*> by_id;
  for (const auto* p : extract.kept) by_id.emplace(p->pair_id, p);

  // Per-system data shared across subsets.
  struct SystemData {
    const config::SystemSpec* spec = nullptr;
    std::map<std::string, metrics::Segment> outputs;
    corpus::SentenceStore parsed;  // empty when the system has no parsed files
    std::map<SubsetId, std::vector<Annotation>> annotations;
  };
  std::vector<SystemData> systems;
  for (const auto& spec : cfg.systems) {
    SystemData data;
    data.spec = &spec;
    data.outputs = load_system_output(spec.output);
    if (!spec.parsed.empty()) {
      std::vector<std::vector<ParsedSentence>> files;
      for (const auto& path : spec.parsed) {
        const auto lang = detect_language(path);
        if (lang) files.push_back(corpus::load_parsed_file(path, *lang));
      }
      data.parsed = corpus::build_store(files);
    }
    systems.push_back(std::move(data));
  }

  std::vector<evaluator::SubsetInputs> inputs;
  for (SubsetId sid : cfg.subsets) {
    const Subset& sub = subset_of(extract, sid);
    evaluator::SubsetInputs in;
    in.subset = sid;
    in.target_language = extractor::subset_target_language(sid);
    in.pair_ids = sub.pair_ids;
    for (const auto& pid : sub.pair_ids) in.registers.emplace(pid, by_id.at(pid)->reg);

    const std::string base = cfg.output_dir + "/annotations_" + extractor::slug(sid);
    for (Side side : {Side::source, Side::target}) {
      const std::string path = base + "_" + annotator::to_string(side) + ".tsv";
      if (!fs::exists(path))
        throw Error("missing annotation file \"" + path + "\" (run the annotate step first)");
      auto ordered = order_annotations(annotator::load_annotations(path), side, sub.pair_ids, path);
      (side == Side::source ? in.human_source : in.human_target) = std::move(ordered);
    }

    for (const auto& pid : sub.pair_ids)
      in.references.push_back(reference_segment(by_id.at(pid)->target));

    in.label_universe = in.target_language == Language::zh ? cfg.label_universe_zh
                                                           : cfg.label_universe_en;
    in.strategy_universe = in.target_language == Language::zh ? cfg.strategy_universe_zh
                                                              : cfg.strategy_universe_en;
    in.granularity = cfg.granularity;

    for (auto& data : systems) {
      evaluator::SystemInputs si;
      si.name = data.spec->name;

      std::vector<std::string> missing;
      for (const auto& pid : sub.pair_ids) {
        const auto it = data.outputs.find(pid);
        if (it == data.outputs.end()) missing.push_back(pid);
        else si.hypotheses.push_back(it->second);
      }
      if (!missing.empty()) {
        std::string msg = "system \"" + data.spec->name + "\" output lacks pairs:";
        for (const auto& pid : missing) msg += " " + pid;
        throw Error(msg, 3);
      }

      if (!data.parsed.empty()) {
        std::vector<Annotation> anns;
        std::vector<std::string> unparsed;
        for (const auto& pid : sub.pair_ids) {
          const auto it = data.parsed.find(pid);
          if (it == data.parsed.end()) {
            unparsed.push_back(pid);
            continue;
          }
          if (it->second.language != in.target_language)
            throw Error("system \"" + data.spec->name + "\" parsed sentence \"" + pid +
                        "\" is " + corpus::to_string(it->second.language) +
                        " but the subset target language is " +
                        corpus::to_string(in.target_language));
          anns.push_back(annotator::make_annotation(
              pid, Side::target, annotator::annotate(it->second, cfg.rules)));
        }
        if (!unparsed.empty()) {
          std::string msg = "system \"" + data.spec->name + "\" parsed output lacks pairs:";
          for (const auto& pid : unparsed) msg += " " + pid;
          throw Error(msg, 3);
        }
        data.annotations.emplace(sid, std::move(anns));
        si.annotations = data.annotations.at(sid);  // replaced after corrections below
      }
      in.systems.push_back(std::move(si));
    }
    inputs.push_back(std::move(in));
  }

  // System-level corrections span subsets, so they apply after all
  // subsets were annotated; then refresh the per-subset inputs.
  for (auto& data : systems) {
    if (!data.spec->corrections || data.annotations.empty()) continue;
    const auto corrections = annotator::load_corrections(*data.spec->corrections);
    std::vector<std::vector<Annotation>*> lists;
    for (auto& [sid, anns] : data.annotations) lists.push_back(&anns);
    apply_corrections_across(lists, corrections, *data.spec->corrections);
  }
  for (auto& in : inputs) {
    for (std::size_t k = 0; k < systems.size(); ++k) {
      const auto it = systems[k].annotations.find(in.subset);
      if (it != systems[k].annotations.end()) in.systems[k].annotations = it->second;
    }
  }

  return evaluator::compare_report(inputs);
}

std::vector<std::string> cmd_extract(const config::RunConfig& cfg) {
  Timer timer;
  require_outputs_configured(cfg);
  const Loaded loaded = load_inputs(cfg);
  const ExtractOutcome ex = run_extract(loaded);

  fs::create_directories(cfg.output_dir);
  std::ostringstream cleaning, subsets, census;
  extractor::write_cleaning_report(cleaning, ex.cleaning);
  extractor::write_subsets(subsets, ex.subsets);
  extractor::write_census(census, ex.census);
  write_text_file(cfg.output_dir + "/cleaning.tsv", cleaning.str());
  write_text_file(cfg.output_dir + "/subsets.tsv", subsets.str());
  write_text_file(cfg.output_dir + "/census.tsv", census.str());

  std::vector<std::string> warnings;
  if (!loaded.pairs.empty() && ex.kept.empty())
    warnings.push_back("all pairs were dropped by the cleaning filters");
  bool any_member = false;
  for (const auto& sub : ex.subsets)
    if (!sub.pair_ids.empty()) any_member = true;
  if (!any_member) warnings.push_back("no pair joined any subset");

  std::ostringstream log;
  log << "extract: " << loaded.pairs.size() << " pairs in, " << ex.kept.size() << " kept, "
      << timer.ms() << " ms";
  append_run_log(cfg, log.str());
  return warnings;
}

std::vector<std::string> cmd_annotate(const config::RunConfig& cfg) {
  Timer timer;
  require_outputs_configured(cfg);
  const Loaded loaded = load_inputs(cfg);
  const ExtractOutcome ex = run_extract(loaded);
  const auto annotations = run_annotate(loaded, ex, cfg);

  fs::create_directories(cfg.output_dir);
  std::size_t total = 0;
  std::vector<std::string> warnings;
  for (SubsetId sid : cfg.subsets) {
    const auto& anns = annotations.at(sid);
    const std::string base = cfg.output_dir + "/annotations_" + extractor::slug(sid);
    std::ostringstream src, tgt;
    annotator::write_annotations(src, anns.source);
    annotator::write_annotations(tgt, anns.target);
    write_text_file(base + "_source.tsv", src.str());
    write_text_file(base + "_target.tsv", tgt.str());
    total += anns.source.size() + anns.target.size();
    if (anns.source.empty())
      warnings.push_back("subset " + extractor::display_name(sid) + " has no pairs");
  }

  std::ostringstream log;
  log << "annotate: " << total << " annotations, " << timer.ms() << " ms";
  append_run_log(cfg, log.str());
  return warnings;
}

std::vector<std::string> cmd_evaluate(const config::RunConfig& cfg) {
  Timer timer;
  require_outputs_configured(cfg);
  const Loaded loaded = load_inputs(cfg);
  const ExtractOutcome ex = run_extract(loaded);
  const evaluator::Report report = run_evaluate(loaded, ex, cfg);

  fs::create_directories(cfg.output_dir);
  if (cfg.format == "json") {
    std::ostringstream os;
    evaluator::render_json(os, report);
    write_text_file(cfg.output_dir + "/report.json", os.str());
  } else if (cfg.format == "md") {
    std::ostringstream os;
    evaluator::render_markdown(os, report);
    write_text_file(cfg.output_dir + "/report.md", os.str());
  } else {
    evaluator::render_csv(cfg.output_dir, report);
  }

  std::vector<std::string> warnings;
  for (const auto& sub : report.subsets)
    for (const auto& w : sub.warnings)
      warnings.push_back(extractor::display_name(sub.subset) + ": " + w);

  std::ostringstream log;
  log << "evaluate: " << report.subsets.size() << " subsets, " << cfg.systems.size()
      << " systems, " << timer.ms() << " ms";
  append_run_log(cfg, log.str());
  return warnings;
}

}  // namespace passivelens::pipeline
