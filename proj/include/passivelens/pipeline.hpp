#ifndef PASSIVELENS_PIPELINE_HPP
#define PASSIVELENS_PIPELINE_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "passivelens/annotator.hpp"
#include "passivelens/config.hpp"
#include "passivelens/corpus.hpp"
#include "passivelens/corpus_io.hpp"
#include "passivelens/evaluator.hpp"
#include "passivelens/extractor.hpp"

namespace passivelens::pipeline {

// Everything the manifest describes, loaded and cross-checked.
struct Loaded {
  corpus::RegisterMap registers;
  corpus::SentenceStore store;
  std::vector<corpus::SentencePair> pairs;  // manifest order
};

Loaded load_inputs(const config::RunConfig& cfg);

struct ExtractOutcome {
  std::vector<std::pair<std::string, extractor::CleaningVerdict>> cleaning;  // manifest order
  std::vector<const corpus::SentencePair*> kept;  // pairs that survived cleaning
  std::array<extractor::Subset, 4> subsets;
  std::vector<extractor::CensusRow> census;
};

ExtractOutcome run_extract(const Loaded& loaded);

// Source- and target-side annotations of one subset, in subset order.
struct SubsetAnnotations {
  std::vector<annotator::Annotation> source;
  std::vector<annotator::Annotation> target;
};

// Annotates both sides of every selected subset and applies the global
// corrections file (when configured) across all of them.
std::map<extractor::SubsetId, SubsetAnnotations> run_annotate(const Loaded& loaded,
                                                              const ExtractOutcome& extract,
                                                              const config::RunConfig& cfg);

// Builds the comparison report. Human annotations are read back from the
// annotate-stage files in cfg.output_dir (file handoff, so new systems
// can be scored without re-annotating).
evaluator::Report run_evaluate(const Loaded& loaded, const ExtractOutcome& extract,
                               const config::RunConfig& cfg);

// Reference segment for metric scoring: raw text when present, else the
// token forms joined ("" for Chinese, " " for English); Chinese segments
// carry the token forms as the word segmentation.
metrics::Segment reference_segment(const corpus::ParsedSentence& s);

// System output TSV: header row, then pair_id, translation text and an
// optional space-joined word segmentation.
std::map<std::string, metrics::Segment> load_system_output(const std::string& path);

// Command bodies used by the CLI and the test harnesses. They write the
// stage outputs into cfg.output_dir and append a timing line to run.log.
// Data files are deterministic; run.log is not (it carries wall times).
//
//   extract:  cleaning.tsv, subsets.tsv, census.tsv
//   annotate: annotations_<subset-slug>_{source,target}.tsv
//   evaluate: report.json | report.md | per-table CSV files
//
// Warnings (e.g. "all pairs dropped") are returned, not printed.
std::vector<std::string> cmd_extract(const config::RunConfig& cfg);
std::vector<std::string> cmd_annotate(const config::RunConfig& cfg);
std::vector<std::string> cmd_evaluate(const config::RunConfig& cfg);

}  // namespace passivelens::pipeline

#endif
