#ifndef PASSIVELENS_EVALUATOR_HPP
#define PASSIVELENS_EVALUATOR_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "passivelens/annotator.hpp"
#include "passivelens/corpus.hpp"
#include "passivelens/extractor.hpp"
#include "passivelens/metrics.hpp"

namespace passivelens::evaluator {

// Percentage of each structure per named column; Chinese tables carry the
// eight strategies, English tables the five marker categories.
struct ProportionTable {
  corpus::Language lang = corpus::Language::zh;
  std::vector<std::string> columns;
  std::vector<int> column_n;  // annotations behind each column
  struct Row {
    labels::Voice voice = labels::Voice::ACTIVE;
    labels::Strategy strategy = labels::Strategy::OTHER_ACTIVE;
    std::vector<double> pct;  // full precision, 0..100, one per column
  };
  std::vector<Row> rows;  // fixed strategy order for the language
};

ProportionTable proportions(
    const std::vector<std::pair<std::string, std::vector<annotator::Annotation>>>& columns,
    corpus::Language lang);

struct ConsistencyRow {
  double voice = 0.0;      // fraction in [0,1]
  double structure = 0.0;  // fraction in [0,1]
  int n = 0;
};

struct ConsistencySummary {
  std::vector<std::pair<corpus::Register, ConsistencyRow>> by_register;  // registers present
  ConsistencyRow overall;
};

// Structure matching granularity: English compares fine labels, Chinese
// compares strategy categories; both remain selectable.
enum class StructureGranularity { label, strategy };

StructureGranularity default_granularity(corpus::Language target_language);

// Human/system annotation sets must cover the same pair ids (a mismatch
// is an error listing the symmetric difference); both sets hold one
// annotation per pair on the same side.
ConsistencySummary consistency(const std::vector<annotator::Annotation>& human,
                               const std::vector<annotator::Annotation>& system,
                               const std::map<std::string, corpus::Register>& registers,
                               StructureGranularity granularity);

struct DiversitySummary {
  int distinct_labels = 0;
  int label_universe = 0;
  int distinct_strategies = 0;
  int strategy_universe = 0;
};

DiversitySummary diversity(const std::vector<annotator::Annotation>& annotations,
                           int label_universe, int strategy_universe);

// ---- report assembly ----------------------------------------------------

// Prepared inputs for one system on one subset. Annotations are present
// only when a parsed version of the system output was supplied.
struct SystemInputs {
  std::string name;
  std::optional<std::vector<annotator::Annotation>> annotations;  // target side, pair order
  std::vector<metrics::Segment> hypotheses;                       // pair order
};

struct SubsetInputs {
  extractor::SubsetId subset = extractor::SubsetId::zhbei2en;
  corpus::Language target_language = corpus::Language::en;
  std::vector<std::string> pair_ids;  // presentation order
  std::map<std::string, corpus::Register> registers;
  std::vector<annotator::Annotation> human_source;  // pair order, source side
  std::vector<annotator::Annotation> human_target;  // pair order, target side
  std::vector<metrics::Segment> references;         // pair order
  std::vector<SystemInputs> systems;                // CLI/config order
  int label_universe = 0;     // 0 -> language default
  int strategy_universe = 0;  // 0 -> language default
  std::optional<StructureGranularity> granularity;  // unset -> language default
};

struct SystemBlock {
  std::string name;
  std::optional<ConsistencySummary> consistency;  // needs system annotations
  std::optional<DiversitySummary> diversity;
  std::vector<metrics::MetricScore> scores;  // BLEU then chrF++; COMET stays reserved
};

struct SubsetReport {
  extractor::SubsetId subset = extractor::SubsetId::zhbei2en;
  corpus::Language target_language = corpus::Language::en;
  int n_pairs = 0;
  std::vector<std::string> warnings;  // e.g. registers with no pairs
  ProportionTable source_table;       // human annotations of the source side
  ProportionTable target_table;       // human + annotated systems
  DiversitySummary human_diversity;
  std::vector<SystemBlock> systems;
};

struct Report {
  std::vector<SubsetReport> subsets;
};

SubsetReport evaluate_subset(const SubsetInputs& in);
Report compare_report(const std::vector<SubsetInputs>& subsets);

void render_json(std::ostream& os, const Report& report);
void render_markdown(std::ostream& os, const Report& report);
// One CSV per table, written under dir; returns the file names written.
std::vector<std::string> render_csv(const std::string& dir, const Report& report);

}  // namespace passivelens::evaluator

#endif
