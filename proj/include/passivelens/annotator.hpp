#ifndef PASSIVELENS_ANNOTATOR_HPP
#define PASSIVELENS_ANNOTATOR_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "passivelens/corpus.hpp"
#include "passivelens/labels.hpp"

namespace passivelens::annotator {

// Rule-engine knobs. The precedence lists hold rule-unit names (Chinese)
// and marker labels (English); see kZhRuleUnits for the valid unit names.
struct RuleConfig {
  std::vector<std::string> precedence_zh;
  std::vector<std::string> precedence_en;
  std::string verb_tag_pattern = "^V";  // PoS regex for the light-verb rule

  static RuleConfig defaults();
};

// Chinese rule units, in default precedence order: explicit passive
// morphology first, weaker cues later.
inline const std::vector<std::string> kZhRuleUnits{
    "marked", "lexical", "resultative", "topic_you",
    "topic_shide", "light_verb", "causative", "notional"};

enum class RuleStatus {
  MATCHED,
  NO_MATCH,
  NOT_EVALUABLE,  // the rule needs the semantic layer and it is absent
};

struct RuleOutcome {
  RuleStatus status = RuleStatus::NO_MATCH;
  labels::StrategyLabel label = labels::StrategyLabel::ZH_NA;  // valid when MATCHED
  std::vector<int> evidence;  // firing sites of the winning label; includes its marker token

  static RuleOutcome no_match() { return {}; }
  static RuleOutcome not_evaluable() { return {RuleStatus::NOT_EVALUABLE, labels::StrategyLabel::ZH_NA, {}}; }
};

// Table-driven matchers. Each considers every firing site in the
// sentence; when sites with different labels fire inside one rule, the
// earliest marker token decides the label and the evidence is the union
// of that label's sites.
RuleOutcome match_marked_passive(const corpus::ParsedSentence& s);   // BEI_L/BEI_S/GEI/RANG/WEI
RuleOutcome match_lexical_passive(const corpus::ParsedSentence& s);  // SHOU/ZAO/AI/MENG
RuleOutcome match_notional_passive(const corpus::ParsedSentence& s); // NOTIONAL
RuleOutcome match_topic_sentence(const corpus::ParsedSentence& s);   // YOU then SHI_DE
RuleOutcome match_light_verb(const corpus::ParsedSentence& s, const RuleConfig& cfg);  // LV_*
RuleOutcome match_causative(const corpus::ParsedSentence& s);        // CAUS_SHI/CAUS_LING
RuleOutcome match_resultative(const corpus::ParsedSentence& s);      // RES_BA/RES_JIANG

// Finer-grained units used by the precedence list (topic split in two).
RuleOutcome match_topic_you(const corpus::ParsedSentence& s);
RuleOutcome match_topic_shide(const corpus::ParsedSentence& s);

// Label + derived category/voice + evidence for one sentence.
struct SentenceAnnotation {
  labels::StrategyLabel label = labels::StrategyLabel::ZH_NA;
  labels::Strategy strategy = labels::Strategy::OTHER_ACTIVE;
  labels::Voice voice = labels::Voice::ACTIVE;
  std::vector<int> evidence;
};

// Runs the Chinese rule units in precedence order; first match wins,
// rules that are not evaluable are skipped, default ZH_NA.
SentenceAnnotation annotate_zh(const corpus::ParsedSentence& s, const RuleConfig& cfg);

// English markers in precedence order (default BE > GET > HAVE > BECOME);
// a marker fires on (a) lemma + auxpass, (b) lemma + aux alongside an
// nsubjpass token, plus the ccomp window rules for GET and HAVE.
SentenceAnnotation annotate_en(const corpus::ParsedSentence& s, const RuleConfig& cfg);

// Dispatch on s.language.
SentenceAnnotation annotate(const corpus::ParsedSentence& s, const RuleConfig& cfg);

enum class Side { source, target };

std::string to_string(Side s);
Side parse_side(const std::string& s);

struct Annotation {
  std::string pair_id;
  Side side = Side::target;
  labels::StrategyLabel label = labels::StrategyLabel::ZH_NA;
  labels::Strategy strategy = labels::Strategy::OTHER_ACTIVE;
  labels::Voice voice = labels::Voice::ACTIVE;
  std::vector<int> evidence;
  bool verified = false;  // true only after a manual correction was applied
};

Annotation make_annotation(const std::string& pair_id, Side side, const SentenceAnnotation& sa);

struct Correction {
  std::string pair_id;
  Side side = Side::target;
  labels::StrategyLabel corrected_label = labels::StrategyLabel::ZH_NA;
};

// TSV round-trip: pair_id, side, label, strategy, voice, evidence, verified.
void write_annotations(std::ostream& os, const std::vector<Annotation>& annotations);
std::vector<Annotation> read_annotations(std::istream& is, const std::string& origin);
std::vector<Annotation> load_annotations(const std::string& path);

// TSV: pair_id, side, corrected_label.
std::vector<Correction> read_corrections(std::istream& is, const std::string& origin);
std::vector<Correction> load_corrections(const std::string& path);

// Replaces labels for matching (pair_id, side) rows, re-derives strategy
// and voice and sets verified. A correction whose pair_id appears in no
// annotation is an error.
std::vector<Annotation> apply_corrections(const std::vector<Annotation>& annotations,
                                          const std::vector<Correction>& corrections);

}  // namespace passivelens::annotator

#endif
