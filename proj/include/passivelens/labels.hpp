#ifndef PASSIVELENS_LABELS_HPP
#define PASSIVELENS_LABELS_HPP

#include <string>
#include <vector>

#include "passivelens/corpus.hpp"

namespace passivelens::labels {

using corpus::Language;

// Fine-grained translation-strategy label of a sentence. Chinese labels
// name the marker (or marker family) that fired; BE/GET/HAVE/BECOME are
// the English passive markers; ZH_NA/EN_NA are the active-voice defaults.
enum class StrategyLabel {
  // Chinese
  BEI_L,
  BEI_S,
  GEI,
  RANG,
  WEI,
  SHOU,
  ZAO,
  AI,
  MENG,
  NOTIONAL,
  YOU,
  SHI_DE,
  LV_DEDAO,
  LV_HUO,
  LV_DEYI,
  LV_JING,
  LV_YU,
  LV_JIYU,
  LV_JIAYI,
  LV_JINXING,
  LV_SHISHI,
  LV_FUZHU,
  CAUS_SHI,
  CAUS_LING,
  RES_JIANG,
  RES_BA,
  ZH_NA,
  // English
  BE,
  GET,
  HAVE,
  BECOME,
  EN_NA,
};

// Structural category of a label: eight for Chinese, five for English.
enum class Strategy {
  SYNTACTIC_PASSIVE,
  LEXICAL_PASSIVE,
  NOTIONAL_PASSIVE,
  TOPIC_SENTENCE,
  LIGHT_VERB,
  CAUSATIVE,
  RESULTATIVE,
  OTHER_ACTIVE,
  BE,
  GET,
  HAVE,
  BECOME,
  ACTIVE,
};

enum class Voice { PASSIVE, ACTIVE };

Strategy strategy_of(StrategyLabel label);

// Only syntactic and lexical passives count as passive voice in Chinese;
// in English every marker label does.
Voice voice_of(Strategy s);

Language label_language(StrategyLabel label);

std::string to_string(StrategyLabel label);
std::string to_string(Strategy s);
std::string to_string(Voice v);
StrategyLabel parse_label(const std::string& s);
Strategy parse_strategy(const std::string& s);

// Display names used in the proportion tables ("Syntactic passive", "N/A", ...).
std::string display_name(Strategy s);

const std::vector<StrategyLabel>& all_labels();
const std::vector<StrategyLabel>& labels_of(Language l);
const std::vector<Strategy>& strategies_of(Language l);

}  // namespace passivelens::labels

#endif
