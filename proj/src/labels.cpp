#include "passivelens/labels.hpp"

#include <array>
#include <utility>

#include "passivelens/error.hpp"

namespace passivelens::labels {

namespace {

constexpr std::array<std::pair<StrategyLabel, const char*>, 32> kLabelNames{{
    {StrategyLabel::BEI_L, "BEI_L"},
    {StrategyLabel::BEI_S, "BEI_S"},
    {StrategyLabel::GEI, "GEI"},
    {StrategyLabel::RANG, "RANG"},
    {StrategyLabel::WEI, "WEI"},
    {StrategyLabel::SHOU, "SHOU"},
    {StrategyLabel::ZAO, "ZAO"},
    {StrategyLabel::AI, "AI"},
    {StrategyLabel::MENG, "MENG"},
    {StrategyLabel::NOTIONAL, "NOTIONAL"},
    {StrategyLabel::YOU, "YOU"},
    {StrategyLabel::SHI_DE, "SHI_DE"},
    {StrategyLabel::LV_DEDAO, "LV_DEDAO"},
    {StrategyLabel::LV_HUO, "LV_HUO"},
    {StrategyLabel::LV_DEYI, "LV_DEYI"},
    {StrategyLabel::LV_JING, "LV_JING"},
    {StrategyLabel::LV_YU, "LV_YU"},
    {StrategyLabel::LV_JIYU, "LV_JIYU"},
    {StrategyLabel::LV_JIAYI, "LV_JIAYI"},
    {StrategyLabel::LV_JINXING, "LV_JINXING"},
    {StrategyLabel::LV_SHISHI, "LV_SHISHI"},
    {StrategyLabel::LV_FUZHU, "LV_FUZHU"},
    {StrategyLabel::CAUS_SHI, "CAUS_SHI"},
    {StrategyLabel::CAUS_LING, "CAUS_LING"},
    {StrategyLabel::RES_JIANG, "RES_JIANG"},
    {StrategyLabel::RES_BA, "RES_BA"},
    {StrategyLabel::ZH_NA, "ZH_NA"},
    {StrategyLabel::BE, "BE"},
    {StrategyLabel::GET, "GET"},
    {StrategyLabel::HAVE, "HAVE"},
    {StrategyLabel::BECOME, "BECOME"},
    {StrategyLabel::EN_NA, "EN_NA"},
}};

constexpr std::array<std::pair<Strategy, const char*>, 13> kStrategyNames{{
    {Strategy::SYNTACTIC_PASSIVE, "SYNTACTIC_PASSIVE"},
    {Strategy::LEXICAL_PASSIVE, "LEXICAL_PASSIVE"},
    {Strategy::NOTIONAL_PASSIVE, "NOTIONAL_PASSIVE"},
    {Strategy::TOPIC_SENTENCE, "TOPIC_SENTENCE"},
    {Strategy::LIGHT_VERB, "LIGHT_VERB"},
    {Strategy::CAUSATIVE, "CAUSATIVE"},
    {Strategy::RESULTATIVE, "RESULTATIVE"},
    {Strategy::OTHER_ACTIVE, "OTHER_ACTIVE"},
    {Strategy::BE, "BE"},
    {Strategy::GET, "GET"},
    {Strategy::HAVE, "HAVE"},
    {Strategy::BECOME, "BECOME"},
    {Strategy::ACTIVE, "ACTIVE"},
}};

}  // namespace

Strategy strategy_of(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::BEI_L:
    case StrategyLabel::BEI_S:
    case StrategyLabel::GEI:
    case StrategyLabel::RANG:
    case StrategyLabel::WEI:
      return Strategy::SYNTACTIC_PASSIVE;
    case StrategyLabel::SHOU:
    case StrategyLabel::ZAO:
    case StrategyLabel::AI:
    case StrategyLabel::MENG:
      return Strategy::LEXICAL_PASSIVE;
    case StrategyLabel::NOTIONAL:
      return Strategy::NOTIONAL_PASSIVE;
    case StrategyLabel::YOU:
    case StrategyLabel::SHI_DE:
      return Strategy::TOPIC_SENTENCE;
    case StrategyLabel::LV_DEDAO:
    case StrategyLabel::LV_HUO:
    case StrategyLabel::LV_DEYI:
    case StrategyLabel::LV_JING:
    case StrategyLabel::LV_YU:
    case StrategyLabel::LV_JIYU:
    case StrategyLabel::LV_JIAYI:
    case StrategyLabel::LV_JINXING:
    case StrategyLabel::LV_SHISHI:
    case StrategyLabel::LV_FUZHU:
      return Strategy::LIGHT_VERB;
    case StrategyLabel::CAUS_SHI:
    case StrategyLabel::CAUS_LING:
      return Strategy::CAUSATIVE;
    case StrategyLabel::RES_JIANG:
    case StrategyLabel::RES_BA:
      return Strategy::RESULTATIVE;
    case StrategyLabel::ZH_NA:
      return Strategy::OTHER_ACTIVE;
    case StrategyLabel::BE:
      return Strategy::BE;
    case StrategyLabel::GET:
      return Strategy::GET;
    case StrategyLabel::HAVE:
      return Strategy::HAVE;
    case StrategyLabel::BECOME:
      return Strategy::BECOME;
    case StrategyLabel::EN_NA:
      return Strategy::ACTIVE;
  }
  throw Error("invalid label value");
}

Voice voice_of(Strategy s) {
  switch (s) {
    case Strategy::SYNTACTIC_PASSIVE:
    case Strategy::LEXICAL_PASSIVE:
    case Strategy::BE:
    case Strategy::GET:
    case Strategy::HAVE:
    case Strategy::BECOME:
      return Voice::PASSIVE;
    default:
      return Voice::ACTIVE;
  }
}

Language label_language(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::BE:
    case StrategyLabel::GET:
    case StrategyLabel::HAVE:
    case StrategyLabel::BECOME:
    case StrategyLabel::EN_NA:
      return Language::en;
    default:
      return Language::zh;
  }
}

std::string to_string(StrategyLabel label) {
  for (const auto& [l, name] : kLabelNames)
    if (l == label) return name;
  return "?";
}

std::string to_string(Strategy s) {
  for (const auto& [v, name] : kStrategyNames)
    if (v == s) return name;
  return "?";
}

std::string to_string(Voice v) { return v == Voice::PASSIVE ? "PASSIVE" : "ACTIVE"; }

StrategyLabel parse_label(const std::string& s) {
  for (const auto& [l, name] : kLabelNames)
    if (s == name) return l;
  throw Error("unknown strategy label \"" + s + "\"");
}

Strategy parse_strategy(const std::string& s) {
  for (const auto& [v, name] : kStrategyNames)
    if (s == name) return v;
  throw Error("unknown strategy \"" + s + "\"");
}

std::string display_name(Strategy s) {
  switch (s) {
    case Strategy::SYNTACTIC_PASSIVE: return "Syntactic passive";
    case Strategy::LEXICAL_PASSIVE: return "Lexical passive";
    case Strategy::NOTIONAL_PASSIVE: return "Notional passive";
    case Strategy::TOPIC_SENTENCE: return "Topic sentence";
    case Strategy::LIGHT_VERB: return "Light verb";
    case Strategy::CAUSATIVE: return "Causative";
    case Strategy::RESULTATIVE: return "Resultative";
    case Strategy::OTHER_ACTIVE: return "N/A";
    case Strategy::BE: return "BE";
    case Strategy::GET: return "GET";
    case Strategy::HAVE: return "HAVE";
    case Strategy::BECOME: return "BECOME";
    case Strategy::ACTIVE: return "N/A";
  }
  return "?";
}

const std::vector<StrategyLabel>& all_labels() {
  static const std::vector<StrategyLabel> labels = [] {
    std::vector<StrategyLabel> v;
    for (const auto& [l, name] : kLabelNames) v.push_back(l);
    return v;
  }();
  return labels;
}

const std::vector<StrategyLabel>& labels_of(Language lang) {
  static const std::vector<StrategyLabel> zh = [] {
    std::vector<StrategyLabel> v;
    for (auto l : all_labels())
      if (label_language(l) == Language::zh) v.push_back(l);
    return v;
  }();
  static const std::vector<StrategyLabel> en = [] {
    std::vector<StrategyLabel> v;
    for (auto l : all_labels())
      if (label_language(l) == Language::en) v.push_back(l);
    return v;
  }();
  return lang == Language::zh ? zh : en;
}

const std::vector<Strategy>& strategies_of(Language lang) {
  static const std::vector<Strategy> zh{
      Strategy::SYNTACTIC_PASSIVE, Strategy::LEXICAL_PASSIVE, Strategy::NOTIONAL_PASSIVE,
      Strategy::TOPIC_SENTENCE,    Strategy::LIGHT_VERB,      Strategy::CAUSATIVE,
      Strategy::RESULTATIVE,       Strategy::OTHER_ACTIVE};
  static const std::vector<Strategy> en{Strategy::BE, Strategy::GET, Strategy::HAVE,
                                        Strategy::BECOME, Strategy::ACTIVE};
  return lang == Language::zh ? zh : en;
}

}  // namespace passivelens::labels
