#include "passivelens/annotator.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "passivelens/error.hpp"
#include "passivelens/text_util.hpp"

namespace passivelens::annotator {

using corpus::ParsedSentence;
using labels::StrategyLabel;

namespace {

// One firing location of a rule: the marker token decides precedence
// inside the rule, the evidence lists every index the site rests on.
struct Site {
  int marker = 0;
  StrategyLabel label = StrategyLabel::ZH_NA;
  std::vector<int> evidence;
};

RuleOutcome winner(const std::vector<Site>& sites) {
  if (sites.empty()) return RuleOutcome::no_match();
  const Site* best = &sites.front();
  for (const auto& s : sites)
    if (s.marker < best->marker) best = &s;
  std::set<int> evidence;
  for (const auto& s : sites)
    if (s.label == best->label) evidence.insert(s.evidence.begin(), s.evidence.end());
  return {RuleStatus::MATCHED, best->label, {evidence.begin(), evidence.end()}};
}

// First token whose semantic head is 0 (the semantic root), or 0.
int sem_root(const ParsedSentence& s) {
  for (const auto& t : s.tokens)
    if (t.sem_head && *t.sem_head == 0) return t.index;
  return 0;
}

bool sem_is(const corpus::ParsedToken& t, const char* label) {
  return t.sem_label && *t.sem_label == label;
}

bool is_fronted_label(const corpus::ParsedToken& t) {
  return sem_is(t, "PAT") || sem_is(t, "FOB");
}

// Every AGT depending on the root must sit inside [lo, hi] (exclusive
// bounds); rules place the optional agent slot there.
bool agents_within(const ParsedSentence& s, int root, int lo, int hi) {
  for (const auto& t : s.tokens)
    if (sem_is(t, "AGT") && t.sem_head && *t.sem_head == root)
      if (t.index <= lo || t.index >= hi) return false;
  return true;
}

// Fronted patient/object before `marker` whose semantic head is `root`.
bool has_fronted_before(const ParsedSentence& s, int marker, int root) {
  for (const auto& t : s.tokens)
    if (t.index < marker && is_fronted_label(t) && t.sem_head && *t.sem_head == root)
      return true;
  return false;
}

const std::map<std::string, StrategyLabel>& lexical_forms() {
  static const std::map<std::string, StrategyLabel> m{
      {"受", StrategyLabel::SHOU},   {"受到", StrategyLabel::SHOU},
      {"遭", StrategyLabel::ZAO},    {"遭到", StrategyLabel::ZAO},
      {"惨遭", StrategyLabel::ZAO},  {"挨", StrategyLabel::AI},
      {"蒙", StrategyLabel::MENG}};
  return m;
}

const std::map<std::string, StrategyLabel>& light_verb_forms() {
  static const std::map<std::string, StrategyLabel> m{
      {"得到", StrategyLabel::LV_DEDAO},   {"获", StrategyLabel::LV_HUO},
      {"获得", StrategyLabel::LV_HUO},     {"得以", StrategyLabel::LV_DEYI},
      {"经", StrategyLabel::LV_JING},      {"经过", StrategyLabel::LV_JING},
      {"予", StrategyLabel::LV_YU},        {"予以", StrategyLabel::LV_YU},
      {"给予", StrategyLabel::LV_JIYU},    {"加以", StrategyLabel::LV_JIAYI},
      {"进行", StrategyLabel::LV_JINXING}, {"实施", StrategyLabel::LV_SHISHI},
      {"付诸", StrategyLabel::LV_FUZHU}};
  return m;
}

const std::map<std::string, StrategyLabel>& marked_chain_forms() {
  static const std::map<std::string, StrategyLabel> m{
      {"给", StrategyLabel::GEI}, {"让", StrategyLabel::RANG}, {"为", StrategyLabel::WEI}};
  return m;
}

SentenceAnnotation build(StrategyLabel label, std::vector<int> evidence) {
  SentenceAnnotation a;
  a.label = label;
  a.strategy = labels::strategy_of(label);
  a.voice = labels::voice_of(a.strategy);
  a.evidence = std::move(evidence);
  return a;
}

}  // namespace

RuleConfig RuleConfig::defaults() {
  RuleConfig cfg;
  cfg.precedence_zh = kZhRuleUnits;
  cfg.precedence_en = {"BE", "GET", "HAVE", "BECOME"};
  cfg.verb_tag_pattern = "^V";
  return cfg;
}

RuleOutcome match_marked_passive(const ParsedSentence& s) {
  std::vector<Site> sites;
  bool chain_form_present = false;
  for (const auto& t : s.tokens) {
    if (t.form == "被") {
      if (t.pos == "LB") sites.push_back({t.index, StrategyLabel::BEI_L, {t.index}});
      else if (t.pos == "SB") sites.push_back({t.index, StrategyLabel::BEI_S, {t.index}});
    }
    if (marked_chain_forms().count(t.form)) chain_form_present = true;
  }
  if (s.has_semantic_layer()) {
    const int root = sem_root(s);
    if (root != 0) {
      for (const auto& t : s.tokens) {
        auto it = marked_chain_forms().find(t.form);
        if (it == marked_chain_forms().end() || !sem_is(t, "mRELA")) continue;
        const int m = t.index;
        if (root > m && has_fronted_before(s, m, root) && agents_within(s, root, m, root))
          sites.push_back({m, it->second, {m}});
      }
    }
  } else if (sites.empty() && chain_form_present) {
    return RuleOutcome::not_evaluable();
  }
  return winner(sites);
}

RuleOutcome match_lexical_passive(const ParsedSentence& s) {
  std::vector<Site> sites;
  for (const auto& t : s.tokens) {
    auto it = lexical_forms().find(t.form);
    if (it != lexical_forms().end()) sites.push_back({t.index, it->second, {t.index}});
  }
  return winner(sites);
}

RuleOutcome match_notional_passive(const ParsedSentence& s) {
  if (!s.has_semantic_layer()) return RuleOutcome::not_evaluable();
  const int root = sem_root(s);
  if (root == 0) return RuleOutcome::no_match();
  for (const auto& t : s.tokens)
    if (sem_is(t, "AGT")) return RuleOutcome::no_match();
  std::vector<Site> sites;
  for (const auto& t : s.tokens) {
    if (t.index >= root || !is_fronted_label(t) || !t.sem_head || *t.sem_head != root) continue;
    bool relator_between = false;
    for (int j = t.index + 1; j < root; ++j)
      if (sem_is(s.token(j), "mRELA")) relator_between = true;
    if (!relator_between) sites.push_back({t.index, StrategyLabel::NOTIONAL, {t.index}});
  }
  return winner(sites);
}

RuleOutcome match_topic_you(const ParsedSentence& s) {
  bool you_present = false;
  for (const auto& t : s.tokens)
    if (t.form == "由") you_present = true;
  if (!s.has_semantic_layer())
    return you_present ? RuleOutcome::not_evaluable() : RuleOutcome::no_match();
  const int root = sem_root(s);
  if (root == 0) return RuleOutcome::no_match();
  std::vector<Site> sites;
  for (const auto& t : s.tokens) {
    if (t.form != "由" || !sem_is(t, "mRELA")) continue;
    const int m = t.index;
    if (root > m && has_fronted_before(s, m, root) && agents_within(s, root, m, root))
      sites.push_back({m, StrategyLabel::YOU, {m}});
  }
  return winner(sites);
}

RuleOutcome match_topic_shide(const ParsedSentence& s) {
  std::vector<Site> sites;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const auto& shi = s.token(i);
    if (shi.form != "是" || shi.pos != "VC") continue;
    for (int j = i + 1; j <= n; ++j) {
      if (s.token(j).form != "的") continue;
      const bool clause_final =
          j == n || s.token(j + 1).form == "，" || s.token(j + 1).form == "。" ||
          s.token(j + 1).form == "," || s.token(j + 1).form == ".";
      if (clause_final) {
        sites.push_back({i, StrategyLabel::SHI_DE, {i, j}});
        break;
      }
    }
  }
  return winner(sites);
}

RuleOutcome match_topic_sentence(const ParsedSentence& s) {
  const RuleOutcome you = match_topic_you(s);
  if (you.status == RuleStatus::MATCHED) return you;
  const RuleOutcome shide = match_topic_shide(s);
  if (shide.status == RuleStatus::MATCHED) return shide;
  if (you.status == RuleStatus::NOT_EVALUABLE) return you;
  return shide;
}

RuleOutcome match_light_verb(const ParsedSentence& s, const RuleConfig& cfg) {
  std::regex verb_re;
  try {
    verb_re = std::regex(cfg.verb_tag_pattern);
  } catch (const std::regex_error&) {
    throw Error("invalid verb_tag_pattern regex \"" + cfg.verb_tag_pattern + "\"");
  }
  std::vector<Site> sites;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    auto it = light_verb_forms().find(s.token(i).form);
    if (it == light_verb_forms().end()) continue;
    for (int j = i + 1; j <= std::min(n, i + 4); ++j) {
      const auto& cand = s.token(j);
      if (text::is_punct_token(cand.form)) break;
      if (std::regex_search(cand.pos, verb_re)) {
        sites.push_back({i, it->second, {i, j}});
        break;
      }
    }
  }
  return winner(sites);
}

RuleOutcome match_causative(const ParsedSentence& s) {
  std::vector<Site> sites;
  for (const auto& t : s.tokens) {
    if (t.form == "使") sites.push_back({t.index, StrategyLabel::CAUS_SHI, {t.index}});
    else if (t.form == "令") sites.push_back({t.index, StrategyLabel::CAUS_LING, {t.index}});
  }
  return winner(sites);
}

RuleOutcome match_resultative(const ParsedSentence& s) {
  std::vector<Site> sites;
  bool jiang_present = false;
  for (const auto& t : s.tokens) {
    if (t.form == "把" && t.pos == "BA")
      sites.push_back({t.index, StrategyLabel::RES_BA, {t.index}});
    if (t.form == "将") jiang_present = true;
  }
  if (s.has_semantic_layer()) {
    const int root = sem_root(s);
    if (root != 0) {
      for (const auto& t : s.tokens) {
        if (t.form != "将" || !sem_is(t, "mRELA")) continue;
        const int m = t.index;
        if (root <= m) continue;
        bool patient_after = false;
        for (int j = m + 1; j < root; ++j) {
          const auto& cand = s.token(j);
          if (sem_is(cand, "PAT") && cand.sem_head && *cand.sem_head == root) patient_after = true;
        }
        // the optional agent precedes 将 in this pattern
        if (patient_after && agents_within(s, root, 0, m))
          sites.push_back({m, StrategyLabel::RES_JIANG, {m}});
      }
    }
  } else if (sites.empty() && jiang_present) {
    return RuleOutcome::not_evaluable();
  }
  return winner(sites);
}

namespace {

RuleOutcome run_zh_unit(const std::string& name, const ParsedSentence& s, const RuleConfig& cfg) {
  if (name == "marked") return match_marked_passive(s);
  if (name == "lexical") return match_lexical_passive(s);
  if (name == "resultative") return match_resultative(s);
  if (name == "topic_you") return match_topic_you(s);
  if (name == "topic_shide") return match_topic_shide(s);
  if (name == "light_verb") return match_light_verb(s, cfg);
  if (name == "causative") return match_causative(s);
  if (name == "notional") return match_notional_passive(s);
  throw Error("unknown rule unit \"" + name + "\" in precedence.zh");
}

}  // namespace

SentenceAnnotation annotate_zh(const ParsedSentence& s, const RuleConfig& cfg) {
  if (s.language != corpus::Language::zh)
    throw Error("annotate_zh called on a non-Chinese sentence \"" + s.id + "\"");
  for (const auto& name : cfg.precedence_zh) {
    const RuleOutcome o = run_zh_unit(name, s, cfg);
    if (o.status == RuleStatus::MATCHED) return build(o.label, o.evidence);
  }
  return build(StrategyLabel::ZH_NA, {});
}

SentenceAnnotation annotate_en(const ParsedSentence& s, const RuleConfig& cfg) {
  if (s.language != corpus::Language::en)
    throw Error("annotate_en called on a non-English sentence \"" + s.id + "\"");
  bool has_nsubjpass = false;
  for (const auto& t : s.tokens)
    if (t.dep_label == "nsubjpass") has_nsubjpass = true;

  const int n = s.size();
  for (const auto& name : cfg.precedence_en) {
    StrategyLabel label;
    try {
      label = labels::parse_label(name);
    } catch (const Error&) {
      throw Error("unknown marker \"" + name + "\" in precedence.en");
    }
    if (labels::label_language(label) != corpus::Language::en || label == StrategyLabel::EN_NA)
      throw Error("invalid marker \"" + name + "\" in precedence.en");
    std::string lemma = name;
    for (auto& c : lemma) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

    std::set<int> evidence;
    for (int i = 1; i <= n; ++i) {
      const auto& t = s.token(i);
      if (t.lemma != lemma) continue;
      if (t.dep_label == "auxpass" || (t.dep_label == "aux" && has_nsubjpass)) evidence.insert(i);
      const bool window_rule = label == StrategyLabel::GET || label == StrategyLabel::HAVE;
      if (window_rule) {
        const int lo = label == StrategyLabel::GET ? i + 1 : i + 2;
        const int hi = label == StrategyLabel::GET ? i + 4 : i + 5;
        for (int j = lo; j <= std::min(n, hi); ++j) {
          const auto& cand = s.token(j);
          if (cand.pos == "VBN" && cand.dep_label == "ccomp" && cand.dep_head == i) {
            evidence.insert(i);
            evidence.insert(j);
            break;
          }
        }
      }
    }
    if (!evidence.empty()) return build(label, {evidence.begin(), evidence.end()});
  }
  return build(StrategyLabel::EN_NA, {});
}

SentenceAnnotation annotate(const ParsedSentence& s, const RuleConfig& cfg) {
  return s.language == corpus::Language::zh ? annotate_zh(s, cfg) : annotate_en(s, cfg);
}

std::string to_string(Side s) { return s == Side::source ? "source" : "target"; }

Side parse_side(const std::string& s) {
  if (s == "source") return Side::source;
  if (s == "target") return Side::target;
  throw Error("unknown side \"" + s + "\" (expected source or target)");
}

Annotation make_annotation(const std::string& pair_id, Side side, const SentenceAnnotation& sa) {
  Annotation a;
  a.pair_id = pair_id;
  a.side = side;
  a.label = sa.label;
  a.strategy = sa.strategy;
  a.voice = sa.voice;
  a.evidence = sa.evidence;
  a.verified = false;
  return a;
}

namespace {

std::string join_evidence(const std::vector<int>& evidence) {
  std::string out;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(evidence[i]);
  }
  return out;
}

std::vector<int> parse_evidence(const std::string& field, const std::string& where) {
  std::vector<int> out;
  if (field.empty()) return out;
  std::stringstream ss(field);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw Error(where + ": bad evidence index \"" + part + "\"");
    }
  }
  return out;
}

}  // namespace

void write_annotations(std::ostream& os, const std::vector<Annotation>& annotations) {
  os << "pair_id\tside\tlabel\tstrategy\tvoice\tevidence\tverified\n";
  for (const auto& a : annotations) {
    os << a.pair_id << '\t' << to_string(a.side) << '\t' << labels::to_string(a.label) << '\t'
       << labels::to_string(a.strategy) << '\t' << labels::to_string(a.voice) << '\t'
       << join_evidence(a.evidence) << '\t' << (a.verified ? "true" : "false") << '\n';
  }
}

std::vector<Annotation> read_annotations(std::istream& is, const std::string& origin) {
  std::vector<Annotation> out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto fields = text::split_tsv(line);
    if (!saw_header) {
      if (fields.size() != 7 || fields[0] != "pair_id")
        throw Error(where + ": bad annotation header");
      saw_header = true;
      continue;
    }
    if (fields.size() != 7)
      throw Error(where + ": malformed line, expected 7 columns");
    Annotation a;
    a.pair_id = fields[0];
    a.side = parse_side(fields[1]);
    try {
      a.label = labels::parse_label(fields[2]);
      a.strategy = labels::parse_strategy(fields[3]);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    if (fields[4] == "PASSIVE") a.voice = labels::Voice::PASSIVE;
    else if (fields[4] == "ACTIVE") a.voice = labels::Voice::ACTIVE;
    else throw Error(where + ": unknown voice \"" + fields[4] + "\"");
    if (a.strategy != labels::strategy_of(a.label) || a.voice != labels::voice_of(a.strategy))
      throw Error(where + ": strategy/voice do not match label " + fields[2]);
    a.evidence = parse_evidence(fields[5], where);
    if (fields[6] == "true") a.verified = true;
    else if (fields[6] == "false") a.verified = false;
    else throw Error(where + ": unknown verified flag \"" + fields[6] + "\"");
    out.push_back(std::move(a));
  }
  if (!saw_header) throw Error(origin + ": empty annotation file (missing header)");
  return out;
}

std::vector<Annotation> load_annotations(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open annotation file \"" + path + "\"");
  return read_annotations(in, path);
}

std::vector<Correction> read_corrections(std::istream& is, const std::string& origin) {
  std::vector<Correction> out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || line[0] == '#') continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    auto fields = text::split_tsv(line);
    if (!saw_header && fields.size() == 3 && fields[0] == "pair_id") {
      saw_header = true;
      continue;
    }
    saw_header = true;
    if (fields.size() != 3)
      throw Error(where + ": malformed line, expected 3 columns");
    Correction c;
    c.pair_id = fields[0];
    c.side = parse_side(fields[1]);
    try {
      c.corrected_label = labels::parse_label(fields[2]);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Correction> load_corrections(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corrections file \"" + path + "\"");
  return read_corrections(in, path);
}

std::vector<Annotation> apply_corrections(const std::vector<Annotation>& annotations,
                                          const std::vector<Correction>& corrections) {
  std::vector<Annotation> out = annotations;
  for (const auto& c : corrections) {
    bool pair_seen = false;
    bool applied = false;
    for (auto& a : out) {
      if (a.pair_id != c.pair_id) continue;
      pair_seen = true;
      if (a.side != c.side) continue;
      if (labels::label_language(a.label) != labels::label_language(c.corrected_label))
        throw Error("correction for pair \"" + c.pair_id + "\" uses a label of the wrong language");
      a.label = c.corrected_label;
      a.strategy = labels::strategy_of(a.label);
      a.voice = labels::voice_of(a.strategy);
      a.verified = true;
      applied = true;
    }
    if (!pair_seen)
      throw Error("correction references unknown pair id \"" + c.pair_id + "\"");
    if (!applied)
      throw Error("correction for pair \"" + c.pair_id + "\" names a side with no annotation");
  }
  return out;
}

}  // namespace passivelens::annotator
