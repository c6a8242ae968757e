#include "passivelens/extractor.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "passivelens/error.hpp"
#include "passivelens/text_util.hpp"

namespace passivelens::extractor {

namespace {

constexpr int kBeWindow = 4;       // VBN must follow "be" within this many tokens
constexpr int kMaxEnWords = 100;   // English side cap for cleaning
constexpr double kRatioLo = 0.5;   // inclusive zh-chars / en-words bounds
constexpr double kRatioHi = 2.2;

}  // namespace

std::vector<PassiveMatch> detect_be_passive(const corpus::ParsedSentence& s) {
  std::vector<PassiveMatch> out;
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const auto& t = s.token(i);
    if (t.lemma != "be" || t.dep_label != "auxpass") continue;
    for (int j = i + 1; j <= std::min(n, i + kBeWindow); ++j) {
      if (s.token(j).pos == "VBN") {
        out.push_back({Construction::BE, i, j, std::nullopt});
        break;
      }
    }
  }
  return out;
}

std::vector<PassiveMatch> detect_bei_passive(const corpus::ParsedSentence& s) {
  std::vector<PassiveMatch> out;
  for (int i = 1; i <= s.size(); ++i) {
    const auto& t = s.token(i);
    if (t.form != "被") continue;
    if (t.pos == "LB")
      out.push_back({Construction::BEI, i, std::nullopt, true});
    else if (t.pos == "SB")
      out.push_back({Construction::BEI, i, std::nullopt, false});
  }
  return out;
}

std::string to_string(CleaningReason r) {
  switch (r) {
    case CleaningReason::OK: return "OK";
    case CleaningReason::TOO_LONG: return "TOO_LONG";
    case CleaningReason::RATIO_OUT_OF_RANGE: return "RATIO_OUT_OF_RANGE";
  }
  return "?";
}

CleaningVerdict clean_pair(const corpus::SentencePair& p) {
  const auto& en = p.side(corpus::Language::en);
  const auto& zh = p.side(corpus::Language::zh);

  CleaningVerdict v;
  for (const auto& t : en.tokens)
    if (text::is_word_token(t.form)) ++v.en_words;
  for (const auto& t : zh.tokens)
    v.zh_chars += static_cast<int>(text::count_word_scalars(t.form));

  if (v.en_words > kMaxEnWords) {
    v.reason = CleaningReason::TOO_LONG;
    return v;
  }
  if (v.en_words == 0) {
    v.reason = CleaningReason::RATIO_OUT_OF_RANGE;
    return v;
  }
  v.ratio = static_cast<double>(v.zh_chars) / v.en_words;
  if (v.ratio < kRatioLo || v.ratio > kRatioHi) {
    v.reason = CleaningReason::RATIO_OUT_OF_RANGE;
    return v;
  }
  v.keep = true;
  v.reason = CleaningReason::OK;
  return v;
}

std::string slug(SubsetId id) {
  switch (id) {
    case SubsetId::zhbei2en: return "zhbei2en";
    case SubsetId::en2zhbei: return "en2zhbei";
    case SubsetId::zh2enbe: return "zh2enbe";
    case SubsetId::enbe2zh: return "enbe2zh";
  }
  return "?";
}

std::string display_name(SubsetId id) {
  switch (id) {
    case SubsetId::zhbei2en: return "ZH(bei)→EN";
    case SubsetId::en2zhbei: return "EN→ZH(bei)";
    case SubsetId::zh2enbe: return "ZH→EN(be)";
    case SubsetId::enbe2zh: return "EN(be)→ZH";
  }
  return "?";
}

SubsetId parse_subset(const std::string& s) {
  for (SubsetId id : kAllSubsets)
    if (s == slug(id) || s == display_name(id)) return id;
  throw Error("unknown subset \"" + s + "\"");
}

corpus::Language subset_target_language(SubsetId id) {
  return (id == SubsetId::zhbei2en || id == SubsetId::zh2enbe) ? corpus::Language::en
                                                               : corpus::Language::zh;
}

std::array<Subset, 4> partition_subsets(const std::vector<const corpus::SentencePair*>& pairs) {
  std::array<Subset, 4> out{Subset{SubsetId::zhbei2en, {}}, Subset{SubsetId::en2zhbei, {}},
                            Subset{SubsetId::zh2enbe, {}}, Subset{SubsetId::enbe2zh, {}}};
  for (const auto* p : pairs) {
    const bool zh2en = p->direction == corpus::Direction::zh_to_en;
    const bool bei = !detect_bei_passive(p->side(corpus::Language::zh)).empty();
    const bool be = !detect_be_passive(p->side(corpus::Language::en)).empty();
    if (zh2en && bei) out[0].pair_ids.push_back(p->pair_id);
    if (!zh2en && bei) out[1].pair_ids.push_back(p->pair_id);
    if (zh2en && be) out[2].pair_ids.push_back(p->pair_id);
    if (!zh2en && be) out[3].pair_ids.push_back(p->pair_id);
  }
  return out;
}

std::vector<CensusRow> subset_census(const std::array<Subset, 4>& subsets,
                                     const std::vector<const corpus::SentencePair*>& pairs) {
  std::map<std::string, const corpus::SentencePair*> by_id;
  for (const auto* p : pairs) by_id[p->pair_id] = p;

  std::vector<CensusRow> rows;
  for (const auto& sub : subsets) {
    // key: (register enum order, corpus name) -> count
    std::map<std::pair<corpus::Register, std::string>, int> cells;
    for (const auto& id : sub.pair_ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) throw Error("census: unknown pair id \"" + id + "\"");
      ++cells[{it->second->reg, it->second->corpus}];
    }
    int total = 0;
    for (const auto& [key, count] : cells) {
      rows.push_back({sub.id, corpus::to_string(key.first), key.second, count});
      total += count;
    }
    rows.push_back({sub.id, "ALL", "ALL", total});
  }
  return rows;
}

void write_cleaning_report(std::ostream& os,
                           const std::vector<std::pair<std::string, CleaningVerdict>>& rows) {
  os << "pair_id\tverdict\treason\ten_words\tzh_chars\tratio\n";
  for (const auto& [id, v] : rows) {
    std::ostringstream ratio;
    ratio.precision(4);
    ratio << std::fixed << v.ratio;
    os << id << '\t' << (v.keep ? "KEEP" : "DROP") << '\t' << to_string(v.reason) << '\t'
       << v.en_words << '\t' << v.zh_chars << '\t' << ratio.str() << '\n';
  }
}

void write_subsets(std::ostream& os, const std::array<Subset, 4>& subsets) {
  os << "pair_id\tsubset\n";
  for (const auto& sub : subsets)
    for (const auto& id : sub.pair_ids) os << id << '\t' << display_name(sub.id) << '\n';
}

void write_census(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "subset\tregister\tcorpus\tcount\n";
  for (const auto& r : rows)
    os << display_name(r.subset) << '\t' << r.reg << '\t' << r.corpus << '\t' << r.count << '\n';
}

}  // namespace passivelens::extractor
