#ifndef PASSIVELENS_EXTRACTOR_HPP
#define PASSIVELENS_EXTRACTOR_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "passivelens/corpus.hpp"

namespace passivelens::extractor {

enum class Construction { BEI, BE };

// A detected passive construction anchored to token indices.
struct PassiveMatch {
  Construction construction;
  int anchor_index = 0;                  // the 被 / "be" token
  std::optional<int> participle_index;   // BE only; in (anchor, anchor+4]
  std::optional<bool> with_agent;        // BEI only; LB -> true, SB -> false
};

// One "be" match per auxpass-labelled form of "be" with a VBN within the
// following four tokens. Sorted by anchor; at most one match per anchor.
std::vector<PassiveMatch> detect_be_passive(const corpus::ParsedSentence& s);

// One match per 被 token whose PoS is LB or SB.
std::vector<PassiveMatch> detect_bei_passive(const corpus::ParsedSentence& s);

enum class CleaningReason { OK, TOO_LONG, RATIO_OUT_OF_RANGE };

struct CleaningVerdict {
  bool keep = false;
  CleaningReason reason = CleaningReason::OK;
  int en_words = 0;
  int zh_chars = 0;
  double ratio = 0.0;  // zh_chars / en_words; 0 when en_words == 0
};

std::string to_string(CleaningReason r);

// TOO_LONG when the English side exceeds 100 words, else RATIO_OUT_OF_RANGE
// when zh-characters / en-words falls outside the inclusive range [0.5, 2.2]
// (zero English words also lands here), else OK.
CleaningVerdict clean_pair(const corpus::SentencePair& p);

enum class SubsetId { zhbei2en, en2zhbei, zh2enbe, enbe2zh };

inline constexpr std::array<SubsetId, 4> kAllSubsets{
    SubsetId::zhbei2en, SubsetId::en2zhbei, SubsetId::zh2enbe, SubsetId::enbe2zh};

std::string slug(SubsetId id);           // "zhbei2en", ...
std::string display_name(SubsetId id);   // "ZH(bei)→EN", ...
SubsetId parse_subset(const std::string& s);  // accepts slug or display name

corpus::Language subset_target_language(SubsetId id);

struct Subset {
  SubsetId id;
  std::vector<std::string> pair_ids;  // input order preserved
};

// Membership: zhbei2en = ZH→EN pairs whose source has a bei passive;
// en2zhbei = EN→ZH pairs whose target has one; zh2enbe = ZH→EN pairs whose
// target has a be passive; enbe2zh = EN→ZH pairs whose source has one.
// A pair may belong to two subsets.
std::array<Subset, 4> partition_subsets(const std::vector<const corpus::SentencePair*>& pairs);

struct CensusRow {
  SubsetId subset;
  std::string reg;     // register name, or "ALL" on the per-subset total row
  std::string corpus;  // corpus name, or "ALL" on the total row
  int count = 0;
};

// Counts by (subset, register, corpus) plus one ALL/ALL total row per subset.
std::vector<CensusRow> subset_census(const std::array<Subset, 4>& subsets,
                                     const std::vector<const corpus::SentencePair*>& pairs);

// TSV writers for the extract stage outputs.
void write_cleaning_report(std::ostream& os,
                           const std::vector<std::pair<std::string, CleaningVerdict>>& rows);
void write_subsets(std::ostream& os, const std::array<Subset, 4>& subsets);
void write_census(std::ostream& os, const std::vector<CensusRow>& rows);

}  // namespace passivelens::extractor

#endif
