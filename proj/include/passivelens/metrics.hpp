#ifndef PASSIVELENS_METRICS_HPP
#define PASSIVELENS_METRICS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "passivelens/corpus.hpp"

namespace passivelens::metrics {

// One hypothesis or reference segment. When a word segmentation is
// available upstream (Chinese), it travels in `pretokenized`; chrF++
// word n-grams use it and fall back to whitespace splitting otherwise.
struct Segment {
  std::string text;
  std::optional<std::vector<std::string>> pretokenized;
};

enum class Metric { BLEU, CHRF_PP };

std::string to_string(Metric m);

struct MetricScore {
  Metric metric = Metric::BLEU;
  double value = 0.0;  // 0..100
  // BLEU: p1..p4 (percent), bp, hyp_len, ref_len.
  // chrF++: f_char1..f_char6, f_word1..f_word2 (percent).
  std::map<std::string, double> details;
};

enum class TokenizerPolicy { en_simple, zh_char, pretokenized };

std::vector<std::string> tokenize(const Segment& s, TokenizerPolicy p);

// Corpus-level BLEU: modified n-gram precisions n=1..4, geometric mean,
// exponential brevity penalty, no smoothing (any zero precision zeroes
// the score).
MetricScore bleu(const std::vector<Segment>& hypotheses, const std::vector<Segment>& references,
                 TokenizerPolicy tokenizer);

// chrF++: character n-grams (orders 1..char_order) over the text with
// whitespace removed plus word n-grams (orders 1..word_order); F_beta
// averaged over the orders that have any n-grams on either side;
// corpus-level aggregation sums per-segment n-gram statistics.
MetricScore chrf_pp(const std::vector<Segment>& hypotheses, const std::vector<Segment>& references,
                    int char_order = 6, int word_order = 2, double beta = 2.0);

// BLEU + chrF++ for one subset with the tokenization policy picked by
// target language: character tokens for BLEU into Chinese (word n-grams
// from `pretokenized`), simple punctuation-splitting tokens for English.
std::vector<MetricScore> score_subset(const std::vector<Segment>& hypotheses,
                                      const std::vector<Segment>& references,
                                      corpus::Language target_language);

}  // namespace passivelens::metrics

#endif
