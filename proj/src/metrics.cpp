#include "passivelens/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "passivelens/error.hpp"
#include "passivelens/text_util.hpp"

namespace passivelens::metrics {

namespace {

constexpr int kBleuOrder = 4;

void check_corpora(const std::vector<Segment>& hyp, const std::vector<Segment>& ref) {
  if (hyp.size() != ref.size())
    throw Error("hypothesis/reference corpus length mismatch (" + std::to_string(hyp.size()) +
                " vs " + std::to_string(ref.size()) + ")");
  if (ref.empty()) throw Error("empty reference corpus");
}

// Multiset of n-grams of one order over a token sequence.
std::map<std::vector<std::string>, int> ngram_counts(const std::vector<std::string>& tokens, int n) {
  std::map<std::vector<std::string>, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

std::map<std::u32string, int> char_ngram_counts(const std::u32string& chars, int n) {
  std::map<std::u32string, int> counts;
  if (static_cast<int>(chars.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= chars.size(); ++i) ++counts[chars.substr(i, n)];
  return counts;
}

std::vector<std::string> words_of(const Segment& s) {
  if (s.pretokenized) return *s.pretokenized;
  return text::split_whitespace(s.text);
}

std::u32string chars_of(const Segment& s) {
  std::u32string out;
  for (char32_t c : text::to_u32(s.text))
    if (!text::is_space(c)) out.push_back(c);
  return out;
}

struct FStats {
  long long tp = 0;    // clipped matches
  long long hyp = 0;   // hypothesis n-grams
  long long ref = 0;   // reference n-grams
};

double f_beta(const FStats& st, double beta) {
  const double p = st.hyp > 0 ? static_cast<double>(st.tp) / static_cast<double>(st.hyp) : 0.0;
  const double r = st.ref > 0 ? static_cast<double>(st.tp) / static_cast<double>(st.ref) : 0.0;
  const double denom = beta * beta * p + r;
  if (denom <= 0.0) return 0.0;
  return (1.0 + beta * beta) * p * r / denom;
}

}  // namespace

std::string to_string(Metric m) { return m == Metric::BLEU ? "BLEU" : "chrF++"; }

std::vector<std::string> tokenize(const Segment& s, TokenizerPolicy p) {
  switch (p) {
    case TokenizerPolicy::en_simple: return text::tokenize_en_simple(s.text);
    case TokenizerPolicy::zh_char: return text::tokenize_zh_char(s.text);
    case TokenizerPolicy::pretokenized: return words_of(s);
  }
  return {};
}

MetricScore bleu(const std::vector<Segment>& hypotheses, const std::vector<Segment>& references,
                 TokenizerPolicy tokenizer) {
  check_corpora(hypotheses, references);

  long long hyp_len = 0, ref_len = 0;
  long long matched[kBleuOrder] = {0, 0, 0, 0};
  long long total[kBleuOrder] = {0, 0, 0, 0};

  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    const auto hyp = tokenize(hypotheses[k], tokenizer);
    const auto ref = tokenize(references[k], tokenizer);
    hyp_len += static_cast<long long>(hyp.size());
    ref_len += static_cast<long long>(ref.size());
    for (int n = 1; n <= kBleuOrder; ++n) {
      const auto hc = ngram_counts(hyp, n);
      const auto rc = ngram_counts(ref, n);
      for (const auto& [gram, count] : hc) {
        auto it = rc.find(gram);
        if (it != rc.end()) matched[n - 1] += std::min(count, it->second);
        total[n - 1] += count;
      }
    }
  }

  MetricScore score;
  score.metric = Metric::BLEU;
  score.details["hyp_len"] = static_cast<double>(hyp_len);
  score.details["ref_len"] = static_cast<double>(ref_len);

  double precisions[kBleuOrder];
  bool any_zero = false;
  for (int n = 1; n <= kBleuOrder; ++n) {
    precisions[n - 1] = total[n - 1] > 0
                            ? static_cast<double>(matched[n - 1]) / static_cast<double>(total[n - 1])
                            : 0.0;
    score.details["p" + std::to_string(n)] = 100.0 * precisions[n - 1];
    if (precisions[n - 1] <= 0.0) any_zero = true;
  }

  if (hyp_len == 0 || any_zero) {
    score.details["bp"] = 0.0;
    score.value = 0.0;
    return score;
  }

  const double bp =
      hyp_len < ref_len ? std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len))
                        : 1.0;
  score.details["bp"] = bp;
  double log_sum = 0.0;
  for (double p : precisions) log_sum += std::log(p);
  score.value = 100.0 * bp * std::exp(log_sum / kBleuOrder);
  return score;
}

MetricScore chrf_pp(const std::vector<Segment>& hypotheses, const std::vector<Segment>& references,
                    int char_order, int word_order, double beta) {
  check_corpora(hypotheses, references);
  if (char_order < 1 || word_order < 0) throw Error("invalid chrF++ n-gram orders");

  const int orders = char_order + word_order;
  std::vector<FStats> stats(static_cast<std::size_t>(orders));

  for (std::size_t k = 0; k < hypotheses.size(); ++k) {
    const auto hyp_chars = chars_of(hypotheses[k]);
    const auto ref_chars = chars_of(references[k]);
    for (int n = 1; n <= char_order; ++n) {
      auto& st = stats[static_cast<std::size_t>(n - 1)];
      const auto hc = char_ngram_counts(hyp_chars, n);
      const auto rc = char_ngram_counts(ref_chars, n);
      for (const auto& [gram, count] : hc) {
        st.hyp += count;
        auto it = rc.find(gram);
        if (it != rc.end()) st.tp += std::min(count, it->second);
      }
      for (const auto& [gram, count] : rc) st.ref += count;
    }
    const auto hyp_words = words_of(hypotheses[k]);
    const auto ref_words = words_of(references[k]);
    for (int n = 1; n <= word_order; ++n) {
      auto& st = stats[static_cast<std::size_t>(char_order + n - 1)];
      const auto hc = ngram_counts(hyp_words, n);
      const auto rc = ngram_counts(ref_words, n);
      for (const auto& [gram, count] : hc) {
        st.hyp += count;
        auto it = rc.find(gram);
        if (it != rc.end()) st.tp += std::min(count, it->second);
      }
      for (const auto& [gram, count] : rc) st.ref += count;
    }
  }

  MetricScore score;
  score.metric = Metric::CHRF_PP;
  double f_sum = 0.0;
  int effective = 0;
  for (int i = 0; i < orders; ++i) {
    const auto& st = stats[static_cast<std::size_t>(i)];
    const double f = f_beta(st, beta);
    const std::string key = i < char_order ? "f_char" + std::to_string(i + 1)
                                           : "f_word" + std::to_string(i - char_order + 1);
    score.details[key] = 100.0 * f;
    if (st.hyp > 0 || st.ref > 0) {
      f_sum += f;
      ++effective;
    }
  }
  score.value = effective > 0 ? 100.0 * f_sum / effective : 0.0;
  return score;
}

std::vector<MetricScore> score_subset(const std::vector<Segment>& hypotheses,
                                      const std::vector<Segment>& references,
                                      corpus::Language target_language) {
  if (target_language == corpus::Language::zh)
    return {bleu(hypotheses, references, TokenizerPolicy::zh_char),
            chrf_pp(hypotheses, references)};

  // English: BLEU on punctuation-splitting tokens; chrF++ word n-grams
  // over the same tokens.
  auto with_words = [](const std::vector<Segment>& segs) {
    std::vector<Segment> out = segs;
    for (auto& s : out)
      if (!s.pretokenized) s.pretokenized = text::tokenize_en_simple(s.text);
    return out;
  };
  const auto hyp = with_words(hypotheses);
  const auto ref = with_words(references);
  return {bleu(hyp, ref, TokenizerPolicy::en_simple), chrf_pp(hyp, ref)};
}

}  // namespace passivelens::metrics
