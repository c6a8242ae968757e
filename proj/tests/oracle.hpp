#ifndef PASSIVELENS_TESTS_ORACLE_HPP
#define PASSIVELENS_TESTS_ORACLE_HPP

// Brute-force reference implementations of corpus BLEU and chrF++,
// deliberately written with a different algorithm than the library
// (sorted multiset intersection instead of count-map clipping) so the
// two act as independent checks on each other.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace testoracle {

struct BleuResult {
  double value = 0.0;
  double precisions[4] = {0.0, 0.0, 0.0, 0.0};  // fractions 0..1
  double bp = 0.0;
  long long hyp_len = 0;
  long long ref_len = 0;
};

namespace detail {

// All n-grams of one order, sorted; multiset intersection size equals
// the sum of per-gram min counts (clipped matches).
template <typename Seq>
std::vector<Seq> sorted_ngrams(const Seq& seq, int n) {
  std::vector<Seq> grams;
  const long long len = static_cast<long long>(seq.size());
  for (long long i = 0; i + n <= len; ++i)
    grams.push_back(Seq(seq.begin() + i, seq.begin() + i + n));
  std::sort(grams.begin(), grams.end());
  return grams;
}

template <typename Seq>
long long intersection_size(const std::vector<Seq>& a, const std::vector<Seq>& b) {
  long long matches = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++matches; ++i; ++j; }
  }
  return matches;
}

}  // namespace detail

inline BleuResult bleu(const std::vector<std::vector<std::string>>& hyps,
                       const std::vector<std::vector<std::string>>& refs) {
  BleuResult r;
  long long matched[4] = {0, 0, 0, 0};
  long long total[4] = {0, 0, 0, 0};
  for (std::size_t k = 0; k < hyps.size(); ++k) {
    r.hyp_len += static_cast<long long>(hyps[k].size());
    r.ref_len += static_cast<long long>(refs[k].size());
    for (int n = 1; n <= 4; ++n) {
      const auto h = detail::sorted_ngrams(hyps[k], n);
      const auto g = detail::sorted_ngrams(refs[k], n);
      matched[n - 1] += detail::intersection_size(h, g);
      total[n - 1] += static_cast<long long>(h.size());
    }
  }
  bool any_zero = false;
  for (int n = 0; n < 4; ++n) {
    r.precisions[n] = total[n] > 0 ? static_cast<double>(matched[n]) / static_cast<double>(total[n])
                                   : 0.0;
    if (r.precisions[n] <= 0.0) any_zero = true;
  }
  if (r.hyp_len == 0 || any_zero) {
    r.bp = 0.0;
    r.value = 0.0;
    return r;
  }
  r.bp = r.hyp_len < r.ref_len
             ? std::exp(1.0 - static_cast<double>(r.ref_len) / static_cast<double>(r.hyp_len))
             : 1.0;
  const double geo = std::pow(
      r.precisions[0] * r.precisions[1] * r.precisions[2] * r.precisions[3], 0.25);
  r.value = 100.0 * r.bp * geo;
  return r;
}

// One segment as seen by chrF++: space-stripped character sequence plus
// the word tokens.
struct ChrfSegment {
  std::u32string chars;
  std::vector<std::string> words;
};

struct ChrfResult {
  double value = 0.0;
  std::vector<double> f;  // char orders then word orders, fractions 0..1
};

inline ChrfResult chrf_pp(const std::vector<ChrfSegment>& hyps,
                          const std::vector<ChrfSegment>& refs,
                          int char_order = 6, int word_order = 2, double beta = 2.0) {
  const int orders = char_order + word_order;
  std::vector<long long> tp(static_cast<std::size_t>(orders), 0);
  std::vector<long long> hyp_n(static_cast<std::size_t>(orders), 0);
  std::vector<long long> ref_n(static_cast<std::size_t>(orders), 0);
  for (std::size_t k = 0; k < hyps.size(); ++k) {
    for (int n = 1; n <= char_order; ++n) {
      const auto h = detail::sorted_ngrams(hyps[k].chars, n);
      const auto g = detail::sorted_ngrams(refs[k].chars, n);
      tp[static_cast<std::size_t>(n - 1)] += detail::intersection_size(h, g);
      hyp_n[static_cast<std::size_t>(n - 1)] += static_cast<long long>(h.size());
      ref_n[static_cast<std::size_t>(n - 1)] += static_cast<long long>(g.size());
    }
    for (int n = 1; n <= word_order; ++n) {
      const std::size_t slot = static_cast<std::size_t>(char_order + n - 1);
      const auto h = detail::sorted_ngrams(hyps[k].words, n);
      const auto g = detail::sorted_ngrams(refs[k].words, n);
      tp[slot] += detail::intersection_size(h, g);
      hyp_n[slot] += static_cast<long long>(h.size());
      ref_n[slot] += static_cast<long long>(g.size());
    }
  }
  ChrfResult r;
  double sum = 0.0;
  int effective = 0;
  for (int i = 0; i < orders; ++i) {
    const std::size_t s = static_cast<std::size_t>(i);
    const double p = hyp_n[s] > 0 ? static_cast<double>(tp[s]) / static_cast<double>(hyp_n[s]) : 0.0;
    const double rr = ref_n[s] > 0 ? static_cast<double>(tp[s]) / static_cast<double>(ref_n[s]) : 0.0;
    const double denom = beta * beta * p + rr;
    const double f = denom > 0.0 ? (1.0 + beta * beta) * p * rr / denom : 0.0;
    r.f.push_back(f);
    if (hyp_n[s] > 0 || ref_n[s] > 0) {
      sum += f;
      ++effective;
    }
  }
  r.value = effective > 0 ? 100.0 * sum / effective : 0.0;
  return r;
}

}  // namespace testoracle

#endif
