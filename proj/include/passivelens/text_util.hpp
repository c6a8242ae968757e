#ifndef PASSIVELENS_TEXT_UTIL_HPP
#define PASSIVELENS_TEXT_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

// UTF-8 and character-class helpers shared by the cleaning filters, the
// rule engine and the metric tokenizers. All text is handled as UTF-8;
// classification works on Unicode scalars.

namespace passivelens::text {

// Decodes UTF-8 into scalars. Invalid bytes decode to U+FFFD, one scalar
// per bad byte, so downstream counts stay defined for dirty input.
std::u32string to_u32(std::string_view utf8);
std::string to_utf8(char32_t c);
std::string to_utf8(const std::u32string& s);

bool is_space(char32_t c);

// Punctuation/symbol test over the ranges that occur in this corpus:
// ASCII punctuation, general punctuation (U+2000-206F), CJK symbols and
// punctuation (U+3000-303F) and the fullwidth punctuation blocks.
// Fullwidth letters and digits are not punctuation.
bool is_punct(char32_t c);

// A scalar that is neither whitespace nor punctuation (letters, digits,
// CJK ideographs, ...).
bool is_wordlike(char32_t c);

// True when the form is non-empty and consists only of punctuation
// scalars (the light-verb window rule skips on these).
bool is_punct_token(std::string_view form);

// True when the form contains at least one letter-or-digit scalar; this
// is what counts as an English "word" for the cleaning ratio.
bool is_word_token(std::string_view form);

// Number of non-whitespace, non-punctuation scalars ("Chinese characters"
// for the cleaning ratio).
std::size_t count_word_scalars(std::string_view s);

// One token per non-whitespace scalar; used as the BLEU tokenizer for
// Chinese hypotheses and references.
std::vector<std::string> tokenize_zh_char(std::string_view s);

// Whitespace split with punctuation scalars detached into their own
// tokens ("end." -> ["end", "."]). Approximates the usual word-level
// tokenization for English metric scoring.
std::vector<std::string> tokenize_en_simple(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

// Plain TSV; no quoting or escaping, tabs and newlines cannot occur
// inside fields.
std::vector<std::string> split_tsv(std::string_view line);
std::string join_tab(const std::vector<std::string>& fields);

std::string trim(std::string_view s);

}  // namespace passivelens::text

#endif
