#ifndef PASSIVELENS_CORPUS_HPP
#define PASSIVELENS_CORPUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "passivelens/error.hpp"

namespace passivelens::corpus {

enum class Language { zh, en };

enum class Direction { zh_to_en, en_to_zh };

// The five register strata. Values are matched literally in files.
enum class Register {
  A_PRESS,
  B_OFFICIAL_DOCUMENT,
  C_ACADEMIC_PROSE,
  D_GENERAL_PROSE,
  E_LITERATURE,
};

std::string to_string(Language l);
std::string to_string(Direction d);
std::string to_string(Register r);
Language parse_language(const std::string& s);
Direction parse_direction(const std::string& s);
Register parse_register(const std::string& s);

inline Language source_language(Direction d) {
  return d == Direction::zh_to_en ? Language::zh : Language::en;
}
inline Language target_language(Direction d) {
  return d == Direction::zh_to_en ? Language::en : Language::zh;
}

// One token of a dependency-parsed sentence. Indices are 1-based;
// head index 0 marks the root on both the syntactic and semantic layer.
// Tag values are opaque strings from the upstream parsers and are
// matched literally by the rule engine.
struct ParsedToken {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string pos;
  std::string dep_label;
  int dep_head = 0;
  std::optional<std::string> sem_label;
  std::optional<int> sem_head;

  bool has_sem() const { return sem_label.has_value(); }
};

struct ParsedSentence {
  std::string id;
  Language language = Language::zh;
  std::vector<ParsedToken> tokens;
  std::optional<std::string> text;

  // Tokens are 1..n; token(i) is the token with index i.
  const ParsedToken& token(int index) const { return tokens.at(static_cast<std::size_t>(index) - 1); }
  int size() const { return static_cast<int>(tokens.size()); }

  bool has_semantic_layer() const;
  std::string surface(const std::string& joiner) const;

  // Throws Error when any token invariant is violated (index gaps,
  // dangling heads, self heads, half-present semantic fields).
  void validate() const;
};

struct SentencePair {
  std::string pair_id;
  Direction direction = Direction::zh_to_en;
  ParsedSentence source;
  ParsedSentence target;
  std::string corpus;
  std::string genre;
  Register reg = Register::A_PRESS;

  const ParsedSentence& side(Language l) const {
    return source.language == l ? source : target;
  }
};

// (corpus, genre) -> register. Total over the corpora/genres the
// manifest uses; lookups outside the map are load-time errors.
class RegisterMap {
public:
  void add(const std::string& corpus, const std::string& genre, Register r);
  Register resolve(const std::string& corpus, const std::string& genre) const;
  std::size_t size() const { return entries_.size(); }

private:
  std::map<std::pair<std::string, std::string>, Register> entries_;
};

}  // namespace passivelens::corpus

#endif
