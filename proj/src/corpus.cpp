#include "passivelens/corpus.hpp"

namespace passivelens::corpus {

std::string to_string(Language l) { return l == Language::zh ? "zh" : "en"; }

std::string to_string(Direction d) {
  return d == Direction::zh_to_en ? "ZH→EN" : "EN→ZH";
}

std::string to_string(Register r) {
  switch (r) {
    case Register::A_PRESS: return "A_PRESS";
    case Register::B_OFFICIAL_DOCUMENT: return "B_OFFICIAL_DOCUMENT";
    case Register::C_ACADEMIC_PROSE: return "C_ACADEMIC_PROSE";
    case Register::D_GENERAL_PROSE: return "D_GENERAL_PROSE";
    case Register::E_LITERATURE: return "E_LITERATURE";
  }
  return "?";
}

Language parse_language(const std::string& s) {
  if (s == "zh") return Language::zh;
  if (s == "en") return Language::en;
  throw Error("unknown language \"" + s + "\" (expected zh or en)");
}

Direction parse_direction(const std::string& s) {
  if (s == "ZH→EN" || s == "ZH->EN") return Direction::zh_to_en;
  if (s == "EN→ZH" || s == "EN->ZH") return Direction::en_to_zh;
  throw Error("unknown direction \"" + s + "\"");
}

Register parse_register(const std::string& s) {
  if (s == "A_PRESS") return Register::A_PRESS;
  if (s == "B_OFFICIAL_DOCUMENT") return Register::B_OFFICIAL_DOCUMENT;
  if (s == "C_ACADEMIC_PROSE") return Register::C_ACADEMIC_PROSE;
  if (s == "D_GENERAL_PROSE") return Register::D_GENERAL_PROSE;
  if (s == "E_LITERATURE") return Register::E_LITERATURE;
  throw Error("unknown register \"" + s + "\"");
}

bool ParsedSentence::has_semantic_layer() const {
  for (const auto& t : tokens)
    if (t.has_sem()) return true;
  return false;
}

std::string ParsedSentence::surface(const std::string& joiner) const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += joiner;
    out += tokens[i].form;
  }
  return out;
}

void ParsedSentence::validate() const {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    const auto& t = tokens[static_cast<std::size_t>(i)];
    if (t.index != i + 1)
      throw Error("sentence \"" + id + "\": token indices not contiguous at position " +
                  std::to_string(i + 1));
    if (t.dep_head < 0 || t.dep_head > n)
      throw Error("sentence \"" + id + "\": dangling head " + std::to_string(t.dep_head) +
                  " on token " + std::to_string(t.index));
    if (t.dep_head == t.index)
      throw Error("sentence \"" + id + "\": token " + std::to_string(t.index) +
                  " is its own head");
    if (t.sem_label.has_value() != t.sem_head.has_value())
      throw Error("sentence \"" + id + "\": token " + std::to_string(t.index) +
                  " has a half-present semantic layer");
    if (t.sem_head && (*t.sem_head < 0 || *t.sem_head > n))
      throw Error("sentence \"" + id + "\": dangling semantic head " +
                  std::to_string(*t.sem_head) + " on token " + std::to_string(t.index));
    if (t.sem_head && *t.sem_head == t.index)
      throw Error("sentence \"" + id + "\": token " + std::to_string(t.index) +
                  " is its own semantic head");
  }
}

void RegisterMap::add(const std::string& corpus, const std::string& genre, Register r) {
  auto key = std::make_pair(corpus, genre);
  if (entries_.count(key))
    throw Error("duplicate register map entry for (" + corpus + ", " + genre + ")");
  entries_.emplace(std::move(key), r);
}

Register RegisterMap::resolve(const std::string& corpus, const std::string& genre) const {
  auto it = entries_.find(std::make_pair(corpus, genre));
  if (it == entries_.end())
    throw Error("no register mapping for (" + corpus + ", " + genre + ")");
  return it->second;
}

}  // namespace passivelens::corpus
