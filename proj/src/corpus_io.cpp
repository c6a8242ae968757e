#include "passivelens/corpus_io.hpp"

#include <fstream>
#include <sstream>

#include "passivelens/text_util.hpp"

namespace passivelens::corpus {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  return in;
}

int parse_head(const std::string& field, const std::string& origin, int lineno) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(field, &pos);
    if (pos != field.size() || v < 0) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw Error(origin + ":" + std::to_string(lineno) + ": bad head index \"" + field + "\"");
  }
}

}  // namespace

std::vector<ParsedSentence> read_parsed(std::istream& in, Language language,
                                        const std::string& origin) {
  std::vector<ParsedSentence> out;
  ParsedSentence cur;
  bool in_block = false;

  auto flush = [&]() {
    if (!in_block) return;
    if (cur.id.empty()) throw Error(origin + ": sentence block without \"# id =\" line");
    cur.validate();
    out.push_back(std::move(cur));
    cur = ParsedSentence{};
    in_block = false;
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      const std::string body = text::trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        const std::string key = text::trim(body.substr(0, eq));
        const std::string val = text::trim(body.substr(eq + 1));
        if (key == "id") {
          in_block = true;
          cur.id = val;
        } else if (key == "lang") {
          in_block = true;
          const Language l = parse_language(val);
          if (l != language)
            throw Error(origin + ":" + std::to_string(lineno) + ": sentence \"" + cur.id +
                        "\" declares lang " + val + " but file was loaded as " +
                        to_string(language));
          cur.language = l;
        } else if (key == "text") {
          in_block = true;
          cur.text = val;
        }
      }
      continue;
    }

    const auto cols = text::split_tsv(line);
    if (cols.size() != 9)
      throw Error(origin + ":" + std::to_string(lineno) + ": malformed line, expected 9 columns, got " +
                  std::to_string(cols.size()));
    in_block = true;
    cur.language = language;
    ParsedToken t;
    t.index = parse_head(cols[0], origin, lineno);
    t.form = cols[1];
    t.lemma = cols[2] == "_" ? cols[1] : cols[2];
    t.pos = cols[3] == "_" ? std::string{} : cols[3];
    t.dep_head = parse_head(cols[4], origin, lineno);
    t.dep_label = cols[5] == "_" ? std::string{} : cols[5];
    const bool sem_head_absent = cols[6] == "_";
    const bool sem_label_absent = cols[7] == "_";
    if (sem_head_absent != sem_label_absent)
      throw Error(origin + ":" + std::to_string(lineno) +
                  ": SEMHEAD and SEMREL must both be set or both be \"_\"");
    if (!sem_head_absent) {
      t.sem_head = parse_head(cols[6], origin, lineno);
      t.sem_label = cols[7];
    }
    cur.tokens.push_back(std::move(t));
  }
  flush();
  return out;
}

std::vector<ParsedSentence> load_parsed_file(const std::string& path, Language language) {
  auto in = open_or_throw(path);
  return read_parsed(in, language, path);
}

void write_parsed(std::ostream& out, const std::vector<ParsedSentence>& sentences) {
  for (const auto& s : sentences) {
    out << "# id = " << s.id << "\n";
    out << "# lang = " << to_string(s.language) << "\n";
    if (s.text) out << "# text = " << *s.text << "\n";
    for (const auto& t : s.tokens) {
      out << t.index << '\t' << t.form << '\t' << (t.lemma.empty() ? "_" : t.lemma) << '\t'
          << (t.pos.empty() ? "_" : t.pos) << '\t' << t.dep_head << '\t'
          << (t.dep_label.empty() ? "_" : t.dep_label) << '\t';
      if (t.sem_head)
        out << *t.sem_head << '\t' << *t.sem_label << '\t';
      else
        out << "_\t_\t";
      out << "_\n";
    }
    out << "\n";
  }
}

std::string serialize_parsed(const std::vector<ParsedSentence>& sentences) {
  std::ostringstream os;
  write_parsed(os, sentences);
  return os.str();
}

RegisterMap read_register_map(std::istream& in, const std::string& origin) {
  RegisterMap map;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cols = text::split_tsv(line);
    if (cols.size() != 3)
      throw Error(origin + ":" + std::to_string(lineno) + ": expected 3 columns, got " +
                  std::to_string(cols.size()));
    try {
      map.add(cols[0], cols[1], parse_register(cols[2]));
    } catch (const Error& e) {
      throw Error(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return map;
}

RegisterMap load_register_map(const std::string& path) {
  auto in = open_or_throw(path);
  return read_register_map(in, path);
}

SentenceStore build_store(const std::vector<std::vector<ParsedSentence>>& files) {
  SentenceStore store;
  for (const auto& file : files)
    for (const auto& s : file) {
      if (store.count(s.id)) throw Error("duplicate sentence id \"" + s.id + "\"");
      store.emplace(s.id, s);
    }
  return store;
}

std::vector<SentencePair> read_manifest(std::istream& in, const RegisterMap& registers,
                                        const SentenceStore& sentences,
                                        const std::string& origin) {
  std::vector<SentencePair> out;
  std::string line;
  int lineno = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cols = text::split_tsv(line);
    if (!saw_header) {
      if (cols.size() != 6 || cols[0] != "pair_id")
        throw Error(origin + ": missing manifest header (pair_id, direction, corpus, genre, src_id, tgt_id)");
      saw_header = true;
      continue;
    }
    if (cols.size() != 6)
      throw Error(origin + ":" + std::to_string(lineno) + ": expected 6 columns, got " +
                  std::to_string(cols.size()));
    const auto where = origin + ":" + std::to_string(lineno);
    SentencePair p;
    p.pair_id = cols[0];
    try {
      p.direction = parse_direction(cols[1]);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    p.corpus = cols[2];
    p.genre = cols[3];
    const auto src = sentences.find(cols[4]);
    if (src == sentences.end()) throw Error(where + ": unknown sentence id \"" + cols[4] + "\"");
    const auto tgt = sentences.find(cols[5]);
    if (tgt == sentences.end()) throw Error(where + ": unknown sentence id \"" + cols[5] + "\"");
    p.source = src->second;
    p.target = tgt->second;
    if (p.source.language != source_language(p.direction) ||
        p.target.language != target_language(p.direction))
      throw Error(where + ": pair \"" + p.pair_id +
                  "\": sentence languages do not match direction " + to_string(p.direction));
    try {
      p.reg = registers.resolve(p.corpus, p.genre);
    } catch (const Error& e) {
      throw Error(where + ": " + e.what());
    }
    out.push_back(std::move(p));
  }
  if (!saw_header) throw Error(origin + ": empty manifest, header required");
  return out;
}

std::vector<SentencePair> load_manifest(const std::string& path, const RegisterMap& registers,
                                        const SentenceStore& sentences) {
  auto in = open_or_throw(path);
  return read_manifest(in, registers, sentences, path);
}

}  // namespace passivelens::corpus
