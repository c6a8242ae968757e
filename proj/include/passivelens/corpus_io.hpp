#ifndef PASSIVELENS_CORPUS_IO_HPP
#define PASSIVELENS_CORPUS_IO_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "passivelens/corpus.hpp"

// File formats:
//
// Parsed file - UTF-8, one token per line, TAB-separated columns
//   INDEX FORM LEMMA POS DEPHEAD DEPREL SEMHEAD SEMREL MISC
// with "_" for absent values. A blank line ends a sentence. Each block is
// preceded by "# id = <sid>" and "# lang = <zh|en>" comment lines; an
// optional "# text = <raw>" line carries the untokenized surface string.
// Other comment lines are ignored.
//
// Manifest - UTF-8 TSV with header
//   pair_id  direction  corpus  genre  src_id  tgt_id
//
// Register map - UTF-8 TSV, headerless:  corpus  genre  register

namespace passivelens::corpus {

std::vector<ParsedSentence> load_parsed_file(const std::string& path, Language language);
std::vector<ParsedSentence> read_parsed(std::istream& in, Language language,
                                        const std::string& origin);

void write_parsed(std::ostream& out, const std::vector<ParsedSentence>& sentences);
std::string serialize_parsed(const std::vector<ParsedSentence>& sentences);

RegisterMap load_register_map(const std::string& path);
RegisterMap read_register_map(std::istream& in, const std::string& origin);

// id -> sentence over every loaded parsed file; ids must be unique.
using SentenceStore = std::map<std::string, ParsedSentence>;
SentenceStore build_store(const std::vector<std::vector<ParsedSentence>>& files);

std::vector<SentencePair> load_manifest(const std::string& path, const RegisterMap& registers,
                                        const SentenceStore& sentences);
std::vector<SentencePair> read_manifest(std::istream& in, const RegisterMap& registers,
                                        const SentenceStore& sentences,
                                        const std::string& origin);

}  // namespace passivelens::corpus

#endif
