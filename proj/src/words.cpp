#include "twistcalc/words.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "twistcalc/errors.hpp"
#include "text_util.hpp"

namespace twistcalc {

const TwistWord& WordLibrary::macro(const std::string& name) const {
  auto it = macros_.find(name);
  if (it == macros_.end()) throw ParseError("unknown word '" + name + "'");
  return it->second;
}

void WordLibrary::define(const std::string& name, TwistWord word) {
  if (word.genus() != genus_) throw DimensionError("macro '" + name + "' has the wrong genus");
  if (!macros_.count(name)) order_.push_back(name);
  macros_[name] = std::move(word);
}

void WordLibrary::set_genus(unsigned genus) {
  if (genus == 0) throw DomainError("genus must be positive");
  if (!macros_.empty() || !main_.empty()) throw ParseError("genus must be declared before any word");
  genus_ = genus;
  main_ = TwistWord(genus);
}

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool chain_token(std::string_view base, unsigned& index) {
  if (base.size() < 2 || base[0] != 'g') return false;
  return detail::parse_unsigned(base.substr(1), index);
}

}  // namespace

TwistWord parse_word(std::string_view tokens, const WordLibrary& library, std::size_t line) {
  const unsigned genus = library.genus();
  const auto chain = chain_classes(genus);
  TwistWord word(genus);
  for (const auto& token : detail::split_ws(tokens)) {
    std::string_view base = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      base = token.substr(0, caret);
      if (!detail::parse_long(token.substr(caret + 1), exponent))
        throw ParseError("bad exponent in '" + std::string(token) + "'", line);
      if (exponent == 0) throw ParseError("zero exponent in '" + std::string(token) + "'", line);
    }
    unsigned index = 0;
    if (chain_token(base, index)) {
      if (index == 0 || index > chain.size())
        throw ParseError("chain index out of range in '" + std::string(token) + "'", line);
      word.append(TwistLetter{chain[index - 1], exponent, index});
      continue;
    }
    const std::string name(base);
    if (!valid_name(name) || !library.contains(name))
      throw ParseError("unknown token '" + std::string(token) + "'", line);
    word.append(library.macro(name).power(exponent));
  }
  return word;
}

WordLibrary parse_word_file(std::string_view text) {
  WordLibrary library;
  std::size_t line_no = 0;
  for (const auto& raw : detail::split_lines(text)) {
    ++line_no;
    const std::string_view line = detail::trim(detail::strip_comment(raw));
    if (line.empty()) continue;
    const auto words = detail::split_ws(line);
    if (words[0] == "genus") {
      unsigned g = 0;
      if (words.size() != 2 || !detail::parse_unsigned(words[1], g) || g == 0)
        throw ParseError("expected 'genus <positive integer>'", line_no);
      library.set_genus(g);
      continue;
    }
    if (words[0] == "let") {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'let <name> = <tokens>'", line_no);
      const std::string name(detail::trim(line.substr(3, eq - 3)));
      unsigned ignored = 0;
      if (!valid_name(name) || chain_token(name, ignored))
        throw ParseError("invalid macro name '" + name + "'", line_no);
      library.define(name, parse_word(line.substr(eq + 1), library, line_no));
      continue;
    }
    library.append_main(parse_word(line, library, line_no));
  }
  return library;
}

WordLibrary load_word_file(const std::filesystem::path& path) {
  return parse_word_file(detail::read_file(path));
}

}  // namespace twistcalc
