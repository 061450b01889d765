#pragma once

// Line-oriented twist-word files:
//
//   # comment
//   genus 2                  (optional, default 2, must precede any word)
//   let phi = g1 g5          defines a macro
//   let psi = phi^2 g3^-1    macros may use earlier macros, with powers
//   phi psi                  bare lines are appended to the main word
//
// `g<i>` is the twist along chain curve c_i.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "twistcalc/symplectic.hpp"

namespace twistcalc {

class WordLibrary {
 public:
  explicit WordLibrary(unsigned genus = 2) : genus_(genus), main_(genus) {}

  unsigned genus() const noexcept { return genus_; }
  bool contains(const std::string& name) const { return macros_.count(name) != 0; }
  /// Throws ParseError for an unknown name.
  const TwistWord& macro(const std::string& name) const;
  /// Macro names in definition order.
  const std::vector<std::string>& names() const noexcept { return order_; }
  const TwistWord& main_word() const noexcept { return main_; }

  void define(const std::string& name, TwistWord word);
  void append_main(const TwistWord& word) { main_.append(word); }
  void set_genus(unsigned genus);

 private:
  unsigned genus_;
  std::map<std::string, TwistWord> macros_;
  std::vector<std::string> order_;
  TwistWord main_;
};

/// Parses a token list such as "g2^-1 g1 phi^2" against the library's macros.
TwistWord parse_word(std::string_view tokens, const WordLibrary& library, std::size_t line = 0);

WordLibrary parse_word_file(std::string_view text);
/// Throws IoError when the file cannot be read.
WordLibrary load_word_file(const std::filesystem::path& path);

}  // namespace twistcalc
