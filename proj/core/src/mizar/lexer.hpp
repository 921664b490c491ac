#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mizhol/diagnostic.hpp"

namespace mizhol::mizar::detail {

struct Token {
  enum class Kind { Ident, Punct, End };
  Kind kind;
  std::string text;
  SourceLoc loc;

  bool is(std::string_view s) const { return kind != Kind::End && text == s; }
};

/// Splits statement text into identifiers and punctuation. `::` starts a
/// comment. Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view text);

}  // namespace mizhol::mizar::detail
