#include "lexer.hpp"

#include <cctype>

namespace mizhol::mizar::detail {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (text.compare(i, 2, "::") == 0) {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceLoc loc{line, col};
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (text.compare(i, 2, "->") == 0) {
      out.push_back({Token::Kind::Punct, "->", loc});
      advance(2);
      continue;
    }
    switch (c) {
      case '{': case '}': case '(': case ')': case '[': case ']':
      case ',': case ':': case '=': case '&':
        out.push_back({Token::Kind::Punct, std::string(1, static_cast<char>(c)), loc});
        advance(1);
        continue;
      default:
        break;
    }
    std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c))
                                        : "\\x" + std::to_string(static_cast<int>(c));
    throw ParseError({Diagnostic{DiagCode::SyntaxError, loc,
                                 "unexpected character '" + shown + "'"}});
  }
  out.push_back({Token::Kind::End, "", {line, col}});
  return out;
}

}  // namespace mizhol::mizar::detail
