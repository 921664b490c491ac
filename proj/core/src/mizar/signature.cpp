#include "mizhol/mizar/signature.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <sstream>

namespace mizhol::mizar {

std::string_view to_string(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::ObjectConst: return "object constant";
    case SymbolKind::FunctionConst: return "function constant";
    case SymbolKind::PredicateConst: return "predicate constant";
    case SymbolKind::Mode: return "mode";
    case SymbolKind::Attribute: return "attribute";
  }
  return "symbol";
}

std::size_t Symbol::explicit_arity() const {
  return kind == SymbolKind::Mode && arity > 0 ? arity - 1 : arity;
}

namespace {

constexpr std::array kKeywords = {
    "set", "non", "the", "where", "is", "for", "being", "holds", "ex", "st",
    "not", "or", "implies", "iff", "in", "scheme", "statement", "provided",
    "and", "Element", "of",
};

[[noreturn]] void fail(DiagCode code, int line, int col, std::string msg) {
  throw ParseError({Diagnostic{code, {line, col}, std::move(msg)}});
}

}  // namespace

bool is_keyword(std::string_view s) {
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto c0 = static_cast<unsigned char>(s[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  for (char ch : s) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return true;
}

Signature::Signature() {
  symbols_.push_back(Symbol{std::string(kMembership), SymbolKind::PredicateConst, 2, false, 0});
  index_.emplace(std::string(kMembership), 0);
}

void Signature::add(Symbol sym) {
  if (auto it = index_.find(sym.name); it != index_.end()) {
    const Symbol& old = symbols_[it->second];
    // Restating the builtin membership predicate is harmless.
    if (old.line == 0 && old.kind == sym.kind && old.arity == sym.arity) return;
    fail(DiagCode::DuplicateName, sym.line, 1, "duplicate declaration of " + sym.name);
  }
  if (sym.element_of && element_of_mode()) {
    fail(DiagCode::DuplicateName, sym.line, 1,
         "second mode tagged elementof: " + sym.name);
  }
  index_.emplace(sym.name, symbols_.size());
  symbols_.push_back(std::move(sym));
}

const Symbol* Signature::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &symbols_[it->second];
}

const Symbol* Signature::element_of_mode() const {
  for (const auto& s : symbols_) {
    if (s.element_of) return &s;
  }
  return nullptr;
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    std::istringstream words(line);
    std::string keyword, spec, tag, extra;
    if (!(words >> keyword)) continue;
    if (!(words >> spec)) {
      fail(DiagCode::SyntaxError, line_no, 1, "expected a name after '" + keyword + "'");
    }
    words >> tag;
    if (words >> extra) fail(DiagCode::SyntaxError, line_no, 1, "trailing text '" + extra + "'");

    std::string name = spec;
    std::optional<std::size_t> arity;
    if (auto slash = spec.find('/'); slash != std::string::npos) {
      name = spec.substr(0, slash);
      std::string_view digits(spec);
      digits.remove_prefix(slash + 1);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        fail(DiagCode::SyntaxError, line_no, 1, "malformed arity in '" + spec + "'");
      }
      arity = value;
    }
    if (!is_identifier(name)) {
      fail(DiagCode::SyntaxError, line_no, 1, "invalid name '" + name + "'");
    }
    if (is_keyword(name) && name != kMembership) {
      fail(DiagCode::SyntaxError, line_no, 1, "reserved word '" + name + "' used as a name");
    }

    Symbol sym{name, SymbolKind::ObjectConst, 0, false, line_no};
    auto need_arity = [&](std::size_t min) {
      if (!arity) fail(DiagCode::SyntaxError, line_no, 1, keyword + " needs NAME/ARITY");
      if (*arity < min) {
        fail(DiagCode::SyntaxError, line_no, 1,
             keyword + " arity must be at least " + std::to_string(min));
      }
      return *arity;
    };
    auto no_arity = [&] {
      if (arity) fail(DiagCode::SyntaxError, line_no, 1, keyword + " takes no arity");
    };
    if (keyword == "obj") {
      no_arity();
    } else if (keyword == "func") {
      sym.kind = SymbolKind::FunctionConst;
      sym.arity = need_arity(1);
    } else if (keyword == "pred") {
      sym.kind = SymbolKind::PredicateConst;
      sym.arity = need_arity(0);
    } else if (keyword == "mode") {
      sym.kind = SymbolKind::Mode;
      sym.arity = need_arity(1);
    } else if (keyword == "attr") {
      sym.kind = SymbolKind::Attribute;
      sym.arity = 1;
      no_arity();
    } else {
      fail(DiagCode::SyntaxError, line_no, 1, "unknown declaration kind '" + keyword + "'");
    }
    if (!tag.empty()) {
      if (tag != "elementof" || sym.kind != SymbolKind::Mode) {
        fail(DiagCode::SyntaxError, line_no, 1, "unexpected '" + tag + "'");
      }
      if (sym.arity != 2) {
        fail(DiagCode::SyntaxError, line_no, 1, "elementof mode must have arity 2");
      }
      sym.element_of = true;
    }
    if (name == kMembership &&
        (sym.kind != SymbolKind::PredicateConst || sym.arity != 2)) {
      fail(DiagCode::DuplicateName, line_no, 1, "'in' is the builtin binary predicate");
    }
    sig.add(std::move(sym));
  }
  return sig;
}

}  // namespace mizhol::mizar
