#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mizhol/diagnostic.hpp"

namespace mizhol::mizar {

enum class SymbolKind { ObjectConst, FunctionConst, PredicateConst, Mode, Attribute };

std::string_view to_string(SymbolKind kind);

struct Symbol {
  std::string name;
  SymbolKind kind;
  /// Number of arguments of the underlying HOL constant. For modes this
  /// includes the implicit subject argument; attributes have arity 1.
  std::size_t arity = 0;
  /// Mode reachable through the `Element of T` sugar.
  bool element_of = false;
  int line = 0;

  /// Explicit arguments written at a use site: arity − 1 for modes.
  std::size_t explicit_arity() const;
};

/// Constants available to statements. The membership predicate `in` is
/// always present.
class Signature {
 public:
  Signature();

  /// Throws ParseError(DuplicateName) when `sym.name` is already declared
  /// with a different kind or arity.
  void add(Symbol sym);

  const Symbol* find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const Symbol* element_of_mode() const;

  /// Declaration order, builtin first.
  const std::vector<Symbol>& symbols() const { return symbols_; }

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

inline constexpr std::string_view kMembership = "in";

/// Line-oriented format, `#` starts a comment:
///   obj NAME | func NAME/ARITY | pred NAME/ARITY | mode NAME/ARITY [elementof] | attr NAME
Signature parse_signature(std::string_view text);

bool is_identifier(std::string_view s);
bool is_keyword(std::string_view s);

}  // namespace mizhol::mizar
