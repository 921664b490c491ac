#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/term.hpp"

namespace mizhol::thf {

/// One annotated formula of a THF0 file.
struct ThfEntry {
  std::string name;
  std::string role;
  SourceLoc loc;
  /// role == "type": the declared constant and its type.
  std::string symbol;
  std::optional<hol::Type> type;
  /// Every other role: the formula, with constants typed by their declarations.
  std::optional<hol::Term> formula;
};

struct ThfDocument {
  std::vector<ThfEntry> entries;

  const ThfEntry* find(std::string_view name) const;
};

/// Reads the supported THF0 subset: `thf(name, role, formula).` with $i/$o
/// and arrow types, typed binders `! ? ^`, `@`, `= !=`, `~ & | => <= <=> <~>`,
/// `$true $false`. Constants must be declared before use. Throws ParseError
/// with every diagnostic found.
ThfDocument parse_thf(std::string_view text);

/// Diagnostics of parse_thf, plus type errors; empty when the text is valid.
Diagnostics check_thf(std::string_view text);

}  // namespace mizhol::thf
