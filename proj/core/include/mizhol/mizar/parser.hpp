#pragma once

#include <string>
#include <string_view>

#include "mizhol/mizar/ast.hpp"
#include "mizhol/mizar/signature.hpp"

namespace mizhol::mizar {

/// Parses one `scheme NAME { decls } : PROP [provided PROP and …]` or
/// `statement : PROP`. Names declared in the scheme header or bound by a
/// quantifier or Fraenkel term are variables; all others resolve against
/// `sig`. Throws ParseError carrying every diagnostic found.
MStatement parse_statement(std::string_view text, const Signature& sig);

/// Canonical concrete syntax, accepted back by parse_statement.
std::string print_statement(const MStatement& s);
std::string print_prop(const MProp& p);
std::string print_term(const MTerm& t);
std::string print_type(const MType& t);

}  // namespace mizhol::mizar
