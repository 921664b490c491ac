#pragma once

#include <string>

#include "mizhol/hol/term.hpp"
#include "mizhol/thf/mangle.hpp"
#include "mizhol/thf/problem.hpp"

namespace mizhol::thf {

/// "$i", "$o", "$i > $o", "($i > $o) > $i".
std::string emit_type(const hol::Type& t);

/// THF0 text of a closed formula; constants are renamed through `names`.
std::string emit_formula(const hol::Term& t, MangleTable& names);

/// The whole problem: type declarations, definitions, axioms attached to
/// declarations, user axioms, conjecture. Deterministic.
std::string emit_thf(const Problem& p);

}  // namespace mizhol::thf
