#pragma once

#include <string>

#include "mizhol/hol/term.hpp"

namespace mizhol::hol {

struct PrintOptions {
  /// Render `r2_hidden s t` as `s ∈ t`.
  bool membership_sugar = true;
  /// Annotate binders whose type is not ι, e.g. `∀P:ι→o.`
  bool annotate_binders = true;
};

/// Debug rendering with the usual conventions: application is left
/// associative, binders extend as far right as possible, ∧ ∨ → are right
/// associative, and precedence decreases through =, ¬, ∧, ∨, →, ↔.
/// Metavariables print as `?name`. Not a stable format.
std::string print(const Term& t, const PrintOptions& opts = {});

}  // namespace mizhol::hol
