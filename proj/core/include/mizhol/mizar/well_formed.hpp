#pragma once

#include "mizhol/diagnostic.hpp"
#include "mizhol/mizar/ast.hpp"
#include "mizhol/mizar/signature.hpp"

namespace mizhol::mizar {

/// Checks the M-level formation rules: names resolve to the right kind,
/// arities match, prefix and Fraenkel binders are distinct, and each
/// declaration only refers to variables declared before it. One diagnostic
/// per violation; empty when the statement is well formed.
Diagnostics well_formed(const MStatement& s, const Signature& sig);

}  // namespace mizhol::mizar
