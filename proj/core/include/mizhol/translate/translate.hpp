#pragma once

#include "mizhol/hol/term.hpp"
#include "mizhol/mizar/ast.hpp"
#include "mizhol/mizar/signature.hpp"
#include "mizhol/translate/env.hpp"

namespace mizhol::translate {

/// HOL type of a signature constant: ι, ιⁿ→ι, or ιⁿ→o.
hol::Type constant_type(const mizar::Symbol& sym);
hol::Term constant_term(const mizar::Symbol& sym);

/// ⟦A⟧ : ι→o
hol::Term translate_type(const mizar::MType& a, TransEnv& env);
/// ⟦T⟧ : ι
hol::Term translate_term(const mizar::MTerm& t, TransEnv& env);
/// ⟦Φ⟧ : o
hol::Term translate_prop(const mizar::MProp& p, TransEnv& env);
/// ⟦(Γ,Φ)⟧ : o, closed.
hol::Term translate_statement(const mizar::MStatement& s, TransEnv& env);
hol::Term translate_statement(const mizar::MStatement& s, const mizar::Signature& sig,
                              TranslateOptions opts = {});

}  // namespace mizhol::translate
