#include "mizhol/hol/print.hpp"
#include "mizhol/match/pattern.hpp"

namespace mizhol::match {

using hol::Term;
using hol::TermKind;

Stripped strip_outer_quantifiers(const Term& formula, std::size_t k) {
  Stripped out{{}, formula};
  std::set<std::string> taken;
  for (const auto& m : hol::metas(formula)) taken.insert(m.name);
  for (std::size_t i = 0; i < k; ++i) {
    if (!out.matrix.is(TermKind::All)) {
      throw MatchError(MatchError::Kind::NotEnoughQuantifiers,
                       "expected " + std::to_string(k) + " outer universal quantifiers, found " +
                           std::to_string(i));
    }
    std::string name = hol::fresh_name(
        out.matrix.name(), [&](const std::string& n) { return taken.count(n) > 0; });
    taken.insert(name);
    MetaVar m{name, out.matrix.type()};
    out.matrix = hol::instantiate(out.matrix.body(), m.term());
    out.metas.push_back(std::move(m));
  }
  return out;
}

Instantiation recover_scheme_instantiation(const Term& scheme, const Term& conjecture,
                                           std::size_t k) {
  Stripped st = strip_outer_quantifiers(scheme, k);
  std::vector<Term> hypotheses;
  Term candidate = st.matrix;
  std::optional<MatchError> last_error;
  for (;;) {
    try {
      DisagreementPair pair{{}, candidate, conjecture};
      Instantiation result{pattern_match(std::span<const DisagreementPair>(&pair, 1)), {}};
      for (const Term& h : hypotheses) result.side_conditions.push_back(result.subst.apply(h));
      return result;
    } catch (const MatchError& e) {
      if (e.kind() == MatchError::Kind::NotAPattern) throw;
      last_error = e;
    }
    if (!candidate.is(TermKind::Imp)) break;
    hypotheses.push_back(candidate.lhs());
    candidate = candidate.rhs();
  }
  if (last_error->kind() != MatchError::Kind::NoMatch) throw *last_error;
  throw MatchError(MatchError::Kind::ShapeMismatch,
                   "no consequent of " + hol::print(st.matrix) + " matches " +
                       hol::print(conjecture) + ": " + last_error->what());
}

}  // namespace mizhol::match
