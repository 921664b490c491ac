#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/term.hpp"

namespace mizhol::match {

struct MetaVar {
  std::string name;
  hol::Type type;

  hol::Term term() const { return hol::Term::meta(name, type); }
  friend bool operator==(const MetaVar&, const MetaVar&) = default;
};

/// lhs =? rhs under the bound variables in `context`, which occur in both
/// sides as free variables. rhs must not contain metavariables.
struct DisagreementPair {
  std::vector<hol::TypedName> context;
  hol::Term lhs;
  hol::Term rhs;
};

/// Metavariable assignment in insertion order. Bound terms are closed with
/// respect to the matching context and contain no assigned metavariables.
class Substitution {
 public:
  void bind(MetaVar m, hol::Term value);
  const hol::Term* find(const std::string& name) const;
  const std::vector<std::pair<MetaVar, hol::Term>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Replaces assigned metavariables and β-normalizes.
  hol::Term apply(const hol::Term& t) const;

 private:
  std::vector<std::pair<MetaVar, hol::Term>> entries_;
};

class MatchError : public Error {
 public:
  enum class Kind { NotAPattern, NoMatch, OccursEscape, ShapeMismatch, NotEnoughQuantifiers };
  MatchError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }
  /// The pair has no solution: a structural clash or an escaping bound
  /// variable.
  bool no_match() const { return kind_ == Kind::NoMatch || kind_ == Kind::OccursEscape; }

 private:
  Kind kind_;
};

std::string_view to_string(MatchError::Kind kind);

/// True iff every occurrence of a metavariable from `metas` is applied to
/// distinct bound variables: variables bound inside `t` or listed in `context`.
bool is_pattern(const hol::Term& t, const std::set<hol::TypedName>& metas,
                std::span<const hol::TypedName> context = {});
/// Same, for all metavariables occurring in `t`.
bool is_pattern(const hol::Term& t, std::span<const hol::TypedName> context = {});

/// Most general σ with σ(lhs) =βα rhs for every pair, processed left to
/// right. A flexible occurrence M x1 … xk against r is solved by
/// M := λx1 … xk. r, η-shortened. Throws MatchError.
Substitution pattern_match(std::span<const DisagreementPair> pairs);

struct Stripped {
  std::vector<MetaVar> metas;
  hol::Term matrix;
};

/// Replaces the first k universal quantifiers by fresh metavariables.
Stripped strip_outer_quantifiers(const hol::Term& formula, std::size_t k);

struct Instantiation {
  Substitution subst;
  /// σ(H1) … σ(Hm) for the hypotheses passed on the way to the consequent.
  std::vector<hol::Term> side_conditions;
};

/// Strips k universals from `scheme` and matches its matrix against
/// `conjecture`, descending through top-level implications until a
/// consequent matches.
Instantiation recover_scheme_instantiation(const hol::Term& scheme,
                                           const hol::Term& conjecture, std::size_t k);

}  // namespace mizhol::match
