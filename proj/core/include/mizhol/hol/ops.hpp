#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "mizhol/hol/term.hpp"

namespace mizhol::hol {

struct TypedName {
  std::string name;
  Type type;

  friend bool operator==(const TypedName&, const TypedName&) = default;
  friend std::strong_ordering operator<=>(const TypedName& a, const TypedName& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.type <=> b.type;
  }
};

/// Replaces free occurrences of Var(name, type) by the bound variable of a
/// binder placed directly around `t`.
Term abstract(const Term& t, std::string_view name, const Type& type);

/// Substitutes `value` for loose BVar 0 of `body`, lowering the other loose
/// indices. `value` may itself contain loose indices.
Term instantiate(const Term& body, const Term& value);

/// Adds `amount` to every loose index >= `cutoff`.
Term shift(const Term& t, std::uint32_t amount, std::uint32_t cutoff = 0);

/// Opens a Lam/All/Ex with a free variable of the given name.
std::pair<Term, Term> open_binder(const Term& binder, const std::string& var_name);

/// β-normal form. Only well-typed input is guaranteed to terminate.
Term beta_normalize(const Term& t);

/// Equality up to renaming of bound variables.
bool alpha_eq(const Term& s, const Term& t);

std::set<TypedName> free_vars(const Term& t);
std::set<TypedName> constants(const Term& t);
std::set<TypedName> metas(const Term& t);
/// All names used by free variables, constants, metas and binders.
std::set<std::string> all_names(const Term& t);

bool occurs_free(const Term& t, std::string_view name);

/// `base` if unused, else `base` followed by the smallest numeric suffix that
/// is not in use.
std::string fresh_name(const std::string& base,
                       const std::function<bool(const std::string&)>& in_use);

/// Rebuilds `t` bottom-up, replacing every Meta for which `f` returns a term.
Term replace_metas(const Term& t,
                   const std::function<std::optional<Term>(const Term&)>& f);

}  // namespace mizhol::hol
