#include "mizhol/hol/ops.hpp"

namespace mizhol::hol {

namespace {

// Rebuilds `t` from mapped children, reusing the node when nothing changed.
template <typename F>
Term map_children(const Term& t, F&& f, std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::BVar:
    case TermKind::Const:
    case TermKind::Meta:
    case TermKind::Top:
      return t;
    case TermKind::App: {
      Term fn = f(t.fn(), depth);
      Term arg = f(t.arg(), depth);
      if (fn.same_node(t.fn()) && arg.same_node(t.arg())) return t;
      return Term::app(std::move(fn), std::move(arg));
    }
    case TermKind::Eq: {
      Term l = f(t.lhs(), depth);
      Term r = f(t.rhs(), depth);
      if (l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
      return Term::eq(std::move(l), std::move(r), t.type());
    }
    case TermKind::Neg: {
      Term a = f(t.operand(), depth);
      if (a.same_node(t.operand())) return t;
      return Term::neg(std::move(a));
    }
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Imp:
    case TermKind::Iff: {
      Term l = f(t.lhs(), depth);
      Term r = f(t.rhs(), depth);
      if (l.same_node(t.lhs()) && r.same_node(t.rhs())) return t;
      return Term::binary(t.kind(), std::move(l), std::move(r));
    }
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex: {
      Term b = f(t.body(), depth + 1);
      if (b.same_node(t.body())) return t;
      return Term::binder(t.kind(), t.name(), t.type(), std::move(b));
    }
  }
  return t;
}

Term abstract_at(const Term& t, std::string_view name, const Type& type,
                 std::uint32_t depth) {
  if (!t.has_free_vars()) return t;
  if (t.is(TermKind::Var)) {
    if (t.name() == name && t.type() == type) return Term::bvar(depth);
    return t;
  }
  return map_children(
      t,
      [&](const Term& c, std::uint32_t d) { return abstract_at(c, name, type, d); },
      depth);
}

Term shift_at(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  if (amount == 0 || t.loose_bound() <= cutoff) return t;
  if (t.is(TermKind::BVar)) return Term::bvar(t.index() + amount);
  return map_children(
      t, [&](const Term& c, std::uint32_t d) { return shift_at(c, amount, d); }, cutoff);
}

Term subst_at(const Term& t, const Term& value, std::uint32_t depth) {
  if (t.loose_bound() <= depth) return t;
  if (t.is(TermKind::BVar)) {
    if (t.index() == depth) return shift_at(value, depth, 0);
    return Term::bvar(t.index() - 1);  // index > depth
  }
  return map_children(
      t, [&](const Term& c, std::uint32_t d) { return subst_at(c, value, d); }, depth);
}

Term normalize(const Term& t) {
  if (t.is(TermKind::App)) {
    Term fn = normalize(t.fn());
    Term arg = normalize(t.arg());
    if (fn.is(TermKind::Lam)) return normalize(instantiate(fn.body(), arg));
    if (fn.same_node(t.fn()) && arg.same_node(t.arg())) return t;
    return Term::app(std::move(fn), std::move(arg));
  }
  return map_children(
      t, [](const Term& c, std::uint32_t) { return normalize(c); }, 0);
}

template <typename Pred>
void collect(const Term& t, std::set<TypedName>& out, Pred&& keep) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::Meta:
      if (keep(t)) out.insert({t.name(), t.type()});
      return;
    case TermKind::BVar:
    case TermKind::Top:
      return;
    case TermKind::App:
      collect(t.fn(), out, keep);
      collect(t.arg(), out, keep);
      return;
    case TermKind::Neg:
      collect(t.operand(), out, keep);
      return;
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      collect(t.body(), out, keep);
      return;
    default:
      collect(t.lhs(), out, keep);
      collect(t.rhs(), out, keep);
      return;
  }
}

}  // namespace

Term abstract(const Term& t, std::string_view name, const Type& type) {
  return abstract_at(t, name, type, 0);
}

Term instantiate(const Term& body, const Term& value) { return subst_at(body, value, 0); }

Term shift(const Term& t, std::uint32_t amount, std::uint32_t cutoff) {
  return shift_at(t, amount, cutoff);
}

std::pair<Term, Term> open_binder(const Term& binder, const std::string& var_name) {
  Term v = Term::var(var_name, binder.type());
  return {v, instantiate(binder.body(), v)};
}

Term beta_normalize(const Term& t) { return normalize(t); }

bool alpha_eq(const Term& s, const Term& t) {
  if (s.same_node(t)) return true;
  if (s.kind() != t.kind()) return false;
  switch (s.kind()) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::Meta:
      return s.name() == t.name() && s.type() == t.type();
    case TermKind::BVar:
      return s.index() == t.index();
    case TermKind::Top:
      return true;
    case TermKind::App:
      return alpha_eq(s.fn(), t.fn()) && alpha_eq(s.arg(), t.arg());
    case TermKind::Eq:
      return s.type() == t.type() && alpha_eq(s.lhs(), t.lhs()) && alpha_eq(s.rhs(), t.rhs());
    case TermKind::Neg:
      return alpha_eq(s.operand(), t.operand());
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      return s.type() == t.type() && alpha_eq(s.body(), t.body());
    default:
      return alpha_eq(s.lhs(), t.lhs()) && alpha_eq(s.rhs(), t.rhs());
  }
}

std::set<TypedName> free_vars(const Term& t) {
  std::set<TypedName> out;
  collect(t, out, [](const Term& x) { return x.is(TermKind::Var); });
  return out;
}

std::set<TypedName> constants(const Term& t) {
  std::set<TypedName> out;
  collect(t, out, [](const Term& x) { return x.is(TermKind::Const); });
  return out;
}

std::set<TypedName> metas(const Term& t) {
  std::set<TypedName> out;
  collect(t, out, [](const Term& x) { return x.is(TermKind::Meta); });
  return out;
}

namespace {
void names_into(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case TermKind::Var:
    case TermKind::Const:
    case TermKind::Meta:
      out.insert(t.name());
      return;
    case TermKind::BVar:
    case TermKind::Top:
      return;
    case TermKind::App:
      names_into(t.fn(), out);
      names_into(t.arg(), out);
      return;
    case TermKind::Neg:
      names_into(t.operand(), out);
      return;
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      out.insert(t.name());
      names_into(t.body(), out);
      return;
    default:
      names_into(t.lhs(), out);
      names_into(t.rhs(), out);
      return;
  }
}
}  // namespace

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  names_into(t, out);
  return out;
}

bool occurs_free(const Term& t, std::string_view name) {
  if (!t.has_free_vars()) return false;
  switch (t.kind()) {
    case TermKind::Var:
      return t.name() == name;
    case TermKind::App:
      return occurs_free(t.fn(), name) || occurs_free(t.arg(), name);
    case TermKind::Neg:
      return occurs_free(t.operand(), name);
    case TermKind::Lam:
    case TermKind::All:
    case TermKind::Ex:
      return occurs_free(t.body(), name);
    case TermKind::Eq:
    case TermKind::And:
    case TermKind::Or:
    case TermKind::Imp:
    case TermKind::Iff:
      return occurs_free(t.lhs(), name) || occurs_free(t.rhs(), name);
    default:
      return false;
  }
}

std::string fresh_name(const std::string& base,
                       const std::function<bool(const std::string&)>& in_use) {
  if (!in_use(base)) return base;
  for (unsigned i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!in_use(candidate)) return candidate;
  }
}

Term replace_metas(const Term& t,
                   const std::function<std::optional<Term>(const Term&)>& f) {
  if (!t.has_metas()) return t;
  if (t.is(TermKind::Meta)) {
    if (auto r = f(t)) return *r;
    return t;
  }
  return map_children(
      t, [&](const Term& c, std::uint32_t) { return replace_metas(c, f); }, 0);
}

}  // namespace mizhol::hol
