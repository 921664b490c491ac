#include "mizhol/translate/translate.hpp"

#include "mizhol/hol/ops.hpp"
#include "mizhol/translate/declarations.hpp"

namespace mizhol::translate {

using hol::Term;
using hol::Type;
using mizar::MProp;
using mizar::MTerm;
using mizar::MType;
using mizar::SymbolKind;

namespace {

const Type kI = Type::iota();
const Type kO = Type::o();

const mizar::Symbol& resolve(const TransEnv& env, const std::string& name, SourceLoc loc,
                             std::initializer_list<SymbolKind> kinds) {
  const mizar::Symbol* sym = env.signature().find(name);
  if (!sym) throw TranslateError(DiagCode::UnknownName, loc, "unknown constant '" + name + "'");
  for (SymbolKind k : kinds) {
    if (sym->kind == k) return *sym;
  }
  throw TranslateError(DiagCode::KindMismatch, loc,
                       "'" + name + "' is a " + std::string(mizar::to_string(sym->kind)));
}

const Term& resolve_var(const TransEnv& env, const std::string& name, SourceLoc loc) {
  const Term* v = env.lookup(name);
  if (!v) throw TranslateError(DiagCode::ScopeError, loc, "'" + name + "' is not in scope");
  return *v;
}

std::vector<Term> translate_terms(const std::vector<MTerm>& ts, TransEnv& env) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const MTerm& t : ts) out.push_back(translate_term(t, env));
  return out;
}

// ⟦A⟧ x, β-reduced.
Term guard_at(const Term& pred, const Term& x) {
  return hol::beta_normalize(Term::app(pred, x));
}

Term guarded_forall(const Term& x, const Term& guard, const Term& body) {
  return hol::forall(x, guard.is(hol::TermKind::Top) ? body : hol::implies(guard, body));
}

Term guarded_exists(const Term& x, const Term& guard, const Term& body) {
  return hol::exists(x, guard.is(hol::TermKind::Top) ? body : hol::conj(guard, body));
}

Term simplified_implies(const Term& guard, const Term& body) {
  return guard.is(hol::TermKind::Top) ? body : hol::implies(guard, body);
}

Term translate_fraenkel(const MTerm& t, TransEnv& env) {
  const auto& binders = t.binders();
  const std::size_t n = binders.size();
  if (n < 1 || n > env.options().max_repl_sep_arity) {
    throw TranslateError(DiagCode::InvalidArity, t.loc(),
                         "Fraenkel term with " + std::to_string(n) +
                             " binders exceeds the replSep arity limit of " +
                             std::to_string(env.options().max_repl_sep_arity));
  }
  std::vector<Term> args;
  std::vector<Term> vars;
  for (std::size_t i = 0; i < n; ++i) {
    args.push_back(hol::lam(vars, translate_type(binders[i].type, env)));
    Term v = Term::var(binders[i].name, kI);
    vars.push_back(v);
    env.push(v);
  }
  Term body = translate_term(t.body(), env);
  Term guard = translate_prop(t.guard(), env);
  env.pop(n);
  args.push_back(hol::lam(vars, body));
  args.push_back(hol::lam(vars, guard));
  return hol::apply(repl_sep_constant(n), args);
}

Term translate_prefix(const mizar::MStatement& s, std::size_t i, TransEnv& env) {
  if (i == s.prefix.size()) return translate_prop(s.body, env);
  const mizar::VarDecl& d = s.prefix[i];
  switch (d.kind) {
    case mizar::VarDecl::Kind::Object: {
      Term x = Term::var(d.name, kI);
      Term guard = guard_at(translate_type(*d.result, env), x);
      env.push(x);
      Term rest = translate_prefix(s, i + 1, env);
      env.pop();
      return guarded_forall(x, guard, rest);
    }
    case mizar::VarDecl::Kind::Function: {
      const std::size_t n = d.arity();
      Term f = Term::var(d.name, Type::iota_n(n, kI));
      // ∀x1. ⟦A1⟧x1 → … → ∀xn. ⟦An⟧xn → ⟦B⟧(F x1 … xn)
      std::vector<Term> xs;
      std::vector<Term> guards;
      for (std::size_t j = 0; j < n; ++j) {
        Term x = env.fresh_var("x", kI);
        guards.push_back(guard_at(translate_type(d.arg_types[j], env), x));
        xs.push_back(x);
        env.push(x);
      }
      Term typing = guard_at(translate_type(*d.result, env), hol::apply(f, xs));
      env.pop(n);
      for (std::size_t j = n; j-- > 0;) {
        typing = hol::forall(xs[j], simplified_implies(guards[j], typing));
      }
      env.push(f);
      Term rest = translate_prefix(s, i + 1, env);
      env.pop();
      return hol::forall(f, hol::implies(typing, rest));
    }
    case mizar::VarDecl::Kind::Predicate: {
      Term p = Term::var(d.name, Type::iota_n(d.arity(), kO));
      env.push(p);
      Term rest = translate_prefix(s, i + 1, env);
      env.pop();
      return hol::forall(p, rest);
    }
  }
  throw Error("unhandled declaration kind");
}

}  // namespace

Type constant_type(const mizar::Symbol& sym) {
  switch (sym.kind) {
    case SymbolKind::ObjectConst:
      return kI;
    case SymbolKind::FunctionConst:
      return Type::iota_n(sym.arity, kI);
    case SymbolKind::PredicateConst:
    case SymbolKind::Mode:
    case SymbolKind::Attribute:
      return Type::iota_n(sym.arity, kO);
  }
  throw Error("unhandled symbol kind");
}

Term constant_term(const mizar::Symbol& sym) {
  if (sym.name == mizar::kMembership) return membership_constant();
  return Term::constant(sym.name, constant_type(sym));
}

Term translate_type(const MType& a, TransEnv& env) {
  Term x = env.fresh_var("x", kI);
  switch (a.kind()) {
    case MType::Kind::Set:
      return hol::lam(x, hol::top());
    case MType::Kind::Mode: {
      const auto& sym = resolve(env, a.name(), a.loc(), {SymbolKind::Mode});
      std::vector<Term> args{x};
      for (Term& t : translate_terms(a.args(), env)) args.push_back(std::move(t));
      return hol::lam(x, hol::apply(constant_term(sym), args));
    }
    case MType::Kind::Attr: {
      const auto& sym = resolve(env, a.name(), a.loc(), {SymbolKind::Attribute});
      Term q = hol::apply(constant_term(sym), {x});
      if (a.negated()) q = hol::neg(q);
      Term base = translate_type(a.base(), env);
      return hol::lam(x, hol::conj(q, guard_at(base, x)));
    }
  }
  throw Error("unhandled type kind");
}

Term translate_term(const MTerm& t, TransEnv& env) {
  switch (t.kind()) {
    case MTerm::Kind::ObjVar:
      return resolve_var(env, t.name(), t.loc());
    case MTerm::Kind::ObjConst:
      return constant_term(resolve(env, t.name(), t.loc(), {SymbolKind::ObjectConst}));
    case MTerm::Kind::FunVarApp:
      return hol::apply(resolve_var(env, t.name(), t.loc()), translate_terms(t.args(), env));
    case MTerm::Kind::FunConstApp: {
      const auto& sym = resolve(env, t.name(), t.loc(), {SymbolKind::FunctionConst});
      return hol::apply(constant_term(sym), translate_terms(t.args(), env));
    }
    case MTerm::Kind::The:
      return hol::apply(eps_constant(), {translate_type(t.type(), env)});
    case MTerm::Kind::Fraenkel:
      return translate_fraenkel(t, env);
  }
  throw Error("unhandled term kind");
}

Term translate_prop(const MProp& p, TransEnv& env) {
  switch (p.kind()) {
    case MProp::Kind::PredVarApp:
      return hol::apply(resolve_var(env, p.name(), p.loc()), translate_terms(p.args(), env));
    case MProp::Kind::PredConstApp: {
      const auto& sym = resolve(env, p.name(), p.loc(),
                                {SymbolKind::PredicateConst, SymbolKind::Mode,
                                 SymbolKind::Attribute});
      return hol::apply(constant_term(sym), translate_terms(p.args(), env));
    }
    case MProp::Kind::Eq:
      return hol::eq(translate_term(p.left(), env), translate_term(p.right(), env));
    case MProp::Kind::In:
      return member(translate_term(p.left(), env), translate_term(p.right(), env));
    case MProp::Kind::Not:
      return hol::neg(translate_prop(p.operand(), env));
    case MProp::Kind::And:
      return hol::conj(translate_prop(p.lhs(), env), translate_prop(p.rhs(), env));
    case MProp::Kind::Or:
      return hol::disj(translate_prop(p.lhs(), env), translate_prop(p.rhs(), env));
    case MProp::Kind::Imp:
      return hol::implies(translate_prop(p.lhs(), env), translate_prop(p.rhs(), env));
    case MProp::Kind::Iff:
      return hol::iff(translate_prop(p.lhs(), env), translate_prop(p.rhs(), env));
    case MProp::Kind::ForBeing:
    case MProp::Kind::ExBeing: {
      Term x = Term::var(p.var(), kI);
      Term guard = guard_at(translate_type(p.var_type(), env), x);
      env.push(x);
      Term body = translate_prop(p.body(), env);
      env.pop();
      return p.kind() == MProp::Kind::ForBeing ? guarded_forall(x, guard, body)
                                               : guarded_exists(x, guard, body);
    }
  }
  throw Error("unhandled proposition kind");
}

Term translate_statement(const mizar::MStatement& s, TransEnv& env) {
  return translate_prefix(s, 0, env);
}

Term translate_statement(const mizar::MStatement& s, const mizar::Signature& sig,
                         TranslateOptions opts) {
  TransEnv env(sig, opts);
  return translate_statement(s, env);
}

}  // namespace mizhol::translate
