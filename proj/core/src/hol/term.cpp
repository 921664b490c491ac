#include "mizhol/hol/term.hpp"

#include <algorithm>
#include <cassert>

#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/typing.hpp"

namespace mizhol::hol {

struct Term::Node {
  TermKind kind;
  std::string name;
  Type type = Type::iota();
  std::uint32_t index = 0;
  Term a{nullptr};
  Term b{nullptr};
  std::uint32_t loose = 0;
  bool metas = false;
  bool fvars = false;
};

namespace {

std::uint32_t loose_of(const Term& t, std::uint32_t lift = 0) {
  std::uint32_t l = t.loose_bound();
  return l > lift ? l - lift : 0;
}

}  // namespace

Term Term::var(std::string name, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Var;
  n->name = std::move(name);
  n->type = std::move(type);
  n->fvars = true;
  return Term(std::move(n));
}

Term Term::bvar(std::uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::BVar;
  n->index = index;
  n->loose = index + 1;
  return Term(std::move(n));
}

Term Term::constant(std::string name, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Const;
  n->name = std::move(name);
  n->type = std::move(type);
  return Term(std::move(n));
}

Term Term::meta(std::string name, Type type) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Meta;
  n->name = std::move(name);
  n->type = std::move(type);
  n->metas = true;
  return Term(std::move(n));
}

Term Term::app(Term fn, Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::App;
  n->loose = std::max(fn.loose_bound(), arg.loose_bound());
  n->metas = fn.has_metas() || arg.has_metas();
  n->fvars = fn.has_free_vars() || arg.has_free_vars();
  n->a = std::move(fn);
  n->b = std::move(arg);
  return Term(std::move(n));
}

Term Term::top() {
  static const Term t = [] {
    auto n = std::make_shared<Node>();
    n->kind = TermKind::Top;
    n->type = Type::o();
    return Term(std::move(n));
  }();
  return t;
}

Term Term::eq(Term lhs, Term rhs, Type at) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Eq;
  n->type = std::move(at);
  n->loose = std::max(lhs.loose_bound(), rhs.loose_bound());
  n->metas = lhs.has_metas() || rhs.has_metas();
  n->fvars = lhs.has_free_vars() || rhs.has_free_vars();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Term(std::move(n));
}

Term Term::neg(Term arg) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::Neg;
  n->type = Type::o();
  n->loose = arg.loose_bound();
  n->metas = arg.has_metas();
  n->fvars = arg.has_free_vars();
  n->a = std::move(arg);
  return Term(std::move(n));
}

Term Term::binary(TermKind kind, Term lhs, Term rhs) {
  assert(kind == TermKind::And || kind == TermKind::Or || kind == TermKind::Imp ||
         kind == TermKind::Iff);
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->type = Type::o();
  n->loose = std::max(lhs.loose_bound(), rhs.loose_bound());
  n->metas = lhs.has_metas() || rhs.has_metas();
  n->fvars = lhs.has_free_vars() || rhs.has_free_vars();
  n->a = std::move(lhs);
  n->b = std::move(rhs);
  return Term(std::move(n));
}

Term Term::binder(TermKind kind, std::string name, Type type, Term body) {
  assert(kind == TermKind::Lam || kind == TermKind::All || kind == TermKind::Ex);
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  n->type = std::move(type);
  n->loose = loose_of(body, 1);
  n->metas = body.has_metas();
  n->fvars = body.has_free_vars();
  n->a = std::move(body);
  return Term(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }

bool Term::is_binder() const {
  auto k = kind();
  return k == TermKind::Lam || k == TermKind::All || k == TermKind::Ex;
}

bool Term::is_binary() const {
  auto k = kind();
  return k == TermKind::And || k == TermKind::Or || k == TermKind::Imp ||
         k == TermKind::Iff;
}

const std::string& Term::name() const { return node_->name; }
const Type& Term::type() const { return node_->type; }
std::uint32_t Term::index() const { return node_->index; }

const Term& Term::fn() const {
  assert(is(TermKind::App));
  return node_->a;
}
const Term& Term::arg() const {
  assert(is(TermKind::App));
  return node_->b;
}
const Term& Term::lhs() const {
  assert(is(TermKind::Eq) || is_binary());
  return node_->a;
}
const Term& Term::rhs() const {
  assert(is(TermKind::Eq) || is_binary());
  return node_->b;
}
const Term& Term::operand() const {
  assert(is(TermKind::Neg));
  return node_->a;
}
const Term& Term::body() const {
  assert(is_binder());
  return node_->a;
}

std::uint32_t Term::loose_bound() const { return node_ ? node_->loose : 0; }
bool Term::has_metas() const { return node_ && node_->metas; }
bool Term::has_free_vars() const { return node_ && node_->fvars; }

Term top() { return Term::top(); }
Term neg(Term t) { return Term::neg(std::move(t)); }
Term conj(Term a, Term b) { return Term::binary(TermKind::And, std::move(a), std::move(b)); }
Term disj(Term a, Term b) { return Term::binary(TermKind::Or, std::move(a), std::move(b)); }
Term implies(Term a, Term b) {
  return Term::binary(TermKind::Imp, std::move(a), std::move(b));
}
Term iff(Term a, Term b) { return Term::binary(TermKind::Iff, std::move(a), std::move(b)); }

Term eq(Term lhs, Term rhs) {
  Type at = infer_type(lhs);
  return Term::eq(std::move(lhs), std::move(rhs), std::move(at));
}

Term apply(Term fn, std::span<const Term> args) {
  for (const auto& a : args) fn = Term::app(std::move(fn), a);
  return fn;
}

Term apply(Term fn, std::initializer_list<Term> args) {
  return apply(std::move(fn), std::span<const Term>(args.begin(), args.size()));
}

namespace {

Term bind(TermKind kind, const Term& var, const Term& body) {
  assert(var.is(TermKind::Var));
  return Term::binder(kind, var.name(), var.type(), abstract(body, var.name(), var.type()));
}

Term bind_all(TermKind kind, std::span<const Term> vars, Term body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = bind(kind, *it, body);
  return body;
}

}  // namespace

Term lam(const Term& var, const Term& body) { return bind(TermKind::Lam, var, body); }
Term forall(const Term& var, const Term& body) { return bind(TermKind::All, var, body); }
Term exists(const Term& var, const Term& body) { return bind(TermKind::Ex, var, body); }
Term lam(std::span<const Term> vars, const Term& body) {
  return bind_all(TermKind::Lam, vars, body);
}
Term forall(std::span<const Term> vars, const Term& body) {
  return bind_all(TermKind::All, vars, body);
}
Term exists(std::span<const Term> vars, const Term& body) {
  return bind_all(TermKind::Ex, vars, body);
}

Spine strip_app(const Term& t) {
  Spine s{t, {}};
  while (s.head.is(TermKind::App)) {
    s.args.push_back(s.head.arg());
    s.head = s.head.fn();
  }
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

}  // namespace mizhol::hol
