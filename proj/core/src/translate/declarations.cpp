#include "mizhol/translate/declarations.hpp"

#include <charconv>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/ops.hpp"

namespace mizhol::translate {

using hol::Term;
using hol::Type;

namespace names {

std::string repl_sep(std::size_t n) { return "replSep_" + std::to_string(n); }
std::string repl_sep_intro(std::size_t n) { return "replSepI_" + std::to_string(n); }
std::string repl_sep_elim(std::size_t n) { return "replSepE_" + std::to_string(n); }

std::optional<std::size_t> repl_sep_arity(const std::string& name) {
  constexpr std::string_view prefix = "replSep_";
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  std::size_t n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc{} || ptr != last || n == 0 || *first == '0') return std::nullopt;
  return n;
}

}  // namespace names

namespace {

const Type kI = Type::iota();
const Type kO = Type::o();

void require_positive(std::size_t n) {
  if (n < 1) throw Error("replSep arity must be at least 1, got " + std::to_string(n));
}

// Class-variable names A, B, C, … (skipping letters used elsewhere).
std::string class_var_name(std::size_t i, std::size_t n) {
  static constexpr std::string_view letters = "ABCDEGHJKLMN";
  if (n <= letters.size()) return std::string(1, letters[i]);
  return "A" + std::to_string(i + 1);
}

std::string elem_var_name(std::size_t i, std::size_t n) {
  if (n == 1) return "x";
  if (n == 2) return i == 0 ? "x" : "y";
  return "x" + std::to_string(i + 1);
}

struct ReplSepVars {
  std::vector<Term> classes;  // A_i : ι^i → o
  Term map;                   // f : ι^n → ι
  Term guard;                 // P : ι^n → o
  std::vector<Term> elems;    // x_i : ι

  std::vector<Term> outer() const {
    std::vector<Term> vs = classes;
    vs.push_back(map);
    vs.push_back(guard);
    return vs;
  }

  Term repl_sep_applied() const {
    return hol::apply(repl_sep_constant(classes.size()), outer());
  }

  // A_i x_1 … x_i (i is 0-based)
  Term class_at(std::size_t i) const {
    return hol::apply(classes[i], std::span<const Term>(elems.data(), i + 1));
  }
};

ReplSepVars repl_sep_vars(std::size_t n) {
  ReplSepVars v{{}, Term::var("f", Type::iota_n(n, kI)), Term::var("P", Type::iota_n(n, kO)), {}};
  for (std::size_t i = 0; i < n; ++i) {
    v.classes.push_back(Term::var(class_var_name(i, n), Type::iota_n(i + 1, kO)));
    v.elems.push_back(Term::var(elem_var_name(i, n), kI));
  }
  return v;
}

}  // namespace

Term eps_constant() { return Term::constant(names::kEps, Type::arrow(Type::arrow(kI, kO), kI)); }

Term membership_constant() {
  return Term::constant(names::kMembership, Type::iota_n(2, kO));
}

Term sethood_constant() {
  return Term::constant(names::kSethood, Type::arrow(Type::arrow(kI, kO), kO));
}

Term repl_sep_constant(std::size_t n) {
  return Term::constant(names::repl_sep(n), repl_sep_type(n));
}

Term member(Term a, Term b) {
  return hol::apply(membership_constant(), {std::move(a), std::move(b)});
}

Type repl_sep_type(std::size_t n) {
  require_positive(n);
  std::vector<Type> args;
  for (std::size_t i = 1; i <= n; ++i) args.push_back(Type::iota_n(i, kO));
  args.push_back(Type::iota_n(n, kI));
  args.push_back(Type::iota_n(n, kO));
  return Type::curried(args, kI);
}

Declaration gen_repl_sep_decl(std::size_t n) {
  require_positive(n);
  return Declaration{names::repl_sep(n), repl_sep_type(n), std::nullopt, {}};
}

std::pair<NamedFormula, NamedFormula> gen_repl_sep_axioms(std::size_t n) {
  require_positive(n);
  ReplSepVars v = repl_sep_vars(n);
  const std::vector<Term> outer = v.outer();

  // replSepI_n: hypotheses, innermost first, folded into right-nested implications.
  Term intro = member(hol::apply(v.map, v.elems), v.repl_sep_applied());
  intro = hol::implies(hol::apply(v.guard, v.elems), intro);
  for (std::size_t i = n; i-- > 0;) intro = hol::implies(v.class_at(i), intro);
  for (std::size_t i = n; i-- > 0;) {
    // ∀x_1 … x_i. A_1 x_1 → … → A_i x_1 … x_i → sethood (A_{i+1} x_1 … x_i)
    Term partial = hol::apply(v.classes[i], std::span<const Term>(v.elems.data(), i));
    Term hyp = hol::apply(sethood_constant(), {partial});
    for (std::size_t j = i; j-- > 0;) hyp = hol::implies(v.class_at(j), hyp);
    hyp = hol::forall(std::span<const Term>(v.elems.data(), i), hyp);
    intro = hol::implies(hyp, intro);
  }
  intro = hol::forall(outer, hol::forall(v.elems, intro));

  // replSepE_n
  Term y = Term::var("y", kI);
  if (n == 2) y = Term::var("z", kI);
  Term body = hol::eq(y, hol::apply(v.map, v.elems));
  body = hol::conj(hol::apply(v.guard, v.elems), body);
  for (std::size_t i = n; i-- > 0;) body = hol::conj(v.class_at(i), body);
  Term elim = hol::implies(member(y, v.repl_sep_applied()), hol::exists(v.elems, body));
  elim = hol::forall(outer, hol::forall(y, elim));

  return {NamedFormula{names::repl_sep_intro(n), intro},
          NamedFormula{names::repl_sep_elim(n), elim}};
}

Declaration eps_declaration() {
  Term p = Term::var("p", Type::arrow(kI, kO));
  Term x = Term::var("x", kI);
  Term chosen = hol::apply(eps_constant(), {p});
  Term ax = hol::forall(p, hol::forall(x, hol::implies(hol::apply(p, {x}),
                                                       hol::apply(p, {chosen}))));
  return Declaration{names::kEps, eps_constant().type(), std::nullopt,
                     {NamedFormula{names::kEpsAx, ax}}};
}

Declaration membership_declaration() {
  return Declaration{names::kMembership, membership_constant().type(), std::nullopt, {}};
}

Declaration sethood_declaration() {
  Term p = Term::var("p", Type::arrow(kI, kO));
  Term y = Term::var("y", kI);
  Term x = Term::var("x", kI);
  Term body = hol::lam(
      p, hol::exists(y, hol::forall(x, hol::implies(hol::apply(p, {x}), member(x, y)))));
  return Declaration{names::kSethood, sethood_constant().type(), body, {}};
}

std::vector<NamedFormula> element_of_axioms(const std::string& mode, bool with_sethood) {
  Term m = Term::constant(mode, Type::iota_n(2, kO));
  Term a = Term::var("A", kI);
  Term b = Term::var("B", kI);
  std::vector<NamedFormula> out{
      {"existence_" + mode, hol::forall(a, hol::exists(b, hol::apply(m, {b, a})))}};
  if (with_sethood) {
    Term big_x = Term::var("X", kI);
    Term x = Term::var("x", kI);
    Term cls = hol::lam(x, hol::apply(m, {x, big_x}));
    out.push_back({"sethood_" + mode,
                   hol::forall(big_x, hol::apply(sethood_constant(), {cls}))});
  }
  return out;
}

std::vector<Declaration> base_declarations(const mizar::Signature* sig) {
  std::vector<Declaration> out{eps_declaration(), membership_declaration(),
                               sethood_declaration()};
  if (sig) {
    if (const mizar::Symbol* mode = sig->element_of_mode()) {
      out.push_back(Declaration{mode->name, Type::iota_n(2, kO), std::nullopt,
                                element_of_axioms(mode->name, true)});
    }
  }
  return out;
}

}  // namespace mizhol::translate
