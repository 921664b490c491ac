#include <gtest/gtest.h>

#include "mizhol/hol/ops.hpp"
#include "mizhol/hol/print.hpp"
#include "mizhol/hol/typing.hpp"
#include "mizhol/mizar/parser.hpp"
#include "mizhol/thf/check.hpp"
#include "mizhol/translate/declarations.hpp"
#include "mizhol/translate/translate.hpp"
#include "support.hpp"

namespace mizhol::translate {
namespace {

using hol::Term;
using hol::Type;
using mizar::MProp;
using mizar::MTerm;
using mizar::MType;

const Type kI = Type::iota();
const Type kO = Type::o();

const mizar::Signature& sig() {
  static const mizar::Signature s =
      mizar::parse_signature(testing::read_file(testing::corpus_dir() / "mml.sig"));
  return s;
}

Term elt() { return Term::constant("m1_subset_1", Type::iota_n(2, kO)); }

Term statement(const std::string& text) {
  return translate_statement(mizar::parse_statement(text, sig()), sig());
}

Term corpus_statement(const std::string& file) {
  return statement(testing::read_file(testing::corpus_dir() / file));
}

const Term& canonical(const std::string& name) {
  static const thf::ThfDocument doc =
      thf::parse_thf(testing::read_file(testing::corpus_dir() / "canonical" / "translations.p"));
  const thf::ThfEntry* e = doc.find(name);
  if (!e || !e->formula) throw std::runtime_error("missing canonical entry " + name);
  return *e->formula;
}

TEST(TranslateType, SetIsTrivial) {
  TransEnv env(sig());
  Term t = translate_type(MType::set(), env);
  ASSERT_TRUE(t.is(hol::TermKind::Lam));
  EXPECT_TRUE(t.body().is(hol::TermKind::Top));
  EXPECT_EQ(hol::infer_type(t), Type::arrow(kI, kO));
}

TEST(TranslateType, ElementOfMode) {
  TransEnv env(sig());
  Term X = Term::var("X", kI);
  env.push(X);
  Term t = translate_type(MType::mode("m1_subset_1", {MTerm::obj_var("X")}), env);
  Term x = Term::var("x", kI);
  EXPECT_TRUE(hol::alpha_eq(t, hol::lam(x, hol::apply(elt(), {x, X})))) << hol::print(t);
}

TEST(TranslateType, AttributeKeepsTrivialBase) {
  TransEnv env(sig());
  Term t = translate_type(MType::attr("v1_xboole_0", MType::set()), env);
  Term x = Term::var("x", kI);
  Term v = Term::constant("v1_xboole_0", Type::arrow(kI, kO));
  EXPECT_TRUE(hol::alpha_eq(t, hol::lam(x, hol::conj(Term::app(v, x), hol::top()))))
      << hol::print(t);
  Term n = translate_type(MType::attr("v1_xboole_0", MType::set(), true), env);
  EXPECT_TRUE(hol::alpha_eq(n, hol::lam(x, hol::conj(hol::neg(Term::app(v, x)), hol::top()))))
      << hol::print(n);
}

TEST(TranslateType, FreshBinderAvoidsScope) {
  TransEnv env(sig());
  Term x = Term::var("x", kI);
  env.push(x);
  Term t = translate_type(MType::mode("m1_subset_1", {MTerm::obj_var("x")}), env);
  ASSERT_TRUE(t.is(hol::TermKind::Lam));
  EXPECT_NE(t.name(), "x");
  EXPECT_TRUE(hol::alpha_eq(t, hol::lam(Term::var("u", kI), hol::apply(elt(), {Term::var("u", kI), x}))));
}

TEST(TranslateTerm, ChoiceOverElementOf) {
  TransEnv env(sig());
  Term t = translate_term(MTerm::the(MType::mode("m1_subset_1", {MTerm::obj_const("c")})), env);
  Term x = Term::var("x", kI);
  Term c = Term::constant("c", kI);
  EXPECT_TRUE(hol::alpha_eq(t, Term::app(eps_constant(), hol::lam(x, hol::apply(elt(), {x, c})))));
}

TEST(TranslateTerm, OneBinderFraenkel) {
  TransEnv env(sig());
  Term X1 = Term::var("X1", kI);
  Term Q = Term::var("Q", Type::arrow(kI, kO));
  env.push(X1);
  env.push(Q);
  MTerm x = MTerm::obj_var("x");
  MTerm fr = MTerm::fraenkel({{"x", MType::mode("m1_subset_1", {MTerm::obj_var("X1")}), {}}}, x,
                             MProp::pred_var_app("Q", {x}));
  Term got = translate_term(fr, env);
  Term v = Term::var("x", kI);
  Term expected = hol::apply(repl_sep_constant(1), {hol::lam(v, hol::apply(elt(), {v, X1})),
                                                    hol::lam(v, v), hol::lam(v, Term::app(Q, v))});
  EXPECT_TRUE(hol::alpha_eq(got, expected)) << hol::print(got);
}

TEST(TranslateTerm, TwoBinderFraenkelWrapsLaterTypes) {
  TransEnv env(sig());
  MTerm x = MTerm::obj_var("x");
  MTerm y = MTerm::obj_var("y");
  MTerm fr = MTerm::fraenkel({{"x", MType::set(), {}},
                              {"y", MType::mode("m1_subset_1", {x}), {}}},
                             MTerm::fun_const_app("k2_xboole_0", {x, y}), MProp::in(x, y));
  Term got = translate_term(fr, env);
  Term vx = Term::var("x", kI);
  Term vy = Term::var("y", kI);
  Term u = Term::var("u", kI);
  Term un = Term::constant("k2_xboole_0", Type::iota_n(2, kI));
  std::vector<Term> xy{vx, vy};
  Term expected = hol::apply(
      repl_sep_constant(2),
      {hol::lam(u, hol::top()), hol::lam(vx, hol::lam(u, hol::apply(elt(), {u, vx}))),
       hol::lam(xy, hol::apply(un, {vx, vy})), hol::lam(xy, member(vx, vy))});
  EXPECT_TRUE(hol::alpha_eq(got, expected)) << hol::print(got);
}

TEST(TranslateTerm, ObjectVariable) {
  TransEnv env(sig());
  Term x = Term::var("x", kI);
  env.push(x);
  EXPECT_TRUE(hol::alpha_eq(translate_term(MTerm::obj_var("x"), env), x));
}

TEST(TranslateTerm, FraenkelArityLimit) {
  mizar::Signature s = sig();
  TranslateOptions opts;
  opts.max_repl_sep_arity = 1;
  MTerm x = MTerm::obj_var("x");
  MTerm y = MTerm::obj_var("y");
  mizar::MStatement st{"", {}, MProp::in(MTerm::obj_const("c"),
                                         MTerm::fraenkel({{"x", MType::set(), {}}, {"y", MType::set(), {}}},
                                                         x, MProp::eq(x, y)))};
  try {
    translate_statement(st, s, opts);
    FAIL() << "expected TranslateError";
  } catch (const TranslateError& e) {
    EXPECT_EQ(e.code(), DiagCode::InvalidArity);
  }
  opts.max_repl_sep_arity = 2;
  EXPECT_NO_THROW(translate_statement(st, s, opts));
}

TEST(TranslateProp, MembershipIsDeclaredConstant) {
  Term t = statement("statement : c in a");
  Term expected = hol::apply(membership_constant(), {Term::constant("c", kI), Term::constant("a", kI)});
  EXPECT_TRUE(hol::alpha_eq(t, expected));
}

TEST(TranslateProp, NegatedEquality) {
  Term c = Term::constant("c", kI);
  EXPECT_TRUE(hol::alpha_eq(statement("statement : not (c = c)"), hol::neg(hol::eq(c, c))));
}

TEST(TranslateProp, GuardsStayWhenNotTrivial) {
  Term t = statement("statement : for x being Element of c holds ex y being Element of x st y = x");
  Term x = Term::var("x", kI);
  Term y = Term::var("y", kI);
  Term c = Term::constant("c", kI);
  Term expected = hol::forall(
      x, hol::implies(hol::apply(elt(), {x, c}),
                      hol::exists(y, hol::conj(hol::apply(elt(), {y, x}), hol::eq(y, x)))));
  EXPECT_TRUE(hol::alpha_eq(t, expected)) << hol::print(t);
}

TEST(TranslateStatement, EmptyPrefix) {
  Term c = Term::constant("c", kI);
  EXPECT_TRUE(hol::alpha_eq(statement("statement : c = c"), hol::eq(c, c)));
}

TEST(TranslateStatement, SeparationGolden) {
  Term t = corpus_statement("separation.miz");
  EXPECT_TRUE(hol::alpha_eq(t, canonical("separation"))) << hol::print(t);
  EXPECT_EQ(hol::print(t), "∀A. ∀P:ι→o. ∃X. ∀x. x ∈ X ↔ x ∈ A ∧ P x");
}

TEST(TranslateStatement, ReplacementGolden) {
  Term t = corpus_statement("fraenkel.miz");
  EXPECT_TRUE(hol::alpha_eq(t, canonical("fraenkel"))) << hol::print(t);
}

TEST(TranslateStatement, ChooseGolden) {
  Term t = corpus_statement("choose.miz");
  EXPECT_TRUE(hol::alpha_eq(t, canonical("choose"))) << hol::print(t);
}

TEST(TranslateStatement, PrefixOrderAndGuards) {
  Term t = corpus_statement("func_scheme.miz");
  // ∀A. ¬v1_xboole_0 A ∧ ⊤ → ∀F. (∀x. m1_subset_1 (F x) A) → …
  ASSERT_TRUE(t.is(hol::TermKind::All));
  EXPECT_EQ(t.name(), "A");
  ASSERT_TRUE(t.body().is(hol::TermKind::Imp));
  const Term& rest = t.body().rhs();
  ASSERT_TRUE(rest.is(hol::TermKind::All));
  EXPECT_EQ(rest.name(), "F");
  EXPECT_EQ(rest.type(), Type::arrow(kI, kI));
  ASSERT_TRUE(rest.body().is(hol::TermKind::Imp));
  const Term& guard = rest.body().lhs();
  ASSERT_TRUE(guard.is(hol::TermKind::All)) << hol::print(t);
  EXPECT_TRUE(guard.body().is(hol::TermKind::App)) << hol::print(t);
  EXPECT_FALSE(t.has_free_vars());
}

TEST(TranslateStatement, PredicateDeclarationIsBare) {
  Term t = statement("scheme S { P[Element of c] } : P[c]");
  ASSERT_TRUE(t.is(hol::TermKind::All));
  EXPECT_EQ(t.type(), Type::arrow(kI, kO));
  EXPECT_TRUE(t.body().is(hol::TermKind::App));
}

TEST(TranslateStatement, FunctionGuardSimplifiesOnlyLiteralTop) {
  // The inner ⊤ → ⊤ collapses; the quantified ⊤ left over is kept.
  Term t = statement("scheme S { F(set) -> set } : F(c) = c");
  EXPECT_EQ(hol::print(t), "∀F:ι→ι. (∀x. ⊤) → F c = c");
}

TEST(TranslateStatement, Deterministic) {
  std::string text = testing::read_file(testing::corpus_dir() / "fraenkel_two.miz");
  Term a = statement(text);
  Term b = statement(text);
  EXPECT_EQ(hol::print(a), hol::print(b));
}

}  // namespace
}  // namespace mizhol::translate
