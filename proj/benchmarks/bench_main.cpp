#include <benchmark/benchmark.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mizhol/hol/ops.hpp"
#include "mizhol/match/pattern.hpp"
#include "mizhol/mizar/parser.hpp"
#include "mizhol/thf/emit.hpp"
#include "mizhol/thf/problem.hpp"
#include "mizhol/translate/declarations.hpp"
#include "mizhol/translate/translate.hpp"

namespace {

using namespace mizhol;
using hol::Term;
using hol::Type;
namespace fs = std::filesystem;

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const fs::path kCorpus = MIZHOL_CORPUS_DIR;

const mizar::Signature& sig() {
  static const mizar::Signature s = mizar::parse_signature(read(kCorpus / "mml.sig"));
  return s;
}

void BM_ParseTranslate(benchmark::State& state) {
  std::string text = read(kCorpus / "fraenkel.miz");
  for (auto _ : state) {
    Term t = translate::translate_statement(mizar::parse_statement(text, sig()), sig());
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_ParseTranslate);

void BM_ReplSepAxioms(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto axioms = translate::gen_repl_sep_axioms(n);
    benchmark::DoNotOptimize(axioms);
  }
}
BENCHMARK(BM_ReplSepAxioms)->DenseRange(1, 6);

void BM_EmitProblem(benchmark::State& state) {
  Term goal = translate::translate_statement(
      mizar::parse_statement(read(kCorpus / "fraenkel_two.miz"), sig()), sig());
  thf::Problem p = thf::assemble_problem({"goal", goal}, {}, sig());
  for (auto _ : state) {
    std::string out = thf::emit_thf(p);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_EmitProblem);

void BM_RecoverInstantiation(benchmark::State& state) {
  fs::path dir = kCorpus / "match";
  mizar::Signature s = mizar::parse_signature(read(dir / "match.sig"));
  Term scheme = translate::translate_statement(mizar::parse_statement(read(kCorpus / "fraenkel.miz"), s), s);
  Term goal = translate::translate_statement(mizar::parse_statement(read(dir / "sep_step_goal.miz"), s), s);
  for (auto _ : state) {
    auto inst = match::recover_scheme_instantiation(scheme, goal, 2);
    benchmark::DoNotOptimize(inst);
  }
}
BENCHMARK(BM_RecoverInstantiation);

// Church numeral n applied to itself-style iteration: (λf x. f (f ... x)) g c.
Term church_redex(int n) {
  Type i = Type::iota();
  Type fi = Type::arrow(i, i);
  Term f = Term::var("f", fi);
  Term x = Term::var("x", i);
  Term body = x;
  for (int k = 0; k < n; ++k) body = Term::app(f, body);
  Term num = hol::lam(std::vector<Term>{f, x}, body);
  Term g = hol::lam(x, Term::app(Term::constant("h", fi), x));
  return hol::apply(num, {g, Term::constant("c", i)});
}

void BM_BetaNormalize(benchmark::State& state) {
  Term t = church_redex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Term n = hol::beta_normalize(t);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_BetaNormalize)->Range(8, 512);

}  // namespace
BENCHMARK_MAIN();
