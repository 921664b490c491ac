#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mizhol/hol/term.hpp"
#include "mizhol/match/pattern.hpp"
#include "mizhol/mizar/ast.hpp"
#include "mizhol/mizar/signature.hpp"
#include "mizhol/thf/problem.hpp"
#include "mizhol/translate/declarations.hpp"

namespace mizhol::testing {

using Rng = std::mt19937_64;

std::filesystem::path corpus_dir();
std::string read_file(const std::filesystem::path& p);

/// Signature shared by the random generators.
const mizar::Signature& generator_signature();

struct StatementOptions {
  int max_depth = 4;
  int max_prefix = 4;
  int max_fraenkel_binders = 3;
  /// Per-mille chances at each term node.
  int the_rate = 60;
  int fraenkel_rate = 60;
};

/// A random statement that is well formed under generator_signature().
mizar::MStatement random_statement(Rng& rng, const StatementOptions& opts = {});

/// Occurrences that reach the translation; predicate argument types are skipped.
bool contains_the(const mizar::MStatement& s);
bool contains_fraenkel(const mizar::MStatement& s);

/// Random edits of `text`: deletions, duplications, keyword and byte insertions.
std::string mutate(Rng& rng, std::string text);
std::string random_bytes(Rng& rng, std::size_t max_len);

/// A matching problem whose solution is planted: rhs = β(θ(lhs)).
struct PatternProblem {
  hol::Term lhs;
  hol::Term rhs;
  std::vector<std::pair<match::MetaVar, hol::Term>> planted;
};

PatternProblem random_pattern_problem(Rng& rng, int depth = 4);

/// Replaces one random subterm of type ι in `t` by a different constant.
hol::Term perturb(Rng& rng, const hol::Term& t);

/// `f` and `g` agree on fresh arguments after β-normalization.
bool same_function(const hol::Term& f, const hol::Term& g);

/// Well-typed term of type `t` with β-redexes, over constants named `k<type>`
/// and the variables bound inside it.
hol::Term random_typed_term(Rng& rng, const hol::Type& t, int depth);

/// One line of corpus/problems.txt.
struct CorpusProblem {
  std::string name;
  std::string conjecture;
  std::vector<std::string> axioms;
};

std::vector<CorpusProblem> corpus_problems();
const mizar::Signature& corpus_signature();
/// Parses, translates and assembles a corpus problem the way the CLI does.
thf::Problem build_problem(const CorpusProblem& cp);

/// Typing context with the builtin declarations and every signature constant.
std::vector<translate::Declaration> context_declarations(const mizar::Signature& sig);

}  // namespace mizhol::testing
