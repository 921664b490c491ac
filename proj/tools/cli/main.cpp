#include <CLI11.hpp>
#include <iostream>

#include "run.hpp"

int main(int argc, char** argv) {
  using mizhol::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Translate Mizar-style statements to higher-order THF0 problems"};
  app.require_subcommand(1);

  std::string sig;
  std::string out;
  std::size_t strip = 0;
  std::string prover;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--sig", sig, "Signature file")->check(CLI::ExistingFile);
    sub->add_option("--max-arity", cfg.max_arity, "Largest Fraenkel arity")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Parse and check statement files");
  check->add_option("files", cfg.inputs, "Statement files")->required();
  common(check);

  auto* translate = app.add_subcommand("translate", "Print the HOL translation");
  translate->add_option("file", cfg.inputs, "Statement file")->required()->expected(1);
  translate->add_option("--out", out, "Output file");
  common(translate);

  auto* emit = app.add_subcommand("emit", "Write a THF0 problem");
  emit->add_option("file", cfg.inputs, "Conjecture statement file")->required()->expected(1);
  emit->add_option("--axiom", cfg.axioms, "Axiom statement file (repeatable)");
  emit->add_option("--out", out, "Output file");
  common(emit);

  auto* match = app.add_subcommand("match", "Recover a scheme instantiation");
  match->add_option("scheme", cfg.inputs, "Scheme file, then conjecture file")
      ->required()
      ->expected(2);
  auto* strip_opt = match->add_option("--strip", strip, "Quantifiers to strip from the scheme");
  match->add_option("--out", out, "Output file");
  common(match);

  auto* prove = app.add_subcommand("prove", "Emit and run an external prover");
  prove->add_option("file", cfg.inputs, "Conjecture statement file")->required()->expected(1);
  prove->add_option("--axiom", cfg.axioms, "Axiom statement file (repeatable)");
  prove->add_option("--prover", prover, "Prover executable")->required();
  prove->add_option("--timeout", cfg.timeout_seconds, "Seconds before the prover is killed");
  prove->add_option("--out", out, "Keep the problem at this path");
  common(prove);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : mizhol::cli::kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!sig.empty()) cfg.signature = sig;
  if (!out.empty()) cfg.output = out;
  if (*strip_opt) cfg.strip = strip;
  if (!prover.empty()) cfg.prover = prover;
  return mizhol::cli::run(cfg, std::cout, std::cerr);
}
