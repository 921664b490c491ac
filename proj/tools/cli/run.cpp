#include "run.hpp"

#include <unistd.h>

#include <fstream>
#include <ostream>
#include <sstream>

#include "mizhol/diagnostic.hpp"
#include "mizhol/hol/print.hpp"
#include "mizhol/match/pattern.hpp"
#include "mizhol/mizar/parser.hpp"
#include "mizhol/mizar/signature.hpp"
#include "mizhol/thf/emit.hpp"
#include "mizhol/thf/problem.hpp"
#include "mizhol/thf/prover.hpp"
#include "mizhol/translate/translate.hpp"

namespace mizhol::cli {

namespace fs = std::filesystem;

namespace {

// I/O and usage problems; reported with exit code 2.
struct UsageError {
  std::string message;
};

// Input rejected with diagnostics; exit code 1.
struct Rejected {};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError{"cannot read " + p.string()};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report(std::ostream& err, const Diagnostics& diags, const fs::path& file) {
  for (const auto& d : diags) err << d.format(file.string()) << '\n';
}

struct Loaded {
  fs::path file;
  mizar::MStatement statement;
  hol::Term formula;
};

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& err) : cfg_(cfg), err_(err) {
    if (cfg.max_arity < 1) throw UsageError{"--max-arity must be at least 1"};
    if (cfg.signature) {
      try {
        sig_ = mizar::parse_signature(slurp(*cfg.signature));
      } catch (const ParseError& e) {
        report(err_, e.diagnostics(), *cfg.signature);
        throw Rejected{};
      }
    }
  }

  const mizar::Signature& sig() const { return sig_; }

  mizar::MStatement parse(const fs::path& file) {
    try {
      return mizar::parse_statement(slurp(file), sig_);
    } catch (const ParseError& e) {
      report(err_, e.diagnostics(), file);
      throw Rejected{};
    }
  }

  Loaded load(const fs::path& file) {
    mizar::MStatement s = parse(file);
    try {
      hol::Term t = translate::translate_statement(s, sig_, {cfg_.max_arity});
      return {file, std::move(s), std::move(t)};
    } catch (const translate::TranslateError& e) {
      report(err_, {e.diagnostic()}, file);
      throw Rejected{};
    }
  }

  thf::Problem problem(const fs::path& conjecture_file) {
    Loaded goal = load(conjecture_file);
    std::vector<thf::NamedFormula> axioms;
    for (const auto& a : cfg_.axioms) {
      Loaded ax = load(a);
      std::string name = ax.statement.name.empty() ? a.stem().string() : ax.statement.name;
      axioms.push_back({name, ax.formula});
    }
    std::string name = goal.statement.name.empty() ? "goal" : goal.statement.name;
    try {
      return thf::assemble_problem({name, goal.formula}, std::move(axioms), sig_,
                                   {cfg_.max_arity});
    } catch (const thf::AssembleError& e) {
      err_ << conjecture_file.string() << ": error: " << e.what() << " [" << to_string(e.code())
           << "]\n";
      throw Rejected{};
    }
  }

 private:
  const RunConfig& cfg_;
  std::ostream& err_;
  mizar::Signature sig_;
};

void write_output(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.output) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.output, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text) || !f.flush()) throw UsageError{"cannot write " + cfg.output->string()};
}

void require_inputs(const RunConfig& cfg, std::size_t n) {
  if (cfg.inputs.size() != n) {
    throw UsageError{cfg.command + " expects " + std::to_string(n) + " input file" +
                     (n == 1 ? "" : "s") + ", got " + std::to_string(cfg.inputs.size())};
  }
}

int cmd_check(const RunConfig& cfg, Session& s, std::ostream& out, std::ostream& err) {
  if (cfg.inputs.empty()) throw UsageError{"check expects at least one input file"};
  int status = kOk;
  for (const auto& file : cfg.inputs) {
    std::string text = slurp(file);
    try {
      mizar::parse_statement(text, s.sig());
      out << file.string() << ": ok\n";
    } catch (const ParseError& e) {
      report(err, e.diagnostics(), file);
      status = kFailure;
    }
  }
  return status;
}

int cmd_translate(const RunConfig& cfg, Session& s, std::ostream& out) {
  require_inputs(cfg, 1);
  write_output(cfg, out, hol::print(s.load(cfg.inputs[0]).formula) + "\n");
  return kOk;
}

int cmd_emit(const RunConfig& cfg, Session& s, std::ostream& out) {
  require_inputs(cfg, 1);
  write_output(cfg, out, thf::emit_thf(s.problem(cfg.inputs[0])));
  return kOk;
}

int cmd_match(const RunConfig& cfg, Session& s, std::ostream& out, std::ostream& err) {
  require_inputs(cfg, 2);
  Loaded scheme = s.load(cfg.inputs[0]);
  Loaded goal = s.load(cfg.inputs[1]);
  std::size_t k = cfg.strip.value_or(scheme.statement.prefix.size());
  try {
    match::Instantiation inst =
        match::recover_scheme_instantiation(scheme.formula, goal.formula, k);
    std::ostringstream text;
    for (const auto& [m, v] : inst.subst.entries()) {
      text << '?' << m.name << " := " << hol::print(v) << '\n';
    }
    for (const auto& h : inst.side_conditions) {
      text << "side condition: " << hol::print(h) << '\n';
    }
    write_output(cfg, out, text.str());
    return kOk;
  } catch (const match::MatchError& e) {
    err << "match failed [" << match::to_string(e.kind()) << "]: " << e.what() << '\n';
    return kFailure;
  }
}

int cmd_prove(const RunConfig& cfg, Session& s, std::ostream& out, std::ostream& err) {
  require_inputs(cfg, 1);
  if (!cfg.prover) throw UsageError{"prove needs --prover"};
  std::string text = thf::emit_thf(s.problem(cfg.inputs[0]));
  fs::path file;
  bool temporary = false;
  if (cfg.output) {
    file = *cfg.output;
    write_output(cfg, out, text);
  } else {
    std::string templ = (fs::temp_directory_path() / "mizhol-XXXXXX.p").string();
    int fd = mkstemps(templ.data(), 2);
    if (fd < 0) throw UsageError{"cannot create a temporary file"};
    close(fd);
    file = templ;
    temporary = true;
    std::ofstream f(file, std::ios::binary | std::ios::trunc);
    f << text;
  }
  thf::ProverResult r =
      thf::run_prover({*cfg.prover, std::chrono::seconds(cfg.timeout_seconds)}, file);
  if (temporary) {
    std::error_code ec;
    fs::remove(file, ec);
  }
  switch (r.outcome) {
    case thf::ProverResult::Outcome::InvocationError:
      err << "prover error: " << r.error << '\n';
      break;
    case thf::ProverResult::Outcome::Timeout:
      out << "SZS status Timeout\n";
      break;
    default:
      out << "SZS status " << r.szs_status.value_or("Unknown") << '\n';
  }
  return r.exit_code();
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Session s(cfg, err);
    if (cfg.command == "check") return cmd_check(cfg, s, out, err);
    if (cfg.command == "translate") return cmd_translate(cfg, s, out);
    if (cfg.command == "emit") return cmd_emit(cfg, s, out);
    if (cfg.command == "match") return cmd_match(cfg, s, out, err);
    if (cfg.command == "prove") return cmd_prove(cfg, s, out, err);
    throw UsageError{"unknown command '" + cfg.command + "'"};
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kUsage;
  } catch (const Rejected&) {
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace mizhol::cli
