#include <gtest/gtest.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "mizhol/thf/check.hpp"
#include "run.hpp"
#include "support.hpp"

namespace mizhol::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

fs::path corpus(const std::string& rel) { return testing::corpus_dir() / rel; }

Result invoke(RunConfig cfg) {
  if (!cfg.signature) cfg.signature = corpus("mml.sig");
  std::ostringstream out;
  std::ostringstream err;
  int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mizhol_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckReportsOk) {
  Result r = invoke({"check", {corpus("separation.miz"), corpus("choose.miz")}});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("separation.miz: ok"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ArityErrorGivesOneDiagnostic) {
  fs::path f = write("bad.miz", "statement :\n  k1_zfmisc_1(c, c) = c\n");
  Result r = invoke({"check", {f}});
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  EXPECT_NE(r.err.find(f.string() + ":2:3: error:"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("ArityMismatch"), std::string::npos) << r.err;
}

TEST_F(CliTest, TranslatePrintsDebugSyntax) {
  Result r = invoke({"translate", {corpus("separation.miz")}});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "∀A. ∀P:ι→o. ∃X. ∀x. x ∈ X ↔ x ∈ A ∧ P x\n");
}

TEST_F(CliTest, EmitSeparationProblem) {
  Result r = invoke({"emit", {corpus("separation.miz")}});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, testing::read_file(corpus("golden/separation.p")));
  EXPECT_TRUE(thf::check_thf(r.out).empty());
}

TEST_F(CliTest, EmitWithAxiomsToFile) {
  RunConfig cfg{"emit", {corpus("xboole_diff.miz")}};
  cfg.axioms = {corpus("separation.miz")};
  cfg.output = dir_ / "out.p";
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(testing::read_file(*cfg.output), testing::read_file(corpus("golden/xboole_diff.p")));
}

TEST_F(CliTest, EmitIsDeterministic) {
  Result a = invoke({"emit", {corpus("fraenkel_two.miz")}});
  Result b = invoke({"emit", {corpus("fraenkel_two.miz")}});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, ArityLimitIsADiagnostic) {
  RunConfig cfg{"emit", {corpus("fraenkel_two.miz")}};
  cfg.max_arity = 1;
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.err.find("InvalidArity"), std::string::npos) << r.err;
}

TEST_F(CliTest, MatchReplacementAgainstSeparationStep) {
  RunConfig cfg{"match", {corpus("fraenkel.miz"), corpus("match/sep_step_goal.miz")}};
  cfg.signature = corpus("match/match.sig");
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "?A := A\n"
            "?P := λy x. y = x ∧ P x\n"
            "side condition: ∀x y z. (x = y ∧ P y) ∧ x = z ∧ P z → y = z\n");
}

TEST_F(CliTest, MatchFailureExitsOne) {
  RunConfig cfg{"match", {corpus("separation.miz"), corpus("match/swapped_goal.miz")}};
  cfg.signature = corpus("match/match.sig");
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.err.find("ShapeMismatch"), std::string::npos);
}

TEST_F(CliTest, MatchWithExplicitStrip) {
  RunConfig cfg{"match", {corpus("separation.miz"), corpus("match/separation_goal.miz")}};
  cfg.signature = corpus("match/match.sig");
  cfg.strip = 3;
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_NE(r.err.find("NotEnoughQuantifiers"), std::string::npos);
}

TEST_F(CliTest, MissingFileIsUsageError) {
  Result r = invoke({"translate", {dir_ / "nope.miz"}});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, WrongInputCountIsUsageError) {
  EXPECT_EQ(invoke({"match", {corpus("separation.miz")}}).code, kUsage);
}

TEST_F(CliTest, ProveWithFakeProver) {
  fs::path prover = write("prover.sh",
                          "#!/bin/sh\n"
                          "grep -q 'thf(goal, conjecture' \"$1\" && echo '% SZS status Theorem for goal'\n");
  ::chmod(prover.c_str(), 0755);
  RunConfig cfg{"prove", {corpus("choose.miz")}};
  cfg.prover = prover;
  cfg.timeout_seconds = 10;
  Result r = invoke(cfg);
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "SZS status Theorem\n");

  fs::path no = write("no.sh", "#!/bin/sh\necho '% SZS status GaveUp'\n");
  ::chmod(no.c_str(), 0755);
  cfg.prover = no;
  cfg.output = dir_ / "kept.p";
  r = invoke(cfg);
  EXPECT_EQ(r.code, kFailure);
  EXPECT_EQ(r.out, "SZS status GaveUp\n");
  EXPECT_TRUE(fs::exists(*cfg.output));

  cfg.prover = dir_ / "missing";
  EXPECT_EQ(invoke(cfg).code, kUsage);
}

int shell(const std::string& args) {
  std::string cmd = std::string(MIZHOL_CLI_EXE) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(CliExecutable, ExitCodes) {
  std::string sig = "--sig " + corpus("mml.sig").string();
  EXPECT_EQ(shell("check " + sig + " " + corpus("trivial.miz").string()), 0);
  EXPECT_EQ(shell("--help"), 0);
  EXPECT_EQ(shell(""), 2);
  EXPECT_EQ(shell("frobnicate"), 2);
  EXPECT_EQ(shell("emit --max-arity 0 " + sig + " " + corpus("trivial.miz").string()), 2);
  EXPECT_EQ(shell("emit --sig /nonexistent " + corpus("trivial.miz").string()), 2);
}

}  // namespace
}  // namespace mizhol::cli
