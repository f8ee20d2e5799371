#include <gtest/gtest.h>

#include <cstdio>
#include <sys/wait.h>

#include "relrisk/report.hpp"
#include "support.hpp"

using namespace relrisk;
using namespace relrisk::testing;

namespace {

RunResult run_on(const char* file, CommandKind kind, const std::string& target,
                 std::optional<std::string> partition = {}) {
  Command c;
  c.kind = kind;
  c.target = target;
  c.partition = std::move(partition);
  return run_text(c, read_file(model_path(file)), file);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct Process {
  int exit_code = -1;
  std::string out;
};

Process riskctl(const std::string& args) {
  Process p;
  const std::string cmd = std::string(RISKCTL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) p.out.append(buffer, n);
  const int status = pclose(pipe);
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

}  // namespace

TEST(Dot, ThreeChain) {
  Poset p = make_poset({"a", "b", "c"},
                       std::vector<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(dot_export(p), "digraph hasse {\nrankdir=BT;\n\"a\" -> \"b\";\n\"b\" -> \"c\";\n}\n");
}

TEST(Dot, VShape) {
  Poset p = make_poset({"12", "22", "32"},
                       std::vector<std::pair<std::string, std::string>>{{"12", "22"}, {"32", "22"}});
  EXPECT_EQ(dot_export(p), "digraph hasse {\nrankdir=BT;\n\"12\" -> \"22\";\n\"32\" -> \"22\";\n}\n");
}

TEST(Dot, EmptyOrder) {
  Poset p = make_poset({"a", "b"}, {});
  EXPECT_EQ(dot_export(p), "digraph hasse {\nrankdir=BT;\n}\n");
}

TEST(Dot, OnlyCoversAreEmitted) {
  Poset p = make_poset({"a", "b", "c"}, std::vector<std::pair<std::string, std::string>>{
                                            {"a", "b"}, {"b", "c"}, {"a", "c"}});
  EXPECT_FALSE(contains(dot_export(p), "\"a\" -> \"c\""));
}

TEST(FormatSet, DeclarationOrder) {
  GroundSet g({"x", "y", "z"});
  const ElementSet set = {0, 2};
  EXPECT_EQ(format_set(g, set), "{ x, z }");
  EXPECT_EQ(format_set(g, {}), "{ }");
}

TEST(Run, SolvePrintsEquilibrium) {
  auto r = run_on("ordinal_game.risk", CommandKind::kSolve, "G");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "NE = { 22 }\n"));
  EXPECT_TRUE(contains(r.out, "BR1 = { 31, 22, 33 }"));
  EXPECT_TRUE(contains(r.out, "P2 = { 2 }"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Run, SolveMaximalCautiousFlag) {
  Command c;
  c.kind = CommandKind::kSolve;
  c.target = "G";
  c.solve.cautious_rule = CautiousRule::kMaximal;
  auto r = run_text(c, read_file(model_path("ordinal_game.risk")));
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "P2 = { 2 }"));
}

TEST(Run, ClassifyLowerSemilattice) {
  auto r = run_on("risk_figures.risk", CommandKind::kClassify, "fig2b");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "kind = RiskLower\n"));
  EXPECT_TRUE(contains(r.out, "target = { w1, w3 }\n"));
}

TEST(Run, ClassifyWithPartition) {
  auto r = run_on("risk_figures.risk", CommandKind::kClassify, "fig3c", "indiff");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "kind = RiskTotal\n"));
  EXPECT_TRUE(contains(r.out, "{w1,w3}"));
}

TEST(Run, PushListsMeasures) {
  auto r = run_on("stochastic.risk", CommandKind::kPush, "invest");
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_TRUE(contains(r.out, "pushforward balanced = { mid: 1/4, high: 3/4 }"));
  EXPECT_TRUE(contains(r.out, "optimal decisions = { balanced }"));
  auto w = run_on("stochastic.risk", CommandKind::kPush, "weather");
  EXPECT_TRUE(contains(w.out, "environment risk only: yes"));
}

TEST(Run, CycleIsStructural) {
  auto r = run_on("cyclic.risk", CommandKind::kCheck, "cyclic");
  EXPECT_EQ(r.exit_code, kExitStructural);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(contains(r.err, "cycle witness: [a, b, c]"));
  auto q = run_on("cyclic.risk", CommandKind::kClassify, "chain", "split");
  EXPECT_EQ(q.exit_code, kExitStructural);
}

TEST(Run, InputErrors) {
  auto missing = run_on("risk_figures.risk", CommandKind::kCheck, "nope");
  EXPECT_EQ(missing.exit_code, kExitInputError);
  EXPECT_TRUE(contains(missing.err, "error:"));
  auto wrong_kind = run_on("risk_figures.risk", CommandKind::kSolve, "fig2a");
  EXPECT_EQ(wrong_kind.exit_code, kExitInputError);
  auto wrong_poset = run_on("risk_figures.risk", CommandKind::kClassify, "fig2a", "indiff");
  EXPECT_EQ(wrong_poset.exit_code, kExitInputError);
  Command c;
  c.target = "p";
  auto parse = run_text(c, "poset p { elements: a b; }", "bad.risk");
  EXPECT_EQ(parse.exit_code, kExitInputError);
  EXPECT_TRUE(contains(parse.err, "bad.risk:1:"));
}

TEST(Run, ReportsAreDeterministic) {
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(run_on("ordinal_game.risk", CommandKind::kSolve, "G").out,
              run_on("ordinal_game.risk", CommandKind::kSolve, "G").out);
    EXPECT_EQ(run_on("stochastic.risk", CommandKind::kPush, "invest").out,
              run_on("stochastic.risk", CommandKind::kPush, "invest").out);
  }
}

TEST(Cli, ExitCodesAndOutput) {
  auto ok = riskctl("solve --game G " + model_path("ordinal_game.risk"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out, run_on("ordinal_game.risk", CommandKind::kSolve, "G").out);
  EXPECT_EQ(riskctl("check --poset nope " + model_path("risk_figures.risk")).exit_code, 1);
  EXPECT_EQ(riskctl("check --poset cyclic " + model_path("cyclic.risk")).exit_code, 2);
  EXPECT_EQ(riskctl("check --poset p /nonexistent/file.risk").exit_code, 1);
  EXPECT_EQ(riskctl("frobnicate").exit_code, 1);
}

TEST(Cli, ReadsStandardInput) {
  auto r = riskctl("dot --poset fig2c - < " + model_path("risk_figures.risk"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "digraph hasse {\nrankdir=BT;\n\"w2\" -> \"w1\";\n\"w3\" -> \"w2\";\n\"w4\" -> \"w3\";\n}\n");
}
