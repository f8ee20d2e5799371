#include <gtest/gtest.h>

#include <filesystem>

#include "relrisk/model.hpp"
#include "support.hpp"

using namespace relrisk;
using namespace relrisk::testing;

namespace {

std::vector<Diagnostic> parse_errors(std::string_view text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.diagnostics();
  }
  return {};
}

// Single diagnostic expected; returns it.
Diagnostic only_error(std::string_view text) {
  auto ds = parse_errors(text);
  EXPECT_EQ(ds.size(), 1u);
  return ds.empty() ? Diagnostic{} : ds.front();
}

bool mentions(const Diagnostic& d, std::string_view fragment) {
  return d.message.find(fragment) != std::string::npos;
}

const char* kGame =
    "poset p { elements: a, b; covers: a < b; }\n"
    "game G {\n"
    "  player 1 strategies: x, y;\n"
    "  player 2 strategies: u;\n"
    "  payoff 1: poset p;\n"
    "  payoff 2: poset p;\n";

}  // namespace

TEST(Parse, FixtureFile) {
  ModelFile m = parse_model(read_file(model_path("ordinal_game.risk")));
  ASSERT_EQ(m.posets.size(), 2u);
  ASSERT_EQ(m.games.size(), 1u);
  EXPECT_EQ(m.posets[0].elements.size(), 9u);
  EXPECT_EQ(m.posets[1].elements.size(), 9u);
  const GameDecl* g = m.find_game("G");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->players.size(), 2u);
  EXPECT_EQ(g->outcomes.size(), 9u);
  OrdinalGame game = build_game(m, "G");
  EXPECT_EQ(game.num_profiles(), 9u);
}

TEST(Parse, CommentsAndWhitespaceAreIgnored) {
  ModelFile a = parse_model("poset p{elements:a,b;covers:a<b;}");
  ModelFile b = parse_model("# header\nposet   p {\n  elements : a ,\n b ;  # trailing\n covers: a < b;\n}\n");
  EXPECT_TRUE(same_model(a, b));
}

TEST(Parse, RoundTripsEveryModelFile) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RELRISK_MODELS_DIR)) {
    if (entry.path().extension() != ".risk") continue;
    ++files;
    ModelFile first = parse_model(read_file(entry.path().string()));
    std::string text = serialize(first);
    ModelFile second = parse_model(text);
    EXPECT_TRUE(same_model(first, second)) << entry.path();
    EXPECT_EQ(serialize(second), text) << entry.path();
  }
  EXPECT_GE(files, 4);
}

TEST(Parse, ProbabilitiesAreExact) {
  ModelFile m = parse_model(read_file(model_path("stochastic.risk")));
  const StochDecl* s = m.find_stoch("invest");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->states[1].probability, Rational(1, 4));
}

TEST(ParseErrors, UndeclaredElementHasPosition) {
  Diagnostic d = only_error("poset p {\n  elements: a, b;\n  covers: a < z;\n}\n");
  EXPECT_TRUE(mentions(d, "unknown element 'z'"));
  EXPECT_EQ(d.pos.line, 3u);
  EXPECT_EQ(d.pos.column, 15u);
}

TEST(ParseErrors, DuplicateOutcomeMapping) {
  auto ds = parse_errors(std::string(kGame) +
                         "  outcome (x, u) -> a;\n  outcome (y, u) -> b;\n  outcome (x, u) -> b;\n}\n");
  ASSERT_EQ(ds.size(), 1u);
  EXPECT_TRUE(mentions(ds[0], "duplicate mapping"));
  EXPECT_EQ(ds[0].pos.line, 9u);
  ASSERT_TRUE(ds[0].hint);
  EXPECT_NE(ds[0].hint->find("line 7"), std::string::npos);
}

TEST(ParseErrors, MissingProfile) {
  Diagnostic d = only_error(std::string(kGame) + "  outcome (x, u) -> a;\n}\n");
  EXPECT_TRUE(mentions(d, "no outcome for profile (y, u)"));
}

TEST(ParseErrors, UnknownStrategyAndElementInOutcome) {
  auto ds = parse_errors(std::string(kGame) +
                         "  outcome (x, u) -> a;\n  outcome (y, w) -> c;\n}\n");
  EXPECT_GE(ds.size(), 1u);
  bool strategy = false;
  for (const auto& d : ds) strategy = strategy || mentions(d, "'w'");
  EXPECT_TRUE(strategy);
}

TEST(ParseErrors, ProbabilitySumMustBeOne) {
  Diagnostic d = only_error(
      "poset p { elements: a; }\n"
      "stoch s { states: w prob 0.5, v prob 0.4; decisions: d; outcomes: poset p;\n"
      "  map (d, w) -> a; map (d, v) -> a; }\n");
  EXPECT_TRUE(mentions(d, "sum to 0.9"));
}

TEST(ParseErrors, ScientificNotationRejected) {
  Diagnostic d = only_error(
      "poset p { elements: a; }\n"
      "stoch s { states: w prob 1e0; decisions: d; outcomes: poset p; map (d, w) -> a; }\n");
  ASSERT_TRUE(d.hint);
  EXPECT_NE(d.hint->find("scientific notation"), std::string::npos);
  EXPECT_EQ(d.pos.line, 2u);
}

TEST(ParseErrors, MissingStateMapping) {
  Diagnostic d = only_error(
      "poset p { elements: a; }\n"
      "stoch s { states: w prob 0.5, v prob 0.5; decisions: d; outcomes: poset p;\n"
      "  map (d, w) -> a; }\n");
  EXPECT_TRUE(mentions(d, "(d, v)"));
}

TEST(ParseErrors, SyntaxErrorsCarryPositions) {
  Diagnostic d = only_error("poset p { elements: a, b; covers: a < b }\n");
  EXPECT_TRUE(mentions(d, "expected ';'"));
  EXPECT_EQ(d.pos.line, 1u);
  EXPECT_EQ(d.pos.column, 41u);
  Diagnostic bad = only_error("poset p { elements: a@; }");
  EXPECT_EQ(bad.pos.column, 22u);
  Diagnostic eof = only_error("poset p { elements: a;");
  EXPECT_GE(eof.pos.line, 1u);
}

TEST(ParseErrors, DuplicatesAndSelfCovers) {
  EXPECT_TRUE(mentions(only_error("poset p { elements: a, a; }"), "duplicate element"));
  EXPECT_TRUE(mentions(only_error("poset p { elements: a; }\nposet p { elements: b; }"),
                       "duplicate poset"));
  EXPECT_TRUE(mentions(only_error("poset p { elements: a; covers: a < a; }"), "itself"));
  EXPECT_TRUE(mentions(only_error("partition q on nope { blocks: (a); }"), "unknown poset"));
}

TEST(ParseErrors, PartitionMustCoverGround) {
  auto ds = parse_errors("poset p { elements: a, b; }\npartition q on p { blocks: (a); }\n");
  ASSERT_FALSE(ds.empty());
  EXPECT_EQ(ds[0].pos.line, 2u);
}

TEST(ParseErrors, EveryDiagnosticHasAPosition) {
  const char* inputs[] = {
      "poset",
      "poset p { elements: ; }",
      "game G { player 1 strategies: x; payoff 1: poset nope; }",
      "stoch s { states: w prob 1; }",
      "poset p { elements: a; } poset q { elements: b; covers: b < c; }",
      "}",
  };
  for (const char* text : inputs) {
    auto ds = parse_errors(text);
    EXPECT_FALSE(ds.empty()) << text;
    for (const auto& d : ds) {
      EXPECT_GE(d.pos.line, 1u) << text;
      EXPECT_GE(d.pos.column, 1u) << text;
    }
  }
}

TEST(FormatDiagnostic, FileLineColumnAndHint) {
  Diagnostic d{Diagnostic::Severity::kError, {3, 7}, "boom", std::string("try this")};
  EXPECT_EQ(format_diagnostic(d, "m.risk"), "m.risk:3:7: error: boom\n  hint: try this");
}

TEST(Structural, CycleReportedWithWitness) {
  ModelFile m = parse_model(read_file(model_path("cyclic.risk")));
  try {
    build_poset(m, "cyclic");
    FAIL() << "expected StructuralError";
  } catch (const StructuralError& e) {
    ASSERT_TRUE(e.diagnostic().hint);
    EXPECT_EQ(*e.diagnostic().hint, "cycle witness: [a, b, c]");
    EXPECT_EQ(e.diagnostic().pos.line, m.find_poset("cyclic")->pos.line);
  }
  auto ds = structural_diagnostics(m);
  EXPECT_FALSE(ds.empty());
  EXPECT_NO_THROW(build_poset(m, "chain"));
}

TEST(Build, BuildersResolveNames) {
  ModelFile m = parse_model(read_file(model_path("risk_figures.risk")));
  Partition part = build_partition(m, "indiff");
  EXPECT_EQ(part.blocks().size(), 2u);
  EXPECT_THROW(build_poset(m, "nope"), std::exception);
  ModelFile s = parse_model(read_file(model_path("stochastic.risk")));
  DecisionModel model = build_stoch(s, "invest");
  EXPECT_EQ(model.decisions().size(), 4u);
  ASSERT_TRUE(model.outcome_order());
  EXPECT_EQ(model.outcome_order()->size(), 3u);
}

TEST(Serialize, RandomPosetsRoundTrip) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = random_poset(rng, 1 + rng() % 6, 0.4);
    ModelFile m;
    PosetDecl decl;
    decl.name = "p" + std::to_string(trial);
    decl.elements = p.ground().names();
    for (auto [a, b] : p.covers().pairs()) decl.covers.emplace_back(p.name(a), p.name(b));
    m.posets.push_back(decl);
    ModelFile back = parse_model(serialize(m));
    EXPECT_TRUE(same_model(m, back));
    EXPECT_EQ(build_poset(back, decl.name), p);
  }
}
