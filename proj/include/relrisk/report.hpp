#pragma once

// Plain-text reports and command dispatch for the riskctl tool.

#include <optional>
#include <string>
#include <string_view>

#include "relrisk/game.hpp"
#include "relrisk/model.hpp"
#include "relrisk/order.hpp"
#include "relrisk/risk.hpp"
#include "relrisk/stochastic.hpp"

namespace relrisk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitStructural = 2;

enum class CommandKind { kCheck, kClassify, kSolve, kPush, kDot };

struct Command {
  CommandKind kind = CommandKind::kCheck;
  std::string target;                    // poset, game or stoch name
  std::optional<std::string> partition;  // classify only
  SolveOptions solve;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// `digraph hasse {`, `rankdir=BT;`, one `"a" -> "b";` line per cover, `}`.
std::string dot_export(const Poset& poset);

/// "{ a, b }", or "{ }" when empty.
std::string format_set(const GroundSet& ground, std::span<const Element> elements);

/// Concatenated strategy labels ("22") when every label in the game is one
/// character, otherwise "(a,b,...)".
std::string profile_label(const OrdinalGame& game, const Profile& profile);

std::string check_report(std::string_view name, const Poset& poset);
std::string classify_report(std::string_view name, const Poset& poset);
std::string classify_report(std::string_view name, const Poset& poset,
                            std::string_view partition_name, const QuotientRisk& result);
std::string solve_report(std::string_view name, const OrdinalGame& game,
                         const SolutionReport& solution);
std::string push_report(std::string_view name, const DecisionModel& model);

/// Runs a command against a parsed model. Diagnostics go to `err`.
RunResult run(const Command& command, const ModelFile& model, std::string_view source_name = {});
/// Parses `text` first; parse failures exit with kExitInputError.
RunResult run_text(const Command& command, std::string_view text,
                   std::string_view source_name = {});

}  // namespace relrisk
