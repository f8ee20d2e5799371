#pragma once

// The model-definition language.
//
//   poset NAME { elements: id, id, ... ; covers: a < b, c < d, ... ; }
//   partition NAME on POSET { blocks: (a, b), (c), ... ; }
//   game NAME { player K strategies: s, s, ... ; payoff K: poset POSET ;
//               outcome (s1, s2, ...) -> element ; ... }
//   stoch NAME { states: w prob DECIMAL, ... ; decisions: d, ... ;
//                outcomes: poset POSET ; map (d, w) -> element ; ... }
//
// Identifiers match [A-Za-z0-9_]+, `#` starts a comment that runs to the end
// of the line, and whitespace is insignificant. A game outcome names one
// element that must exist in every player's payoff poset.
//
// Parsing resolves every name and checks completeness of all maps. Cycles in
// declared covers are structural problems of the model rather than syntax
// problems; they surface when a poset is built (see structural_diagnostics).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relrisk/game.hpp"
#include "relrisk/order.hpp"
#include "relrisk/stochastic.hpp"

namespace relrisk {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Diagnostic {
  enum class Severity { kError, kWarning };
  Severity severity = Severity::kError;
  SourcePos pos;
  std::string message;
  std::optional<std::string> hint;
};

/// "LINE:COL: error: MESSAGE" plus an indented hint line when present.
std::string format_diagnostic(const Diagnostic& d, std::string_view source_name = {});

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// A structural violation (cyclic order) found while building a model object.
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(Diagnostic diagnostic);
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct PosetDecl {
  std::string name;
  SourcePos pos;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<SourcePos> element_pos;
  std::vector<std::pair<SourcePos, SourcePos>> cover_pos;  // lower and upper name
};

struct PartitionDecl {
  std::string name;
  SourcePos pos;
  std::string poset;
  std::vector<std::vector<std::string>> blocks;
  SourcePos poset_pos;
  std::vector<std::vector<SourcePos>> block_pos;
};

struct PlayerDecl {
  std::vector<std::string> strategies;
  std::string payoff_poset;
  SourcePos pos;
  SourcePos payoff_pos;
};

struct OutcomeDecl {
  std::vector<std::string> profile;
  std::string element;
  SourcePos pos;
};

struct GameDecl {
  std::string name;
  SourcePos pos;
  std::vector<PlayerDecl> players;
  /// In row-major profile order after parsing.
  std::vector<OutcomeDecl> outcomes;
};

struct StateDecl {
  std::string name;
  Rational probability;
  SourcePos pos;
};

struct MapDecl {
  std::string decision;
  std::string state;
  std::string element;
  SourcePos pos;
};

struct StochDecl {
  std::string name;
  SourcePos pos;
  std::vector<StateDecl> states;
  std::vector<std::string> decisions;
  std::string outcome_poset;
  SourcePos outcome_poset_pos;
  std::vector<SourcePos> decision_pos;
  /// Decision-major, states in declaration order, after parsing.
  std::vector<MapDecl> map;
};

struct ModelFile {
  std::vector<PosetDecl> posets;
  std::vector<PartitionDecl> partitions;
  std::vector<GameDecl> games;
  std::vector<StochDecl> stochs;

  const PosetDecl* find_poset(std::string_view name) const;
  const PartitionDecl* find_partition(std::string_view name) const;
  const GameDecl* find_game(std::string_view name) const;
  const StochDecl* find_stoch(std::string_view name) const;
};

/// Equality of content; source positions are ignored.
bool same_model(const ModelFile& a, const ModelFile& b);

/// Throws ParseError carrying every diagnostic found.
ModelFile parse_model(std::string_view text);

/// Canonical text form; parse_model(serialize(m)) is content-equal to m.
std::string serialize(const ModelFile& model);

/// Cycle diagnostics for every poset in the model.
std::vector<Diagnostic> structural_diagnostics(const ModelFile& model);

// Builders throw std::out_of_range for unknown names and StructuralError
// for cyclic orders.
Poset build_poset(const ModelFile& model, std::string_view name);
Partition build_partition(const ModelFile& model, std::string_view name);
OrdinalGame build_game(const ModelFile& model, std::string_view name);
DecisionModel build_stoch(const ModelFile& model, std::string_view name);

}  // namespace relrisk
