#pragma once

// Finite normal-form games whose payoffs are elements of per-player partial
// orders, and the pure-strategy solution concepts that make sense there:
// pairwise comparison tables, dominance, cautious (maximin) strategies,
// best-response graphs and Nash equilibria.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relrisk/order.hpp"

namespace relrisk {

using Player = std::size_t;
/// One strategy index per player.
using Profile = std::vector<std::size_t>;

class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OrdinalGame {
 public:
  /// `payoffs[i][k]` is player i's payoff at the profile with flat index k
  /// (see flat_index). Throws GameError on inconsistent dimensions.
  OrdinalGame(std::vector<GroundSet> strategies, std::vector<Poset> payoff_posets,
              std::vector<std::vector<Element>> payoffs);

  std::size_t num_players() const { return strategies_.size(); }
  const GroundSet& strategies(Player i) const { return strategies_.at(i); }
  const Poset& payoff_poset(Player i) const { return posets_.at(i); }
  Element payoff(Player i, const Profile& profile) const {
    return payoffs_.at(i).at(flat_index(profile));
  }
  const std::vector<Element>& payoff_table(Player i) const { return payoffs_.at(i); }

  std::size_t num_profiles() const { return num_profiles_; }
  /// Row-major: player 0 is the most significant coordinate.
  std::size_t flat_index(const Profile& profile) const;
  Profile profile_at(std::size_t flat) const;

  /// Every assignment of strategies to the players other than `player`,
  /// in row-major order; each entry has num_players() - 1 coordinates.
  std::vector<Profile> opponent_profiles(Player player) const;
  /// Inserts `own` at position `player` of an opponent sub-profile.
  static Profile with_own(const Profile& opponents, Player player, std::size_t own);
  static Profile without_own(const Profile& profile, Player player);

 private:
  std::vector<GroundSet> strategies_;
  std::vector<Poset> posets_;
  std::vector<std::vector<Element>> payoffs_;
  std::size_t num_profiles_ = 0;
};

enum class Comparison { kLess, kGreater, kEqual, kIncomparable };

/// Verdict for "a vs b" in the order.
Comparison compare(const Poset& poset, Element a, Element b);
Comparison flip(Comparison c);

struct ComparisonCell {
  std::size_t first = 0;   // own strategy, first < second
  std::size_t second = 0;
  Profile opponents;
  Element first_payoff = 0;
  Element second_payoff = 0;
  Comparison verdict = Comparison::kEqual;
};

struct ComparisonTable {
  Player player = 0;
  /// Strategy pairs (a, b), a < b, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Profile> opponents;
  /// cells[row][column]: row = opponent sub-profile, column = strategy pair.
  std::vector<std::vector<ComparisonCell>> cells;
};

struct DominanceReport {
  std::vector<std::size_t> dominant;
  std::vector<std::size_t> dominated;           // weakly dominated by some strategy
  std::vector<std::size_t> strictly_dominated;
  std::vector<std::size_t> undominated;         // complement of `dominated`
};

enum class CautiousRule {
  kGreatest,  // security level must dominate every other existing level
  kMaximal,   // no existing level strictly above it
};

struct CautiousReport {
  /// Per own strategy: infimum of its payoffs over opponent sub-profiles.
  std::vector<std::optional<Element>> security_levels;
  std::vector<std::size_t> cautious;
};

struct RiskConditionReport {
  bool payoff_upper_semilattice = false;
  bool images_upper_semilattices = false;
  std::vector<Profile> failing_opponents;
};

struct SolveOptions {
  CautiousRule cautious_rule = CautiousRule::kGreatest;
};

struct SolutionReport {
  std::vector<RiskConditionReport> risk_conditions;
  std::vector<ComparisonTable> comparison_tables;
  std::vector<DominanceReport> dominance;
  std::vector<CautiousReport> cautious;
  /// Per player; ordered by opponent sub-profile, then own strategy.
  std::vector<std::vector<Profile>> best_responses;
  /// Row-major order.
  std::vector<Profile> nash;
};

/// Elements reachable by `player` through unilateral deviation at `opponents`,
/// in payoff-poset declaration order.
ElementSet restriction_elements(const OrdinalGame& game, Player player, const Profile& opponents);
Poset restriction_image(const OrdinalGame& game, Player player, const Profile& opponents);

std::vector<RiskConditionReport> verify_risk_conditions(const OrdinalGame& game);
ComparisonTable comparison_table(const OrdinalGame& game, Player player);
DominanceReport dominance_report(const OrdinalGame& game, Player player);
CautiousReport cautious_strategies(const OrdinalGame& game, Player player,
                                   CautiousRule rule = CautiousRule::kGreatest);
std::vector<std::vector<Profile>> best_responses(const OrdinalGame& game);
std::vector<Profile> nash_equilibria(const OrdinalGame& game);

SolutionReport solve(const OrdinalGame& game, const SolveOptions& options = {});

}  // namespace relrisk
