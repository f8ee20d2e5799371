#include "relrisk/game.hpp"

#include <algorithm>

namespace relrisk {

OrdinalGame::OrdinalGame(std::vector<GroundSet> strategies, std::vector<Poset> payoff_posets,
                         std::vector<std::vector<Element>> payoffs)
    : strategies_(std::move(strategies)),
      posets_(std::move(payoff_posets)),
      payoffs_(std::move(payoffs)) {
  const std::size_t n = strategies_.size();
  if (n < 2) throw GameError("a game needs at least two players");
  if (posets_.size() != n || payoffs_.size() != n) {
    throw GameError("expected one payoff order and one payoff table per player");
  }
  num_profiles_ = 1;
  for (Player i = 0; i < n; ++i) {
    if (strategies_[i].empty()) {
      throw GameError("player " + std::to_string(i + 1) + " has no strategies");
    }
    num_profiles_ *= strategies_[i].size();
  }
  for (Player i = 0; i < n; ++i) {
    if (payoffs_[i].size() != num_profiles_) {
      throw GameError("payoff table of player " + std::to_string(i + 1) + " has " +
                      std::to_string(payoffs_[i].size()) + " entries, expected " +
                      std::to_string(num_profiles_));
    }
    for (Element e : payoffs_[i]) {
      if (e >= posets_[i].size()) {
        throw GameError("payoff of player " + std::to_string(i + 1) +
                        " is outside its payoff order");
      }
    }
  }
}

std::size_t OrdinalGame::flat_index(const Profile& profile) const {
  if (profile.size() != num_players()) throw GameError("profile has the wrong number of players");
  std::size_t index = 0;
  for (Player i = 0; i < num_players(); ++i) {
    if (profile[i] >= strategies_[i].size()) throw GameError("strategy index out of range");
    index = index * strategies_[i].size() + profile[i];
  }
  return index;
}

Profile OrdinalGame::profile_at(std::size_t flat) const {
  Profile profile(num_players());
  for (Player i = num_players(); i-- > 0;) {
    profile[i] = flat % strategies_[i].size();
    flat /= strategies_[i].size();
  }
  return profile;
}

std::vector<Profile> OrdinalGame::opponent_profiles(Player player) const {
  std::vector<Profile> out{Profile{}};
  for (Player j = 0; j < num_players(); ++j) {
    if (j == player) continue;
    std::vector<Profile> next;
    for (const auto& prefix : out) {
      for (std::size_t s = 0; s < strategies_[j].size(); ++s) {
        Profile p = prefix;
        p.push_back(s);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

Profile OrdinalGame::with_own(const Profile& opponents, Player player, std::size_t own) {
  Profile p = opponents;
  p.insert(p.begin() + static_cast<std::ptrdiff_t>(player), own);
  return p;
}

Profile OrdinalGame::without_own(const Profile& profile, Player player) {
  Profile p = profile;
  p.erase(p.begin() + static_cast<std::ptrdiff_t>(player));
  return p;
}

Comparison compare(const Poset& poset, Element a, Element b) {
  if (a == b) return Comparison::kEqual;
  if (poset.less(a, b)) return Comparison::kLess;
  if (poset.less(b, a)) return Comparison::kGreater;
  return Comparison::kIncomparable;
}

Comparison flip(Comparison c) {
  switch (c) {
    case Comparison::kLess: return Comparison::kGreater;
    case Comparison::kGreater: return Comparison::kLess;
    default: return c;
  }
}

ElementSet restriction_elements(const OrdinalGame& game, Player player, const Profile& opponents) {
  ElementSet image;
  for (std::size_t s = 0; s < game.strategies(player).size(); ++s) {
    image.push_back(game.payoff(player, OrdinalGame::with_own(opponents, player, s)));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

Poset restriction_image(const OrdinalGame& game, Player player, const Profile& opponents) {
  return induced_subposet(game.payoff_poset(player),
                          restriction_elements(game, player, opponents));
}

std::vector<RiskConditionReport> verify_risk_conditions(const OrdinalGame& game) {
  std::vector<RiskConditionReport> out;
  for (Player i = 0; i < game.num_players(); ++i) {
    RiskConditionReport report;
    report.payoff_upper_semilattice = structure_profile(game.payoff_poset(i)).is_upper_semilattice;
    report.images_upper_semilattices = true;
    for (const auto& opp : game.opponent_profiles(i)) {
      if (!structure_profile(restriction_image(game, i, opp)).is_upper_semilattice) {
        report.images_upper_semilattices = false;
        report.failing_opponents.push_back(opp);
      }
    }
    out.push_back(std::move(report));
  }
  return out;
}

ComparisonTable comparison_table(const OrdinalGame& game, Player player) {
  ComparisonTable table;
  table.player = player;
  const std::size_t k = game.strategies(player).size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) table.pairs.emplace_back(a, b);
  }
  table.opponents = game.opponent_profiles(player);
  const Poset& order = game.payoff_poset(player);
  for (const auto& opp : table.opponents) {
    std::vector<ComparisonCell> row;
    for (const auto& [a, b] : table.pairs) {
      ComparisonCell cell;
      cell.first = a;
      cell.second = b;
      cell.opponents = opp;
      cell.first_payoff = game.payoff(player, OrdinalGame::with_own(opp, player, a));
      cell.second_payoff = game.payoff(player, OrdinalGame::with_own(opp, player, b));
      cell.verdict = compare(order, cell.first_payoff, cell.second_payoff);
      row.push_back(std::move(cell));
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

DominanceReport dominance_report(const OrdinalGame& game, Player player) {
  const std::size_t k = game.strategies(player).size();
  const Poset& order = game.payoff_poset(player);
  const auto opponents = game.opponent_profiles(player);

  auto verdicts = [&](std::size_t a, std::size_t b) {
    std::vector<Comparison> out;
    for (const auto& opp : opponents) {
      out.push_back(compare(order, game.payoff(player, OrdinalGame::with_own(opp, player, a)),
                            game.payoff(player, OrdinalGame::with_own(opp, player, b))));
    }
    return out;
  };
  auto weakly = [](const std::vector<Comparison>& v) {
    bool strict_somewhere = false;
    for (Comparison c : v) {
      if (c == Comparison::kGreater) strict_somewhere = true;
      else if (c != Comparison::kEqual) return false;
    }
    return strict_somewhere;
  };
  auto strictly = [](const std::vector<Comparison>& v) {
    return std::all_of(v.begin(), v.end(), [](Comparison c) { return c == Comparison::kGreater; });
  };

  DominanceReport report;
  for (std::size_t a = 0; a < k; ++a) {
    bool dominates_all = true;
    bool dominated = false;
    bool strictly_dominated = false;
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      if (!weakly(verdicts(a, b))) dominates_all = false;
      const auto against = verdicts(b, a);
      if (weakly(against)) dominated = true;
      if (strictly(against)) strictly_dominated = true;
    }
    if (dominates_all) report.dominant.push_back(a);
    if (dominated) report.dominated.push_back(a);
    else report.undominated.push_back(a);
    if (strictly_dominated) report.strictly_dominated.push_back(a);
  }
  return report;
}

CautiousReport cautious_strategies(const OrdinalGame& game, Player player, CautiousRule rule) {
  const Poset& order = game.payoff_poset(player);
  const auto opponents = game.opponent_profiles(player);
  CautiousReport report;
  for (std::size_t s = 0; s < game.strategies(player).size(); ++s) {
    ElementSet outcomes;
    for (const auto& opp : opponents) {
      outcomes.push_back(game.payoff(player, OrdinalGame::with_own(opp, player, s)));
    }
    report.security_levels.push_back(inf_set(order, outcomes));
  }
  const auto& levels = report.security_levels;
  for (std::size_t s = 0; s < levels.size(); ++s) {
    if (!levels[s]) continue;
    bool keep = true;
    for (std::size_t t = 0; t < levels.size() && keep; ++t) {
      if (!levels[t]) continue;
      if (rule == CautiousRule::kGreatest) keep = order.leq(*levels[t], *levels[s]);
      else keep = !order.less(*levels[s], *levels[t]);
    }
    if (keep) report.cautious.push_back(s);
  }
  return report;
}

std::vector<std::vector<Profile>> best_responses(const OrdinalGame& game) {
  std::vector<std::vector<Profile>> out;
  for (Player i = 0; i < game.num_players(); ++i) {
    std::vector<Profile> graph;
    for (const auto& opp : game.opponent_profiles(i)) {
      const auto top = greatest_of(game.payoff_poset(i), restriction_elements(game, i, opp));
      if (!top) continue;
      for (std::size_t s = 0; s < game.strategies(i).size(); ++s) {
        Profile p = OrdinalGame::with_own(opp, i, s);
        if (game.payoff(i, p) == *top) graph.push_back(std::move(p));
      }
    }
    out.push_back(std::move(graph));
  }
  return out;
}

namespace {

std::vector<Profile> intersect(const OrdinalGame& game,
                               const std::vector<std::vector<Profile>>& graphs) {
  std::vector<int> hits(game.num_profiles(), 0);
  for (const auto& graph : graphs) {
    for (const auto& p : graph) ++hits[game.flat_index(p)];
  }
  std::vector<Profile> out;
  for (std::size_t k = 0; k < hits.size(); ++k) {
    if (hits[k] == static_cast<int>(graphs.size())) out.push_back(game.profile_at(k));
  }
  return out;
}

}  // namespace

std::vector<Profile> nash_equilibria(const OrdinalGame& game) {
  return intersect(game, best_responses(game));
}

SolutionReport solve(const OrdinalGame& game, const SolveOptions& options) {
  SolutionReport report;
  report.risk_conditions = verify_risk_conditions(game);
  for (Player i = 0; i < game.num_players(); ++i) {
    report.comparison_tables.push_back(comparison_table(game, i));
    report.dominance.push_back(dominance_report(game, i));
    report.cautious.push_back(cautious_strategies(game, i, options.cautious_rule));
  }
  report.best_responses = best_responses(game);
  report.nash = intersect(game, report.best_responses);
  return report;
}

}  // namespace relrisk
