#pragma once

// Brute-force oracles and random generators for the test suites. The oracles
// work on plain adjacency data and never call into the library's order
// algorithms, so they stay independent of the code they check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "relrisk/game.hpp"
#include "relrisk/order.hpp"
#include "relrisk/stochastic.hpp"

namespace relrisk::testing {

using Pairs = std::vector<ElementPair>;
using Reach = std::vector<std::vector<bool>>;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string model_path(const std::string& file) {
  return std::string(RELRISK_MODELS_DIR) + "/" + file;
}

inline GroundSet numbered_ground(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return GroundSet(std::move(names));
}

// ---------------------------------------------------------------------------
// Oracles

/// Strict reachability by depth-first search from every vertex.
inline Reach brute_reach(std::size_t n, const Pairs& pairs) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : pairs) adj[a].push_back(b);
  Reach reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack(adj[s].begin(), adj[s].end());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (std::size_t w : adj[v]) stack.push_back(w);
    }
  }
  return reach;
}

inline bool brute_acyclic(const Reach& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i][i]) return false;
  }
  return true;
}

inline std::set<ElementPair> reach_pairs(const Reach& r) {
  std::set<ElementPair> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r[i][j]) out.emplace(i, j);
    }
  }
  return out;
}

/// Pairs not implied by a two-step path through the closure.
inline std::set<ElementPair> brute_hasse(const Reach& r) {
  std::set<ElementPair> out;
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!r[a][b]) continue;
      bool implied = false;
      for (std::size_t c = 0; c < n; ++c) implied = implied || (r[a][c] && r[c][b]);
      if (!implied) out.emplace(a, b);
    }
  }
  return out;
}

inline bool leq(const Reach& r, std::size_t a, std::size_t b) { return a == b || r[a][b]; }

/// Least element among all common upper bounds, by direct scan.
inline std::optional<std::size_t> brute_join(const Reach& r, std::size_t a, std::size_t b) {
  const std::size_t n = r.size();
  std::vector<std::size_t> ub;
  for (std::size_t c = 0; c < n; ++c) {
    if (leq(r, a, c) && leq(r, b, c)) ub.push_back(c);
  }
  for (std::size_t c : ub) {
    if (std::all_of(ub.begin(), ub.end(), [&](std::size_t d) { return leq(r, c, d); })) return c;
  }
  return std::nullopt;
}

inline std::optional<std::size_t> brute_meet(const Reach& r, std::size_t a, std::size_t b) {
  const std::size_t n = r.size();
  std::vector<std::size_t> lb;
  for (std::size_t c = 0; c < n; ++c) {
    if (leq(r, c, a) && leq(r, c, b)) lb.push_back(c);
  }
  for (std::size_t c : lb) {
    if (std::all_of(lb.begin(), lb.end(), [&](std::size_t d) { return leq(r, d, c); })) return c;
  }
  return std::nullopt;
}

/// Every upward-closed subset, as bit masks (n <= 20).
inline std::vector<std::uint32_t> brute_upper_sets(const Reach& r) {
  const std::size_t n = r.size();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (std::size_t y = 0; y < n && closed; ++y) {
        if (r[x][y] && !(mask >> y & 1u)) closed = false;
      }
    }
    if (closed) out.push_back(mask);
  }
  return out;
}

inline Rational mass_of_mask(const std::vector<Rational>& mass, std::uint32_t mask) {
  Rational total = 0;
  for (std::size_t x = 0; x < mass.size(); ++x) {
    if (mask >> x & 1u) total += mass[x];
  }
  return total;
}

/// p <= q on every upper set, by enumeration.
inline bool brute_stochastic_leq(const Reach& r, const std::vector<Rational>& p,
                                 const std::vector<Rational>& q) {
  for (std::uint32_t u : brute_upper_sets(r)) {
    if (mass_of_mask(p, u) > mass_of_mask(q, u)) return false;
  }
  return true;
}

inline Reach reach_of(const Poset& poset) {
  const std::size_t n = poset.size();
  Pairs covers = poset.covers().pairs();
  return brute_reach(n, covers);
}

/// Nash equilibria straight from the definition: at every profile each
/// player's payoff is the greatest payoff reachable by unilateral deviation
/// (and so no deviation is strictly better).
inline std::vector<Profile> brute_nash(const OrdinalGame& game) {
  std::vector<Reach> reach;
  for (Player i = 0; i < game.num_players(); ++i) reach.push_back(reach_of(game.payoff_poset(i)));
  std::vector<Profile> out;
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const Profile p = game.profile_at(k);
    bool equilibrium = true;
    for (Player i = 0; i < game.num_players() && equilibrium; ++i) {
      const Element here = game.payoff(i, p);
      for (std::size_t s = 0; s < game.strategies(i).size() && equilibrium; ++s) {
        Profile q = p;
        q[i] = s;
        const Element there = game.payoff(i, q);
        if (reach[i][here][there]) equilibrium = false;   // strictly better deviation
        if (!leq(reach[i], there, here)) equilibrium = false;  // not the greatest
      }
    }
    if (equilibrium) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Generators

/// Random DAG: edges only go forward in a random permutation.
inline Pairs random_dag_pairs(std::mt19937& rng, std::size_t n, double density) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) out.emplace_back(perm[i], perm[j]);
    }
  }
  return out;
}

inline Poset random_poset(std::mt19937& rng, std::size_t n, double density,
                          const std::string& prefix = "e") {
  return validate_order(StrictRelation(numbered_ground(n, prefix), random_dag_pairs(rng, n, density)));
}

/// Random relation that may contain cycles (no self pairs).
inline Pairs random_pairs(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  Pairs out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && edge(rng)) out.emplace_back(i, j);
    }
  }
  return out;
}

/// Random upper semilattice: a union-closed family of subsets of a small
/// universe, ordered by strict inclusion (the join is the union).
inline Poset random_upper_semilattice(std::mt19937& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::uint32_t> subset(1, 31);
  std::set<std::uint32_t> family;
  std::uniform_int_distribution<std::size_t> seeds(1, 4);
  const std::size_t k = seeds(rng);
  for (std::size_t i = 0; i < k; ++i) family.insert(subset(rng));
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> members(family.begin(), family.end());
    for (auto a : members) {
      for (auto b : members) {
        if (family.size() < max_size && family.insert(a | b).second) grew = true;
      }
    }
  }
  // Truncation may break union-closure; rebuild from the closed prefix.
  std::vector<std::uint32_t> members(family.begin(), family.end());
  bool closed = true;
  for (auto a : members) {
    for (auto b : members) closed = closed && family.count(a | b);
  }
  if (!closed) members = {members.front()};
  std::vector<std::string> names;
  for (auto m : members) names.push_back("s" + std::to_string(m));
  Pairs pairs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j && (members[i] & members[j]) == members[i]) pairs.emplace_back(i, j);
    }
  }
  return validate_order(StrictRelation(GroundSet(std::move(names)), pairs));
}

/// Random total order on n elements.
inline Poset random_chain(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Pairs pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(perm[i], perm[i + 1]);
  return validate_order(StrictRelation(numbered_ground(n), pairs));
}

inline OrdinalGame random_game(std::mt19937& rng, std::size_t players, std::size_t max_strategies,
                               std::size_t max_elements) {
  std::uniform_int_distribution<std::size_t> strategies(1, max_strategies);
  std::uniform_int_distribution<std::size_t> elements(1, max_elements);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<GroundSet> strategy_sets;
  std::size_t profiles = 1;
  for (std::size_t i = 0; i < players; ++i) {
    const std::size_t k = strategies(rng);
    strategy_sets.push_back(numbered_ground(k, "s"));
    profiles *= k;
  }
  std::vector<Poset> posets;
  std::vector<std::vector<Element>> payoffs;
  for (std::size_t i = 0; i < players; ++i) {
    const std::size_t m = elements(rng);
    posets.push_back(random_poset(rng, m, density(rng), "u"));
    std::uniform_int_distribution<Element> pick(0, m - 1);
    std::vector<Element> table;
    for (std::size_t k = 0; k < profiles; ++k) table.push_back(pick(rng));
    payoffs.push_back(std::move(table));
  }
  return OrdinalGame(std::move(strategy_sets), std::move(posets), std::move(payoffs));
}

/// Random distribution with masses in multiples of 1/denominator.
inline std::vector<Rational> random_distribution(std::mt19937& rng, std::size_t n,
                                                 int denominator) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<int> units(n, 0);
  for (int u = 0; u < denominator; ++u) ++units[pick(rng)];
  std::vector<Rational> out;
  for (int u : units) out.emplace_back(u, denominator);
  return out;
}

// ---------------------------------------------------------------------------
// Relabeling

// Applies a bijection to strategies and payoff elements of every player.
struct Relabeling {
  std::vector<std::vector<std::size_t>> strategy;  // old -> new
  std::vector<std::vector<Element>> element;        // old -> new

  Profile map(const Profile& q) const {
    Profile out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = strategy[i][q[i]];
    return out;
  }
};

inline std::vector<std::size_t> random_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline OrdinalGame relabel(const OrdinalGame& game, const Relabeling& r) {
  std::vector<GroundSet> strategies;
  std::vector<Poset> posets;
  std::vector<std::vector<Element>> payoffs;
  for (Player i = 0; i < game.num_players(); ++i) {
    std::vector<std::string> snames(game.strategies(i).size());
    for (std::size_t s = 0; s < snames.size(); ++s) {
      snames[r.strategy[i][s]] = "t" + std::to_string(s);
    }
    strategies.emplace_back(std::move(snames));
    const Poset& u = game.payoff_poset(i);
    std::vector<std::string> enames(u.size());
    for (Element e = 0; e < u.size(); ++e) enames[r.element[i][e]] = "v" + u.name(e);
    Pairs pairs;
    for (auto [a, b] : u.covers().pairs()) pairs.emplace_back(r.element[i][a], r.element[i][b]);
    posets.push_back(validate_order(StrictRelation(GroundSet(std::move(enames)), pairs)));
  }
  std::vector<std::size_t> sizes;
  for (Player i = 0; i < game.num_players(); ++i) sizes.push_back(game.strategies(i).size());
  for (Player i = 0; i < game.num_players(); ++i) {
    std::vector<Element> table(game.num_profiles());
    for (std::size_t k = 0; k < game.num_profiles(); ++k) {
      const Profile old = game.profile_at(k);
      const Profile mapped = r.map(old);
      std::size_t flat = 0;
      for (std::size_t j = 0; j < mapped.size(); ++j) flat = flat * sizes[j] + mapped[j];
      table[flat] = r.element[i][game.payoff(i, old)];
    }
    payoffs.push_back(std::move(table));
  }
  return OrdinalGame(std::move(strategies), std::move(posets), std::move(payoffs));
}

}  // namespace relrisk::testing
