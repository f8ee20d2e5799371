#include "relrisk/stochastic.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

namespace relrisk {
namespace {

void check_distribution(const std::vector<Rational>& mass, std::string_view what) {
  Rational total = 0;
  for (const auto& m : mass) {
    if (m < 0) throw ProbabilityError(std::string(what) + " has a negative mass");
    total += m;
  }
  if (total != 1) {
    throw ProbabilityError(std::string(what) + " sums to " + format_decimal(total) +
                           ", expected 1");
  }
}

// Edmonds-Karp on a dense capacity matrix. Exact because capacities are
// rationals; terminates because every augmenting path is a shortest one.
Rational max_flow(std::vector<std::vector<Rational>> capacity, std::size_t source,
                  std::size_t sink) {
  const std::size_t n = capacity.size();
  Rational flow = 0;
  for (;;) {
    std::vector<std::size_t> parent(n, n);
    parent[source] = source;
    std::deque<std::size_t> queue{source};
    while (!queue.empty() && parent[sink] == n) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] == n && capacity[u][v] > 0) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[sink] == n) return flow;
    Rational bottleneck = capacity[parent[sink]][sink];
    for (std::size_t v = sink; v != source; v = parent[v]) {
      bottleneck = std::min(bottleneck, capacity[parent[v]][v]);
    }
    for (std::size_t v = sink; v != source; v = parent[v]) {
      capacity[parent[v]][v] -= bottleneck;
      capacity[v][parent[v]] += bottleneck;
    }
    flow += bottleneck;
  }
}

MeasureOrderAnalysis analyse(MeasureSet measures, const std::vector<ElementPair>& pairs) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < measures.classes.size(); ++k) {
    names.push_back("P" + std::to_string(k + 1));
  }
  MeasureOrderAnalysis out;
  out.order = validate_order(StrictRelation(GroundSet(std::move(names)), pairs));
  out.profile = structure_profile(out.order);
  out.greatest_class = out.profile.greatest;
  if (out.greatest_class) out.optimal_decisions = measures.classes[*out.greatest_class].decisions;
  out.measures = std::move(measures);
  return out;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                              : text.substr(dot + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  if (!digits(whole) || (dot != std::string_view::npos && !digits(frac))) {
    throw ProbabilityError("'" + std::string(text) + "' is not a plain decimal number");
  }
  // cpp_int reads a leading 0 as an octal prefix.
  std::string digits_text = std::string(whole) + std::string(frac);
  digits_text.erase(0, std::min(digits_text.find_first_not_of('0'), digits_text.size() - 1));
  boost::multiprecision::cpp_int numerator(digits_text);
  boost::multiprecision::cpp_int denominator = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) denominator *= 10;
  return Rational(numerator, denominator);
}

std::string format_decimal(const Rational& value) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  cpp_int rest = den;
  std::size_t twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return value.str();

  const std::size_t places = std::max(twos, fives);
  cpp_int scale = 1;
  for (std::size_t i = 0; i < places; ++i) scale *= 10;
  const bool negative = num < 0;
  cpp_int scaled = (negative ? -num : num) * (scale / den);
  std::string digits = scaled.str();
  if (places == 0) return (negative ? "-" : "") + digits;
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (negative ? "-" : "") + digits;
}

// ---------------------------------------------------------------------------

FiniteProbabilitySpace::FiniteProbabilitySpace(GroundSet states, std::vector<Rational> probabilities)
    : states_(std::move(states)), probabilities_(std::move(probabilities)) {
  if (probabilities_.size() != states_.size()) {
    throw ProbabilityError("one probability per state expected");
  }
  check_distribution(probabilities_, "state distribution");
}

OutcomeDistribution::OutcomeDistribution(GroundSet outcomes, std::vector<Rational> mass)
    : outcomes_(std::move(outcomes)), mass_(std::move(mass)) {
  if (mass_.size() != outcomes_.size()) throw ProbabilityError("one mass per outcome expected");
  check_distribution(mass_, "outcome distribution");
}

OutcomeDistribution OutcomeDistribution::point(GroundSet outcomes, Element at) {
  std::vector<Rational> mass(outcomes.size(), Rational(0));
  mass.at(at) = 1;
  return OutcomeDistribution(std::move(outcomes), std::move(mass));
}

Rational OutcomeDistribution::mass_of(std::span<const Element> set) const {
  Rational total = 0;
  for (Element e : set) total += mass_.at(e);
  return total;
}

DecisionModel::DecisionModel(GroundSet decisions, FiniteProbabilitySpace space, GroundSet outcomes,
                             std::vector<Element> outcome_map, std::optional<Poset> outcome_order)
    : decisions_(std::move(decisions)),
      space_(std::move(space)),
      outcomes_(std::move(outcomes)),
      outcome_map_(std::move(outcome_map)),
      outcome_order_(std::move(outcome_order)) {
  if (outcome_map_.size() != decisions_.size() * space_.states().size()) {
    throw ProbabilityError("outcome map must cover every (decision, state) pair");
  }
  for (Element e : outcome_map_) {
    if (e >= outcomes_.size()) throw ProbabilityError("outcome map leaves the outcome set");
  }
  if (outcome_order_ && !(outcome_order_->ground() == outcomes_)) {
    throw GroundMismatch("outcome order is over a different ground set");
  }
}

Element DecisionModel::outcome(Element decision, Element state) const {
  return outcome_map_.at(decision * space_.states().size() + state);
}

OutcomeDistribution pushforward(const DecisionModel& model, Element decision) {
  if (decision >= model.decisions().size()) throw UnknownDecision("#" + std::to_string(decision));
  std::vector<Rational> mass(model.outcomes().size(), Rational(0));
  const auto& probs = model.space().probabilities();
  for (Element s = 0; s < probs.size(); ++s) mass[model.outcome(decision, s)] += probs[s];
  return OutcomeDistribution(model.outcomes(), std::move(mass));
}

OutcomeDistribution pushforward(const DecisionModel& model, std::string_view decision) {
  auto d = model.decisions().find(decision);
  if (!d) throw UnknownDecision(std::string(decision));
  return pushforward(model, *d);
}

MeasureSet measure_set(const DecisionModel& model) {
  MeasureSet out;
  for (Element d = 0; d < model.decisions().size(); ++d) {
    OutcomeDistribution dist = pushforward(model, d);
    auto it = std::find_if(out.classes.begin(), out.classes.end(),
                           [&](const MeasureClass& c) { return c.distribution == dist; });
    if (it == out.classes.end()) out.classes.push_back({std::move(dist), {d}});
    else it->decisions.push_back(d);
  }
  out.environment_risk_only = out.classes.size() == 1;
  return out;
}

bool stochastically_leq(const Poset& order, const OutcomeDistribution& p,
                        const OutcomeDistribution& q) {
  if (!(p.outcomes() == order.ground()) || !(q.outcomes() == order.ground())) {
    throw GroundMismatch("distribution is not over the order's ground set");
  }
  // Maximum of p(U) - q(U) over upper sets U, as a maximum-weight closure:
  // the best closure weight is (positive weight) - (min cut).
  const std::size_t n = order.size();
  const std::size_t source = n, sink = n + 1;
  std::vector<std::vector<Rational>> capacity(n + 2, std::vector<Rational>(n + 2, Rational(0)));
  Rational positive = 0;
  for (Element x = 0; x < n; ++x) {
    Rational w = p.mass(x) - q.mass(x);
    if (w > 0) {
      capacity[source][x] = w;
      positive += w;
    } else if (w < 0) {
      capacity[x][sink] = -w;
    }
  }
  if (positive == 0) return true;
  const Rational unbounded = positive + 1;
  for (const auto& [x, y] : order.covers().pairs()) capacity[x][y] = unbounded;
  return max_flow(std::move(capacity), source, sink) == positive;
}

Comparison dominance_lift(const Poset& order, const OutcomeDistribution& p,
                          const OutcomeDistribution& q) {
  const bool le = stochastically_leq(order, p, q);
  const bool ge = stochastically_leq(order, q, p);
  if (p == q) return Comparison::kEqual;
  if (le && ge) throw std::logic_error("stochastic dominance lift is not antisymmetric");
  if (le) return Comparison::kLess;
  if (ge) return Comparison::kGreater;
  return Comparison::kIncomparable;
}

MeasureOrderAnalysis measure_order_analysis(const DecisionModel& model) {
  if (!model.outcome_order()) throw ProbabilityError("decision model has no outcome order");
  const Poset& order = *model.outcome_order();
  MeasureSet measures = measure_set(model);
  std::vector<ElementPair> pairs;
  for (std::size_t a = 0; a < measures.classes.size(); ++a) {
    for (std::size_t b = 0; b < measures.classes.size(); ++b) {
      if (a != b && dominance_lift(order, measures.classes[a].distribution,
                                   measures.classes[b].distribution) == Comparison::kLess) {
        pairs.emplace_back(a, b);
      }
    }
  }
  return analyse(std::move(measures), pairs);
}

MeasureOrderAnalysis measure_order_analysis(const DecisionModel& model,
                                            const std::vector<ElementPair>& class_order) {
  return analyse(measure_set(model), class_order);
}

OutcomeDistribution product_pushforward(const OrdinalGame& game, const MixedProfile& mixed,
                                        Player player) {
  if (player >= game.num_players()) throw DimensionMismatch("player index out of range");
  if (mixed.per_player.size() != game.num_players()) {
    throw DimensionMismatch("mixed profile has " + std::to_string(mixed.per_player.size()) +
                            " players, game has " + std::to_string(game.num_players()));
  }
  for (Player i = 0; i < game.num_players(); ++i) {
    if (mixed.per_player[i].size() != game.strategies(i).size()) {
      throw DimensionMismatch("mixture of player " + std::to_string(i + 1) +
                              " does not match its strategy count");
    }
    check_distribution(mixed.per_player[i], "mixture of player " + std::to_string(i + 1));
  }
  const Poset& order = game.payoff_poset(player);
  std::vector<Rational> mass(order.size(), Rational(0));
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    const Profile profile = game.profile_at(k);
    Rational weight = 1;
    for (Player i = 0; i < profile.size() && weight != 0; ++i) {
      weight *= mixed.per_player[i][profile[i]];
    }
    if (weight != 0) mass[game.payoff(player, profile)] += weight;
  }
  return OutcomeDistribution(order.ground(), std::move(mass));
}

}  // namespace relrisk
