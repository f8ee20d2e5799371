#pragma once

// Finite probabilistic risk models: outcome distributions pushed forward
// through a decision's outcome map, the set of induced measures, the
// stochastic-dominance lift of an outcome order to distributions, and the
// product pushforward of independent mixed strategies in an ordinal game.
//
// All probabilities are exact rationals.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relrisk/game.hpp"
#include "relrisk/order.hpp"

namespace relrisk {

using Rational = boost::multiprecision::cpp_rational;

class ProbabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownDecision : public ProbabilityError {
 public:
  explicit UnknownDecision(const std::string& name)
      : ProbabilityError("unknown decision '" + name + "'") {}
};

class GroundMismatch : public ProbabilityError {
 public:
  using ProbabilityError::ProbabilityError;
};

class DimensionMismatch : public ProbabilityError {
 public:
  using ProbabilityError::ProbabilityError;
};

/// Parses a plain decimal ("0.25", "1") into an exact rational.
/// Signs and exponents are rejected. Throws ProbabilityError.
Rational parse_decimal(std::string_view text);
/// Exact decimal rendering when one exists, otherwise "p/q".
std::string format_decimal(const Rational& value);

class FiniteProbabilitySpace {
 public:
  FiniteProbabilitySpace() = default;
  /// Throws ProbabilityError unless masses are nonnegative and sum to 1.
  FiniteProbabilitySpace(GroundSet states, std::vector<Rational> probabilities);

  const GroundSet& states() const { return states_; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }

 private:
  GroundSet states_;
  std::vector<Rational> probabilities_;
};

class OutcomeDistribution {
 public:
  OutcomeDistribution() = default;
  /// Throws ProbabilityError unless masses are nonnegative and sum to 1.
  OutcomeDistribution(GroundSet outcomes, std::vector<Rational> mass);

  static OutcomeDistribution point(GroundSet outcomes, Element at);

  const GroundSet& outcomes() const { return outcomes_; }
  const std::vector<Rational>& mass() const { return mass_; }
  const Rational& mass(Element e) const { return mass_.at(e); }
  Rational mass_of(std::span<const Element> set) const;

  bool operator==(const OutcomeDistribution& other) const {
    return outcomes_ == other.outcomes_ && mass_ == other.mass_;
  }

 private:
  GroundSet outcomes_;
  std::vector<Rational> mass_;
};

class DecisionModel {
 public:
  /// `outcome_map[d * |states| + s]` is the outcome of decision d in state s.
  /// Throws ProbabilityError on inconsistent dimensions or orders.
  DecisionModel(GroundSet decisions, FiniteProbabilitySpace space, GroundSet outcomes,
                std::vector<Element> outcome_map, std::optional<Poset> outcome_order = {});

  const GroundSet& decisions() const { return decisions_; }
  const FiniteProbabilitySpace& space() const { return space_; }
  const GroundSet& outcomes() const { return outcomes_; }
  Element outcome(Element decision, Element state) const;
  const std::optional<Poset>& outcome_order() const { return outcome_order_; }

 private:
  GroundSet decisions_;
  FiniteProbabilitySpace space_;
  GroundSet outcomes_;
  std::vector<Element> outcome_map_;
  std::optional<Poset> outcome_order_;
};

/// Independent per-player distributions over strategies.
struct MixedProfile {
  std::vector<std::vector<Rational>> per_player;
};

struct MeasureClass {
  OutcomeDistribution distribution;
  ElementSet decisions;
};

struct MeasureSet {
  /// Classes ordered by their first inducing decision.
  std::vector<MeasureClass> classes;
  /// Exactly one distinct measure: the only risk left is the environment's.
  bool environment_risk_only = false;
};

struct MeasureOrderAnalysis {
  MeasureSet measures;
  /// Order over measure classes; class k is named "P<k+1>".
  Poset order;
  StructureProfile profile;
  std::optional<std::size_t> greatest_class;
  ElementSet optimal_decisions;
};

OutcomeDistribution pushforward(const DecisionModel& model, Element decision);
/// Throws UnknownDecision.
OutcomeDistribution pushforward(const DecisionModel& model, std::string_view decision);

MeasureSet measure_set(const DecisionModel& model);

/// p <= q in first-order stochastic dominance over `order`: p(U) <= q(U) for
/// every upper set U. Decided exactly as a maximum-weight closure (min cut).
bool stochastically_leq(const Poset& order, const OutcomeDistribution& p,
                        const OutcomeDistribution& q);

/// Throws GroundMismatch when either distribution is over another ground set.
Comparison dominance_lift(const Poset& order, const OutcomeDistribution& p,
                          const OutcomeDistribution& q);

/// Uses the dominance lift of the model's outcome order. Throws
/// ProbabilityError when the model has no outcome order.
MeasureOrderAnalysis measure_order_analysis(const DecisionModel& model);
/// Uses a caller-supplied strict order over the measure classes ("P1", ...).
MeasureOrderAnalysis measure_order_analysis(const DecisionModel& model,
                                            const std::vector<ElementPair>& class_order);

/// Distribution of `player`'s payoff when every player mixes independently.
/// Throws DimensionMismatch.
OutcomeDistribution product_pushforward(const OrdinalGame& game, const MixedProfile& mixed,
                                        Player player);

}  // namespace relrisk
