#pragma once

// Classification of an outcome order into risk situations and the decision
// target set each situation implies.

#include <string>
#include <string_view>
#include <vector>

#include "relrisk/order.hpp"

namespace relrisk {

enum class RiskKind {
  kNoDevelopment,  // at most one outcome
  kRiskUpper,      // upper semilattice (sup-seeking)
  kRiskLower,      // lower semilattice (avoid the worst)
  kRiskTotal,      // total order
  kNotDirectRisk,  // no semilattice structure without further constructions
};

std::string_view to_string(RiskKind kind);

struct Finding {
  enum class Kind {
    kIsolatedElement,       // incomparable to every other element
    kComparabilityComponent,
    kLowerStructure,        // upper semilattice that is also a lower one
  };
  Kind kind;
  ElementSet elements;
  std::string message;
};

struct RiskClassification {
  RiskKind kind = RiskKind::kNoDevelopment;
  ElementSet target_set;
  std::vector<Finding> diagnostics;
};

struct TargetSet {
  ElementSet elements;
  bool not_a_risk_situation = false;
};

struct QuotientRisk {
  Poset quotient;
  RiskClassification classification;
};

RiskClassification classify(const Poset& poset);

/// Classifies the quotient order. Throws QuotientCycleError.
QuotientRisk classify_quotient(const Poset& poset, const Partition& partition);

TargetSet target_set(const Poset& poset, const RiskClassification& classification);

/// Connected components of the comparability graph, in declaration order.
std::vector<ElementSet> comparability_components(const Poset& poset);

}  // namespace relrisk
