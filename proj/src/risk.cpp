#include "relrisk/risk.hpp"

#include <algorithm>

namespace relrisk {
namespace {

std::string names_text(const Poset& poset, const ElementSet& set) {
  std::string out = "{ ";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += poset.name(set[i]);
  }
  out += set.empty() ? "}" : " }";
  return out;
}

}  // namespace

std::string_view to_string(RiskKind kind) {
  switch (kind) {
    case RiskKind::kNoDevelopment: return "NoDevelopment";
    case RiskKind::kRiskUpper: return "RiskUpper";
    case RiskKind::kRiskLower: return "RiskLower";
    case RiskKind::kRiskTotal: return "RiskTotal";
    case RiskKind::kNotDirectRisk: return "NotDirectRisk";
  }
  return "?";
}

std::vector<ElementSet> comparability_components(const Poset& poset) {
  const std::size_t n = poset.size();
  std::vector<std::size_t> component(n, n);
  std::vector<ElementSet> out;
  for (Element root = 0; root < n; ++root) {
    if (component[root] != n) continue;
    const std::size_t id = out.size();
    ElementSet members;
    std::vector<Element> stack{root};
    component[root] = id;
    while (!stack.empty()) {
      Element x = stack.back();
      stack.pop_back();
      members.push_back(x);
      for (Element y = 0; y < n; ++y) {
        if (component[y] == n && x != y && poset.comparable(x, y)) {
          component[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

RiskClassification classify(const Poset& poset) {
  RiskClassification result;
  if (poset.size() <= 1) {
    result.kind = RiskKind::kNoDevelopment;
    return result;
  }

  const StructureProfile profile = structure_profile(poset);
  if (profile.is_total_order) {
    result.kind = RiskKind::kRiskTotal;
  } else if (profile.is_upper_semilattice) {
    result.kind = RiskKind::kRiskUpper;
    if (profile.is_lower_semilattice) {
      ElementSet least;
      if (profile.least) least.push_back(*profile.least);
      result.diagnostics.push_back(
          {Finding::Kind::kLowerStructure, least,
           "also a lower semilattice with least element " + names_text(poset, least)});
    }
  } else if (profile.is_lower_semilattice) {
    result.kind = RiskKind::kRiskLower;
  } else {
    result.kind = RiskKind::kNotDirectRisk;
    for (Element x = 0; x < poset.size(); ++x) {
      bool isolated = true;
      for (Element y = 0; y < poset.size() && isolated; ++y) {
        if (x != y && poset.comparable(x, y)) isolated = false;
      }
      if (isolated) {
        result.diagnostics.push_back({Finding::Kind::kIsolatedElement, {x},
                                      poset.name(x) + " is incomparable with every other outcome"});
      }
    }
    const auto components = comparability_components(poset);
    if (components.size() > 1) {
      for (const auto& component : components) {
        result.diagnostics.push_back({Finding::Kind::kComparabilityComponent, component,
                                      "comparability component " + names_text(poset, component)});
      }
    }
  }
  result.target_set = target_set(poset, result).elements;
  return result;
}

QuotientRisk classify_quotient(const Poset& poset, const Partition& partition) {
  Poset q = quotient(poset, partition);
  RiskClassification c = classify(q);
  return {std::move(q), std::move(c)};
}

TargetSet target_set(const Poset& poset, const RiskClassification& classification) {
  TargetSet out;
  switch (classification.kind) {
    case RiskKind::kNoDevelopment:
      break;
    case RiskKind::kRiskUpper:
    case RiskKind::kRiskTotal: {
      if (auto top = extremes(poset).greatest) out.elements.push_back(*top);
      break;
    }
    case RiskKind::kRiskLower:
      out.elements = extremes(poset).maximal;
      break;
    case RiskKind::kNotDirectRisk:
      out.elements = extremes(poset).maximal;
      out.not_a_risk_situation = true;
      break;
  }
  return out;
}

}  // namespace relrisk
