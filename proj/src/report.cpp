#include "relrisk/report.hpp"

#include <sstream>

namespace relrisk {
namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string index_set(const GroundSet& ground, const std::vector<std::size_t>& indices) {
  return format_set(ground, indices);
}

std::string covers_text(const Poset& poset) {
  std::string out = "{ ";
  const auto pairs = poset.covers().pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i) out += ", ";
    out += poset.name(pairs[i].first) + " < " + poset.name(pairs[i].second);
  }
  return out + (pairs.empty() ? "}" : " }");
}

std::string opponent_label(const OrdinalGame& game, Player player, const Profile& opponents) {
  std::vector<std::string> names;
  std::size_t k = 0;
  for (Player j = 0; j < game.num_players(); ++j) {
    if (j == player) continue;
    names.push_back(game.strategies(j).name(opponents[k++]));
  }
  if (names.size() == 1) return names.front();
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + ")";
}

std::string_view symbol(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "≤";
    case Comparison::kGreater: return "≥";
    case Comparison::kEqual: return "=";
    case Comparison::kIncomparable: return "?";
  }
  return "?";
}

std::string distribution_text(const OutcomeDistribution& d) {
  std::string out = "{ ";
  bool first = true;
  for (Element e = 0; e < d.outcomes().size(); ++e) {
    if (d.mass(e) == 0) continue;
    if (!first) out += ", ";
    first = false;
    out += d.outcomes().name(e) + ": " + d.mass(e).str();
  }
  return out + (first ? "}" : " }");
}

std::string profile_set(const OrdinalGame& game, const std::vector<Profile>& profiles) {
  std::string out = "{ ";
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i) out += ", ";
    out += profile_label(game, profiles[i]);
  }
  return out + (profiles.empty() ? "}" : " }");
}

void structure_lines(std::ostream& os, const Poset& poset, const StructureProfile& p) {
  os << "upper semilattice: " << yes_no(p.is_upper_semilattice) << '\n'
     << "lower semilattice: " << yes_no(p.is_lower_semilattice) << '\n'
     << "total order: " << yes_no(p.is_total_order) << '\n'
     << "greatest = " << (p.greatest ? poset.name(*p.greatest) : "none") << '\n'
     << "least = " << (p.least ? poset.name(*p.least) : "none") << '\n'
     << "maximal = " << format_set(poset.ground(), p.maximal_set) << '\n'
     << "minimal = " << format_set(poset.ground(), p.minimal_set) << '\n';
}

void classification_lines(std::ostream& os, const Poset& poset, const RiskClassification& c) {
  os << "kind = " << to_string(c.kind) << '\n';
  const TargetSet target = target_set(poset, c);
  os << "target = " << format_set(poset.ground(), target.elements);
  if (target.not_a_risk_situation) os << " (not a risk situation)";
  os << '\n';
  for (const auto& finding : c.diagnostics) os << "note: " << finding.message << '\n';
}

Diagnostic input_error(std::string message) {
  return {Diagnostic::Severity::kError, {1, 1}, std::move(message), std::nullopt};
}

}  // namespace

std::string dot_export(const Poset& poset) {
  std::string out = "digraph hasse {\nrankdir=BT;\n";
  for (const auto& [a, b] : poset.covers().pairs()) {
    out += "\"" + poset.name(a) + "\" -> \"" + poset.name(b) + "\";\n";
  }
  return out + "}\n";
}

std::string format_set(const GroundSet& ground, std::span<const Element> elements) {
  if (elements.empty()) return "{ }";
  std::string out = "{ ";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i) out += ", ";
    out += ground.name(elements[i]);
  }
  return out + " }";
}

std::string profile_label(const OrdinalGame& game, const Profile& profile) {
  bool compact = true;
  for (Player i = 0; i < game.num_players() && compact; ++i) {
    for (const auto& s : game.strategies(i).names()) compact = compact && s.size() == 1;
  }
  std::string out = compact ? "" : "(";
  for (Player i = 0; i < profile.size(); ++i) {
    if (!compact && i) out += ",";
    out += game.strategies(i).name(profile[i]);
  }
  return compact ? out : out + ")";
}

std::string check_report(std::string_view name, const Poset& poset) {
  std::ostringstream os;
  os << "poset " << name << '\n'
     << "elements = " << format_set(poset.ground(), [&] {
          ElementSet all;
          for (Element e = 0; e < poset.size(); ++e) all.push_back(e);
          return all;
        }()) << '\n'
     << "covers = " << covers_text(poset) << '\n';
  structure_lines(os, poset, structure_profile(poset));
  return os.str();
}

std::string classify_report(std::string_view name, const Poset& poset) {
  std::ostringstream os;
  os << "poset " << name << '\n';
  classification_lines(os, poset, classify(poset));
  return os.str();
}

std::string classify_report(std::string_view name, const Poset&,
                            std::string_view partition_name, const QuotientRisk& result) {
  std::ostringstream os;
  const Poset& q = result.quotient;
  ElementSet all;
  for (Element e = 0; e < q.size(); ++e) all.push_back(e);
  os << "poset " << name << '\n'
     << "partition " << partition_name << '\n'
     << "classes = " << format_set(q.ground(), all) << '\n'
     << "class covers = " << covers_text(q) << '\n';
  classification_lines(os, q, result.classification);
  return os.str();
}

std::string solve_report(std::string_view name, const OrdinalGame& game,
                         const SolutionReport& solution) {
  std::ostringstream os;
  const std::size_t n = game.num_players();
  os << "game " << name << '\n' << "players = " << n << '\n';
  for (Player i = 0; i < n; ++i) {
    std::vector<std::size_t> all;
    for (std::size_t s = 0; s < game.strategies(i).size(); ++s) all.push_back(s);
    os << "strategies " << i + 1 << " = " << index_set(game.strategies(i), all) << '\n';
  }

  os << "\nrisk conditions\n";
  for (Player i = 0; i < n; ++i) {
    const auto& rc = solution.risk_conditions[i];
    os << "  player " << i + 1 << ": payoff order upper semilattice = "
       << yes_no(rc.payoff_upper_semilattice) << '\n'
       << "  player " << i + 1 << ": restriction images upper semilattices = "
       << yes_no(rc.images_upper_semilattices) << '\n';
    for (const auto& opp : game.opponent_profiles(i)) {
      const Poset image = restriction_image(game, i, opp);
      const auto top = extremes(image).greatest;
      ElementSet all;
      for (Element e = 0; e < image.size(); ++e) all.push_back(e);
      os << "    opponents " << opponent_label(game, i, opp) << ": "
         << format_set(image.ground(), all) << " covers " << covers_text(image) << " top "
         << (top ? image.name(*top) : "none") << '\n';
    }
  }

  for (Player i = 0; i < n; ++i) {
    const ComparisonTable& table = solution.comparison_tables[i];
    const GroundSet& own = game.strategies(i);
    const GroundSet& payoffs = game.payoff_poset(i).ground();
    os << "\ncomparison table player " << i + 1 << '\n' << "  pairs:";
    if (table.pairs.empty()) os << " (none)";
    for (std::size_t c = 0; c < table.pairs.size(); ++c) {
      os << (c ? " | " : " ") << own.name(table.pairs[c].first) << " and "
         << own.name(table.pairs[c].second);
    }
    os << '\n';
    for (std::size_t r = 0; r < table.opponents.size(); ++r) {
      os << "  opponents " << opponent_label(game, i, table.opponents[r]) << ":";
      for (std::size_t c = 0; c < table.cells[r].size(); ++c) {
        const auto& cell = table.cells[r][c];
        os << (c ? " | " : " ") << payoffs.name(cell.first_payoff) << ' ' << symbol(cell.verdict)
           << ' ' << payoffs.name(cell.second_payoff);
      }
      os << '\n';
    }
  }

  for (Player i = 0; i < n; ++i) {
    const auto& d = solution.dominance[i];
    const GroundSet& own = game.strategies(i);
    os << "\ndominance player " << i + 1 << '\n'
       << "  dominant = " << index_set(own, d.dominant) << '\n'
       << "  dominated = " << index_set(own, d.dominated) << '\n'
       << "  strictly dominated = " << index_set(own, d.strictly_dominated) << '\n'
       << "  undominated = " << index_set(own, d.undominated) << '\n';
  }

  for (Player i = 0; i < n; ++i) {
    const auto& c = solution.cautious[i];
    const GroundSet& own = game.strategies(i);
    const Poset& order = game.payoff_poset(i);
    os << "\ncautious player " << i + 1 << '\n';
    for (std::size_t s = 0; s < c.security_levels.size(); ++s) {
      os << "  security " << own.name(s) << " = "
         << (c.security_levels[s] ? order.name(*c.security_levels[s]) : "none") << '\n';
    }
    os << "  P" << i + 1 << " = " << index_set(own, c.cautious) << '\n';
  }

  os << "\nbest responses\n";
  for (Player i = 0; i < n; ++i) {
    os << "  BR" << i + 1 << " = " << profile_set(game, solution.best_responses[i]) << '\n';
  }
  os << "\nNE = " << profile_set(game, solution.nash) << '\n';
  return os.str();
}

std::string push_report(std::string_view name, const DecisionModel& model) {
  std::ostringstream os;
  os << "stoch " << name << '\n' << "states = { ";
  const auto& states = model.space().states();
  for (Element s = 0; s < states.size(); ++s) {
    os << (s ? ", " : "") << states.name(s) << ": " << model.space().probabilities()[s].str();
  }
  os << " }\n";
  for (Element d = 0; d < model.decisions().size(); ++d) {
    os << "pushforward " << model.decisions().name(d) << " = "
       << distribution_text(pushforward(model, d)) << '\n';
  }

  const MeasureOrderAnalysis analysis = measure_order_analysis(model);
  const auto& classes = analysis.measures.classes;
  os << "\nmeasures = " << classes.size() << '\n';
  for (std::size_t k = 0; k < classes.size(); ++k) {
    os << "  " << analysis.order.name(k) << " = " << distribution_text(classes[k].distribution)
       << " induced by " << format_set(model.decisions(), classes[k].decisions) << '\n';
  }
  os << "environment risk only: " << yes_no(analysis.measures.environment_risk_only) << '\n';
  os << "\nmeasure order covers = " << covers_text(analysis.order) << '\n'
     << "upper semilattice: " << yes_no(analysis.profile.is_upper_semilattice) << '\n'
     << "lower semilattice: " << yes_no(analysis.profile.is_lower_semilattice) << '\n';
  if (analysis.greatest_class) {
    os << "greatest measure = " << analysis.order.name(*analysis.greatest_class) << '\n'
       << "optimal decisions = " << format_set(model.decisions(), analysis.optimal_decisions)
       << '\n';
  } else {
    os << "greatest measure = none\n" << "no optimal decision\n";
  }
  return os.str();
}

RunResult run(const Command& command, const ModelFile& model, std::string_view source_name) {
  RunResult result;
  auto fail = [&](int code, const Diagnostic& d) {
    result.exit_code = code;
    result.err += format_diagnostic(d, source_name) + '\n';
    return result;
  };
  auto missing = [&](std::string_view kind, std::string_view name) {
    return fail(kExitInputError,
                input_error("no " + std::string(kind) + " named '" + std::string(name) + "'"));
  };

  try {
    switch (command.kind) {
      case CommandKind::kCheck: {
        if (!model.find_poset(command.target)) return missing("poset", command.target);
        result.out = check_report(command.target, build_poset(model, command.target));
        break;
      }
      case CommandKind::kDot: {
        if (!model.find_poset(command.target)) return missing("poset", command.target);
        result.out = dot_export(build_poset(model, command.target));
        break;
      }
      case CommandKind::kClassify: {
        if (!model.find_poset(command.target)) return missing("poset", command.target);
        const Poset poset = build_poset(model, command.target);
        if (!command.partition) {
          result.out = classify_report(command.target, poset);
          break;
        }
        const PartitionDecl* pd = model.find_partition(*command.partition);
        if (!pd) return missing("partition", *command.partition);
        if (pd->poset != command.target) {
          return fail(kExitInputError,
                      {Diagnostic::Severity::kError, pd->pos,
                       "partition '" + pd->name + "' is declared on poset '" + pd->poset +
                           "', not '" + command.target + "'",
                       std::nullopt});
        }
        try {
          const QuotientRisk q = classify_quotient(poset, build_partition(model, pd->name));
          result.out = classify_report(command.target, poset, pd->name, q);
        } catch (const QuotientCycleError& e) {
          std::string witness;
          for (std::size_t i = 0; i < e.names().size(); ++i) witness += (i ? ", " : "") + e.names()[i];
          return fail(kExitStructural, {Diagnostic::Severity::kError, pd->pos,
                                        "partition '" + pd->name + "': " + e.what(),
                                        "cycle witness: [" + witness + "]"});
        }
        break;
      }
      case CommandKind::kSolve: {
        if (!model.find_game(command.target)) return missing("game", command.target);
        const OrdinalGame game = build_game(model, command.target);
        result.out = solve_report(command.target, game, solve(game, command.solve));
        break;
      }
      case CommandKind::kPush: {
        if (!model.find_stoch(command.target)) return missing("stoch", command.target);
        result.out = push_report(command.target, build_stoch(model, command.target));
        break;
      }
    }
  } catch (const StructuralError& e) {
    return fail(kExitStructural, e.diagnostic());
  }
  return result;
}

RunResult run_text(const Command& command, std::string_view text, std::string_view source_name) {
  ModelFile model;
  try {
    model = parse_model(text);
  } catch (const ParseError& e) {
    RunResult result;
    result.exit_code = kExitInputError;
    for (const auto& d : e.diagnostics()) result.err += format_diagnostic(d, source_name) + '\n';
    return result;
  }
  return run(command, model, source_name);
}

}  // namespace relrisk
