// Python bindings. Elements, strategies and decisions cross the boundary by
// name; exact probabilities become fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relrisk/report.hpp"

namespace py = pybind11;
using namespace relrisk;

namespace {

using Names = std::vector<std::string>;

std::optional<std::string> name_or_none(const Poset& p, std::optional<Element> e) {
  if (!e) return std::nullopt;
  return p.name(*e);
}

Names names(const GroundSet& g, const ElementSet& set) { return g.names_of(set); }

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.str());
}

// Accepts Fraction, int or a decimal string such as "0.25".
Rational rational(py::handle value) {
  const std::string text = py::str(value).cast<std::string>();
  if (text.find('.') != std::string::npos) return parse_decimal(text);
  return Rational(text);
}

std::string comparison_name(Comparison c) {
  switch (c) {
    case Comparison::kLess: return "<";
    case Comparison::kGreater: return ">";
    case Comparison::kEqual: return "=";
    case Comparison::kIncomparable: return "?";
  }
  return "?";
}

Names covers(const Poset& p) {
  Names out;
  for (auto [a, b] : p.covers().pairs()) out.push_back(p.name(a) + "<" + p.name(b));
  return out;
}

py::dict profile_dict(const Poset& p) {
  const StructureProfile s = structure_profile(p);
  py::dict d;
  d["upper_semilattice"] = s.is_upper_semilattice;
  d["lower_semilattice"] = s.is_lower_semilattice;
  d["total_order"] = s.is_total_order;
  d["greatest"] = name_or_none(p, s.greatest);
  d["least"] = name_or_none(p, s.least);
  d["maximal"] = names(p.ground(), s.maximal_set);
  d["minimal"] = names(p.ground(), s.minimal_set);
  return d;
}

py::dict classification_dict(const Poset& p, const RiskClassification& r) {
  py::dict d;
  d["kind"] = std::string(to_string(r.kind));
  d["target"] = names(p.ground(), r.target_set);
  Names findings;
  for (const auto& f : r.diagnostics) findings.push_back(f.message);
  d["findings"] = findings;
  return d;
}

Names profile_labels(const OrdinalGame& g, const std::vector<Profile>& ps) {
  Names out;
  for (const auto& p : ps) out.push_back(profile_label(g, p));
  return out;
}

Names strategy_names(const OrdinalGame& g, Player i, const std::vector<std::size_t>& ss) {
  Names out;
  for (auto s : ss) out.push_back(g.strategies(i).name(s));
  return out;
}

py::dict solve_dict(const OrdinalGame& g, bool maximal) {
  SolveOptions options;
  if (maximal) options.cautious_rule = CautiousRule::kMaximal;
  const SolutionReport s = solve(g, options);
  py::list players;
  for (Player i = 0; i < g.num_players(); ++i) {
    const Poset& order = g.payoff_poset(i);
    py::dict p;
    p["best_responses"] = profile_labels(g, s.best_responses[i]);
    p["dominant"] = strategy_names(g, i, s.dominance[i].dominant);
    p["dominated"] = strategy_names(g, i, s.dominance[i].dominated);
    p["strictly_dominated"] = strategy_names(g, i, s.dominance[i].strictly_dominated);
    p["cautious"] = strategy_names(g, i, s.cautious[i].cautious);
    py::dict security;
    for (std::size_t z = 0; z < s.cautious[i].security_levels.size(); ++z) {
      security[py::str(g.strategies(i).name(z))] = name_or_none(order, s.cautious[i].security_levels[z]);
    }
    p["security_levels"] = security;
    Names cells;
    for (const auto& row : s.comparison_tables[i].cells) {
      for (const auto& cell : row) {
        cells.push_back(order.name(cell.first_payoff) + comparison_name(cell.verdict) +
                        order.name(cell.second_payoff));
      }
    }
    p["comparisons"] = cells;
    players.append(p);
  }
  py::dict d;
  d["players"] = players;
  d["nash"] = profile_labels(g, s.nash);
  return d;
}

OutcomeDistribution distribution(const Poset& order, const py::dict& mass) {
  std::vector<Rational> m(order.size());
  for (auto [key, value] : mass) m.at(order.at(key.cast<std::string>())) = rational(value);
  return OutcomeDistribution(order.ground(), std::move(m));
}

py::dict distribution_dict(const OutcomeDistribution& d) {
  py::dict out;
  for (Element e = 0; e < d.outcomes().size(); ++e) {
    out[py::str(d.outcomes().name(e))] = fraction(d.mass(e));
  }
  return out;
}

CommandKind command_kind(const std::string& name) {
  if (name == "check") return CommandKind::kCheck;
  if (name == "classify") return CommandKind::kClassify;
  if (name == "solve") return CommandKind::kSolve;
  if (name == "push") return CommandKind::kPush;
  if (name == "dot") return CommandKind::kDot;
  throw py::value_error("unknown command '" + name + "'");
}

Names decl_names(const auto& decls) {
  Names out;
  for (const auto& d : decls) out.push_back(d.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Partially ordered outcomes, risk classification and ordinal games";

  auto order_error = py::register_exception<OrderError>(m, "OrderError", PyExc_ValueError);
  py::register_exception<CycleError>(m, "CycleError", order_error);
  py::register_exception<QuotientCycleError>(m, "QuotientCycleError", order_error);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<GameError>(m, "GameError", PyExc_ValueError);
  py::register_exception<ProbabilityError>(m, "ProbabilityError", PyExc_ValueError);

  py::class_<Poset>(m, "Poset")
      .def(py::init([](Names elements, std::vector<std::pair<std::string, std::string>> less) {
             return make_poset(std::move(elements), less);
           }),
           py::arg("elements"), py::arg("less") = std::vector<std::pair<std::string, std::string>>{})
      .def_property_readonly("elements", [](const Poset& p) { return p.ground().names(); })
      .def("__len__", &Poset::size)
      .def("less", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.less(p.at(a), p.at(b));
      })
      .def("leq", [](const Poset& p, const std::string& a, const std::string& b) {
        return p.leq(p.at(a), p.at(b));
      })
      .def("covers", &covers, "Hasse diagram edges as 'a<b' strings")
      .def("join", [](const Poset& p, const std::string& a, const std::string& b) {
        return name_or_none(p, join(p, p.at(a), p.at(b)));
      })
      .def("meet", [](const Poset& p, const std::string& a, const std::string& b) {
        return name_or_none(p, meet(p, p.at(a), p.at(b)));
      })
      .def("profile", &profile_dict)
      .def("classify", [](const Poset& p) { return classification_dict(p, classify(p)); })
      .def("quotient", [](const Poset& p, const std::vector<Names>& blocks) {
        std::vector<ElementSet> sets;
        for (const auto& block : blocks) {
          ElementSet s;
          for (const auto& name : block) s.push_back(p.at(name));
          sets.push_back(std::move(s));
        }
        return quotient(p, Partition(p.ground(), std::move(sets)));
      })
      .def("dot", &dot_export)
      .def("__eq__", [](const Poset& a, const Poset& b) { return a == b; })
      .def("__repr__", [](const Poset& p) {
        return "Poset(" + format_set(p.ground(), [&] {
                 ElementSet all(p.size());
                 for (Element e = 0; e < p.size(); ++e) all[e] = e;
                 return all;
               }()) + ")";
      });

  py::class_<OrdinalGame>(m, "Game")
      .def_property_readonly("players", &OrdinalGame::num_players)
      .def("strategies", [](const OrdinalGame& g, Player i) { return g.strategies(i).names(); })
      .def("payoff_poset", &OrdinalGame::payoff_poset, py::arg("player"))
      .def("solve", &solve_dict, py::arg("maximal_cautious") = false);

  py::class_<DecisionModel>(m, "DecisionModel")
      .def_property_readonly("decisions", [](const DecisionModel& d) { return d.decisions().names(); })
      .def("pushforward", [](const DecisionModel& d, const std::string& decision) {
        return distribution_dict(pushforward(d, decision));
      })
      .def("optimal_decisions", [](const DecisionModel& d) {
        const auto a = measure_order_analysis(d);
        return names(d.decisions(), a.optimal_decisions);
      });

  py::class_<ModelFile>(m, "Model")
      .def_property_readonly("posets", [](const ModelFile& f) { return decl_names(f.posets); })
      .def_property_readonly("partitions", [](const ModelFile& f) { return decl_names(f.partitions); })
      .def_property_readonly("games", [](const ModelFile& f) { return decl_names(f.games); })
      .def_property_readonly("stochs", [](const ModelFile& f) { return decl_names(f.stochs); })
      .def("poset", [](const ModelFile& f, const std::string& n) { return build_poset(f, n); })
      .def("game", [](const ModelFile& f, const std::string& n) { return build_game(f, n); })
      .def("stoch", [](const ModelFile& f, const std::string& n) { return build_stoch(f, n); })
      .def("classify_quotient", [](const ModelFile& f, const std::string& poset, const std::string& partition) {
        const QuotientRisk q = classify_quotient(build_poset(f, poset), build_partition(f, partition));
        py::dict d = classification_dict(q.quotient, q.classification);
        d["classes"] = q.quotient.ground().names();
        return d;
      })
      .def("serialize", &serialize)
      .def("__eq__", &same_model);

  m.def("parse_model", [](const std::string& text) { return parse_model(text); }, py::arg("text"));

  m.def("dominance_lift",
        [](const Poset& order, const py::dict& p, const py::dict& q) {
          return comparison_name(dominance_lift(order, distribution(order, p), distribution(order, q)));
        },
        py::arg("order"), py::arg("p"), py::arg("q"),
        "Compare two outcome distributions ('<', '>', '=' or '?'). Masses are "
        "Fractions, ints or decimal strings.");

  m.def("run",
        [](const std::string& command, const std::string& target, const std::string& text,
           std::optional<std::string> partition, bool maximal_cautious, const std::string& source) {
          Command c;
          c.kind = command_kind(command);
          c.target = target;
          c.partition = std::move(partition);
          if (maximal_cautious) c.solve.cautious_rule = CautiousRule::kMaximal;
          const RunResult r = run_text(c, text, source);
          return py::make_tuple(r.exit_code, r.out, r.err);
        },
        py::arg("command"), py::arg("target"), py::arg("text"), py::arg("partition") = py::none(),
        py::arg("maximal_cautious") = false, py::arg("source") = "<input>",
        "Run a riskctl command on model text; returns (exit_code, stdout, stderr).");
}
