// riskctl: analyses of relational risk models written in the model language.
//
//   riskctl check    --poset N               FILE
//   riskctl classify --poset N [--partition P] FILE
//   riskctl solve    --game N [--maximal-cautious] FILE
//   riskctl push     --stoch N               FILE
//   riskctl dot      --poset N               FILE
//
// FILE may be "-" for standard input. Exit codes: 0 success, 1 input or
// parse error, 2 structural violation (cyclic order).

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "relrisk/report.hpp"

namespace {

bool read_source(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  text = buffer.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relational risk analysis of preference orders, ordinal games and "
               "finite stochastic decision models"};
  app.require_subcommand(1);

  relrisk::Command command;
  std::string file;
  bool maximal_cautious = false;

  auto add = [&](const char* name, const char* help, const char* target_flag,
                 relrisk::CommandKind kind) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option(target_flag, command.target, "Name of the object to analyse")->required();
    sub->add_option("file", file, "Model file, or - for standard input")->required();
    sub->callback([&command, kind] { command.kind = kind; });
    return sub;
  };
  add("check", "Validate a poset and print its structure", "--poset", relrisk::CommandKind::kCheck);
  CLI::App* classify = add("classify", "Classify the risk situation of an outcome order", "--poset",
                           relrisk::CommandKind::kClassify);
  classify->add_option_function<std::string>(
      "--partition", [&command](const std::string& p) { command.partition = p; },
      "Indifference partition to quotient by first");
  CLI::App* solve = add("solve", "Solve an ordinal game", "--game", relrisk::CommandKind::kSolve);
  solve->add_flag("--maximal-cautious", maximal_cautious,
                  "Cautious strategies use maximal instead of greatest security levels");
  add("push", "Pushforward measures of a stochastic decision model", "--stoch",
      relrisk::CommandKind::kPush);
  add("dot", "Emit the Hasse diagram of a poset as DOT", "--poset", relrisk::CommandKind::kDot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? relrisk::kExitOk : relrisk::kExitInputError;
  }
  if (maximal_cautious) command.solve.cautious_rule = relrisk::CautiousRule::kMaximal;

  std::string text;
  if (!read_source(file, text)) {
    std::cerr << file << ": error: cannot read file\n";
    return relrisk::kExitInputError;
  }
  const relrisk::RunResult result =
      relrisk::run_text(command, text, file == "-" ? "<stdin>" : file);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
