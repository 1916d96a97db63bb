// Command-line front end: verify | eval | synth | fixpoint | play.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "guardprompt/cli.hpp"
#include "guardprompt/scenario.hpp"

int main(int argc, char** argv) {
  using namespace guardprompt;

  CLI::App app{"Verify and synthesize single-question prompts for the non-binary "
               "truth-teller/liar puzzle"};
  std::string command;
  std::string scenario_path;
  std::string format = "human";
  std::vector<std::string> templates;
  cli_flags flags;

  app.add_option("command", command, "verify | eval | synth | fixpoint | play")
      ->required()
      ->check(CLI::IsMember({"verify", "eval", "synth", "fixpoint", "play"}));
  app.add_option("--scenario", scenario_path, "scenario file")->required();
  app.add_option("--format", format, "human | machine")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--max-depth", flags.max_depth, "synth: maximum prompt depth")
      ->check(CLI::PositiveNumber);
  app.add_option("--world", flags.world, "eval/fixpoint: world to evaluate");
  app.add_option("--asked-guard", flags.asked_guard, "index of the guard receiving the prompt");
  app.add_option("--template", templates, "synth: restriction template, e.g. {w,w+10} or {0,w}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::error;
  }

  flags.format = format == "machine" ? output_format::machine : output_format::human;
  try {
    for (const auto& t : templates) flags.templates.push_back(parse_template(t));
    const scenario sc = load_scenario(scenario_path);
    return run(command, sc, flags, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::error;
  }
}
