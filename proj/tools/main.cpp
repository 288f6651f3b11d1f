#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using meyerap::cli::Command;
  CLI::App app{"Exact model sets, arithmetic progressions and ap-rank certificates"};
  app.require_subcommand(1);

  Command cmd;
  std::string out;
  for (const auto& name : meyerap::cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("args", cmd.positional, "Positional arguments");
    sub->add_option("--cps", cmd.cps, "Scheme file or built-in name");
    sub->add_option("--window", cmd.window, "Window file or inline window");
    sub->add_option("--region", cmd.region, "Inline physical region");
    sub->add_option("--center", cmd.center, "Physical center y, e.g. (1/2) or (0,1)");
    sub->add_option("--expr", cmd.expr, "Meyer expression file");
    sub->add_option("--colors", cmd.colors, "Coloring file");
    sub->add_option("--points", cmd.points_out, "Write a point list file");
    sub->add_option("--length", cmd.length, "Progression length N or grid depth");
    sub->add_option("--rank-target", cmd.rank_target, "Requested progression rank");
    sub->add_option("--budget", cmd.budget, "Point budget");
    sub->add_flag("--oracle", cmd.oracle, "Cross-check with exhaustive search");
    sub->add_option("--out", out, "Write the report to a file instead of stdout");
    sub->callback([&cmd, sub] { cmd.name = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return meyerap::cli::kInputError;
  }

  const auto report = meyerap::cli::run(cmd);
  if (out.empty()) {
    std::cout << report.text();
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write '" << out << "'\n";
      return meyerap::cli::kInputError;
    }
    f << report.text();
  }
  if (report.exit_code != 0 && report.document.contains("error")) {
    std::cerr << report.document["error"]["message"].get<std::string>() << '\n';
  }
  return report.exit_code;
}
