#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "multlab/commands.hpp"

namespace {

int write_json(const std::string& path, const nlohmann::ordered_json& doc) {
  if (path.empty()) return 0;
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 2;
  }
  out << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multiplicity computations in local rings"};
  app.set_version_flag("--version", std::string("multlab report schema ") +
                                        std::to_string(multlab::kReportSchema));

  std::string command;
  std::string problem_path;
  std::string json_path;
  std::string field;
  std::uint64_t seed = 0;
  bool timing = false;
  bool quiet = false;
  std::vector<std::string> set_options;
  std::vector<std::string> q_override;
  std::vector<std::string> a_override;

  app.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(multlab::command_names()));
  app.add_option("--problem,-p", problem_path, "Problem file")->required()->check(CLI::ExistingFile);
  app.add_option("--json,-j", json_path, "Write the structured report here");
  app.add_option("--seed", seed, "Seed echoed into the report");
  app.add_option("--field", field, "Field override: fp:<prime> or rational");
  app.add_option("--set", set_options, "Option override key=value (repeatable)");
  app.add_option("--q", q_override, "Replace the generators of q (repeatable)");
  app.add_option("--a", a_override, "Replace the sequence a (repeatable)");
  app.add_flag("--timing", timing, "Include wall-clock time in the report");
  app.add_flag("--quiet", quiet, "No text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    multlab::ProblemFile problem = multlab::load_problem(problem_path);
    for (const auto& kv : set_options) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw multlab::InputError("--set expects key=value, got " + kv);
      // Reparse through the file syntax so validation matches.
      const auto one = multlab::parse_problem("[ring]\nkind = \"poly-local\"\nvars = [\"x\"]\n[options]\n" +
                                              kv.substr(0, eq) + " = " + kv.substr(eq + 1) + "\n");
      for (const auto& [k, v] : one.options) problem.options[k] = v;
    }
    if (!q_override.empty()) problem.q = q_override;
    if (!a_override.empty()) problem.a = a_override;

    multlab::RunOptions options;
    if (!field.empty()) options.field = field;
    options.seed = seed;
    options.timing = timing;
    const multlab::Report report = multlab::run(command, problem, options);
    if (!quiet) std::cout << multlab::render_text(report.doc);
    if (const int rc = write_json(json_path, report.doc)) return rc;
    return report.exit_code;
  } catch (const multlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto doc = multlab::error_report(command, e);
    write_json(json_path, doc);
    return multlab::exit_code_for(e);
  }
}
