// gg: verify generalized complex and contact structures described in a .ggm model file.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gg/commands.hpp"
#include "gg/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gg::Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const gg::Report& report, bool json) {
  if (json)
    std::cout << gg::to_json(report);
  else if (report.exit_code == gg::exit_input_error)
    std::cerr << "gg " << report.command << ": error: " << report.error << "\n";
  else
    std::cout << gg::to_text(report);
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of generalized complex and contact structures"};
  app.set_version_flag("--version", gg::version);

  std::string command;
  std::string file;
  gg::CommandArgs args;
  bool json = false;

  std::string commands;
  for (const auto& c : gg::command_names()) commands += (commands.empty() ? "" : "|") + c;
  app.add_option("command", command, commands)->required()->check(CLI::IsMember(gg::command_names()));
  app.add_option("file", file, "model file (.ggm)")->required();
  app.add_option("-s,--subject", args.subject, "structure, product or manifold to act on");
  app.add_option("-a", args.a, "first section (bracket, nijenhuis)");
  app.add_option("-b", args.b, "second section (bracket, nijenhuis)");
  app.add_flag("--json", json, "print the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gg::exit_input_error;
  }

  try {
    args.seed = gg::seed_from_env();
    gg::Model model;
    try {
      model = gg::parse_model(read_file(file));
    } catch (const gg::ParseError& e) {
      throw gg::Error(file + ": " + e.what());
    }
    return emit(gg::run(command, model, args), json);
  } catch (const gg::Error& e) {
    return emit(gg::error_report(command, args.subject, e.what()), json);
  }
}
