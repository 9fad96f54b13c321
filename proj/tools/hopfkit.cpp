#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hopfkit/runner.hpp"

namespace {

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Hopf modules, Galois extensions and Hilbert 90"};
  std::string task, input, builtin, objects, format = "text";
  bool timing = false, serial = false, list = false;
  app.add_option("task", task, "check | antipode | galois | fthm | h1 | operators | coring");
  auto* in_opt = app.add_option("--input", input, "JSON input document");
  auto* bi_opt = app.add_option("--builtin", builtin, "name of a bundled document");
  in_opt->excludes(bi_opt);
  app.add_option("--objects", objects, "comma-separated object names");
  app.add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--timing", timing, "report per-result wall time");
  app.add_flag("--serial", serial, "run batch verification on one thread");
  app.add_flag("--list-builtins", list, "print bundled document names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& n : hopfkit::builtin_names()) std::cout << n << "\n";
    return 0;
  }
  if (task.empty() || (input.empty() && builtin.empty())) {
    std::cerr << "usage: hopfkit <task> --input <file> | --builtin <name> [--objects a,b] [--format text|machine]\n";
    return 2;
  }

  hopfkit::Report report;
  try {
    hopfkit::Document doc;
    if (!builtin.empty()) {
      doc = hopfkit::load_builtin(builtin);
    } else {
      std::ifstream f(input);
      if (!f) {
        std::cerr << "error: cannot read " << input << "\n";
        return 2;
      }
      std::stringstream buf;
      buf << f.rdbuf();
      doc = hopfkit::parse_document(buf.str(), input);
    }
    hopfkit::RunOptions opt;
    if (!objects.empty()) opt.objects = split_names(objects);
    opt.timing = timing;
    opt.mode = serial ? hopfkit::BatchMode::Serial : hopfkit::BatchMode::Parallel;
    report = hopfkit::run(doc, task, opt);
  } catch (const hopfkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << (format == "machine" ? report.machine() : report.text());
  return report.exit_code();
}
