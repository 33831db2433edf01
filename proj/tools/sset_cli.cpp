// Runs a script of set definitions and commands, printing one JSON object per
// command. Exit status is 0 iff no command failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "sset/script.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite simplicial sets: regularity checks and internal Hom"};
  std::string file;
  bool pretty = false;
  sset::RunOptions opts;
  app.add_option("script", file, "Script file (standard input when omitted or '-')");
  app.add_flag("--pretty", pretty, "Render results as text instead of JSON lines");
  app.add_option("--seed", opts.seed, "Seed for the corpus command");
  app.add_option("--max-degree", opts.max_degree, "Cap for commands that omit one");
  app.add_flag("--dump-hom", opts.dump_hom, "Include path assignments in homcount output");
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  sset::Script script;
  try {
    script = sset::parse_script(text);
  } catch (const sset::ParseError& e) {
    std::cerr << (file.empty() ? std::string("<stdin>") : file) << ": " << e.what() << "\n";
    return 2;
  }

  const sset::RunReport report = sset::run(script, opts);
  for (const auto& r : report.results) {
    if (pretty)
      std::cout << sset::render_pretty(r);
    else
      std::cout << r.dump(-1, ' ', false) << "\n";
  }
  return report.ok ? 0 : 1;
}
