#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mdual/mdual.h"

namespace {

int print_owned(mdual_status s, char* text, std::ostream& os) {
  if (s != MDUAL_OK) {
    std::cerr << "mdual: " << mdual_last_error() << "\n";
    return 1;
  }
  os << text;
  mdual_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metaplectic dual root data of split reductive groups"};
  app.require_subcommand(0, 1);

  bool catalog = false;
  app.add_flag("--catalog", catalog, "List built-in groups and their coordinates");

  std::string spec_path;
  std::string verify = "none";
  std::string format = "json";
  CLI::App* compute = app.add_subcommand("compute", "Compute the dual datum of a spec file");
  compute->add_option("spec", spec_path, "Spec file, or - for stdin")->required();
  compute->add_option("--verify", verify, "Run checks: fast (default when given) or full")
      ->expected(0, 1)
      ->default_str("fast")
      ->check(CLI::IsMember({"none", "fast", "full"}));
  compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "human"}));

  CLI11_PARSE(app, argc, argv);

  if (catalog) {
    char* text = nullptr;
    const mdual_status s = mdual_catalog(&text);
    return print_owned(s, text, std::cout);
  }
  if (!compute->parsed()) {
    std::cerr << app.help();
    return 1;
  }
  if (compute->count("--verify") > 0 && verify.empty()) verify = "fast";

  std::string spec;
  if (spec_path == "-") {
    spec.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(spec_path);
    if (!in) {
      std::cerr << "mdual: cannot open '" << spec_path << "'\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    spec = ss.str();
  }

  mdual_datum* datum = nullptr;
  if (mdual_datum_from_spec(spec.c_str(), &datum) != MDUAL_OK) {
    std::cerr << "mdual: " << (spec_path == "-" ? "<stdin>" : spec_path) << ": "
              << mdual_last_error() << "\n";
    return 1;
  }
  const mdual_verify level = verify == "full"   ? MDUAL_VERIFY_FULL
                             : verify == "fast" ? MDUAL_VERIFY_FAST
                                                : MDUAL_VERIFY_NONE;
  char* text = nullptr;
  int failed = 0;
  const mdual_status s = mdual_report(datum, level,
                                      format == "human" ? MDUAL_FORMAT_HUMAN : MDUAL_FORMAT_JSON,
                                      &text, &failed);
  mdual_datum_free(datum);
  if (print_owned(s, text, std::cout) != 0) return 1;
  if (failed > 0) {
    std::cerr << "mdual: " << failed << " check(s) failed\n";
    return 2;
  }
  return 0;
}
