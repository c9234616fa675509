#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torusmaps/commands.hpp"

namespace {

torusmaps::Format parse_format(const std::string& s) {
  if (s == "text") return torusmaps::Format::Text;
  if (s == "json") return torusmaps::Format::Json;
  throw torusmaps::ParseError("unknown format '" + s + "' (expected text or json)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of periodic maps of the 2-torus"};
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format: text or json")
        ->capture_default_str();
  };

  std::string matrix, translation = "0,0";
  auto* classify = app.add_subcommand(
      "classify", "classify the affine torus map x -> Ax + v (mod Z^2)");
  add_format(classify);
  classify->add_option("--matrix", matrix, "matrix A as a,b,c,d (row-major)")
      ->required();
  classify->add_option("--translation", translation, "translation v as p/q,r/s")
      ->capture_default_str();

  long genus = 1, max_period = 12, max_orbits = 6;
  bool include_free = false;
  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate admissible complete characteristics");
  add_format(enumerate);
  enumerate->add_option("--genus", genus, "genus of the surface")->capture_default_str();
  enumerate->add_option("--max-period", max_period, "largest period to consider")
      ->capture_default_str();
  enumerate->add_option("--max-orbits", max_orbits, "largest orbit count to consider")
      ->capture_default_str();
  enumerate->add_flag("--include-free", include_free,
                      "also list free characteristics (no lower-period orbits)");

  std::string matrix1, translation1 = "0,0", matrix2, translation2 = "0,0";
  auto* conjugate = app.add_subcommand(
      "conjugate", "decide orientation preserving topological conjugacy of two maps");
  add_format(conjugate);
  conjugate->add_option("--matrix1", matrix1, "first matrix as a,b,c,d")->required();
  conjugate->add_option("--translation1", translation1, "first translation")
      ->capture_default_str();
  conjugate->add_option("--matrix2", matrix2, "second matrix as a,b,c,d")->required();
  conjugate->add_option("--translation2", translation2, "second translation")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the built-in self-check battery");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    const torusmaps::Format fmt = parse_format(format);
    torusmaps::Report report;
    if (classify->parsed()) {
      report = torusmaps::cmd_classify(matrix, translation);
    } else if (enumerate->parsed()) {
      report = torusmaps::cmd_enumerate(genus, max_period, max_orbits, include_free);
    } else if (conjugate->parsed()) {
      report = torusmaps::cmd_conjugate(matrix1, translation1, matrix2, translation2);
    } else if (verify->parsed()) {
      report = torusmaps::cmd_verify();
    }
    std::cout << torusmaps::render(report, fmt);
    return report.exit_code;
  } catch (const torusmaps::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
