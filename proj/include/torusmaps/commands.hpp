#ifndef TORUSMAPS_COMMANDS_HPP
#define TORUSMAPS_COMMANDS_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "torusmaps/exactlin.hpp"

namespace torusmaps {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { Text, Json };

// Result of one CLI command, carrying both output forms. Key order and list
// orders are fixed, so identical invocations render byte-identically.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
  int exit_code = 0;
};

std::string render(const Report& report, Format format);

Mat2 parse_matrix(const std::string& csv);        // "a,b,c,d", row-major integers
Vec2Q parse_translation(const std::string& csv);  // "p/q,r/s", integers allowed

Report cmd_classify(const std::string& matrix, const std::string& translation);
Report cmd_enumerate(long genus, long max_period, long max_orbits, bool include_free);
Report cmd_conjugate(const std::string& matrix1, const std::string& translation1,
                     const std::string& matrix2, const std::string& translation2);
Report cmd_verify();

}  // namespace torusmaps

#endif
