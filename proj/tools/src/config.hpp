#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polgeom::cli {

/// Malformed user input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "key = value" lines. Blank lines and lines starting with '#' are skipped.
std::map<std::string, std::string> read_config_file(const std::string& path);

double parse_double(std::string_view text, std::string_view what);
long parse_int(std::string_view text, std::string_view what);
/// Comma-separated numbers, e.g. "0.4,0.45".
std::vector<double> parse_list(std::string_view text, std::string_view what);

struct NumericRows {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  /// 1-based source line of each row.
  std::vector<std::size_t> lines;
};

/// Comma-separated numeric rows. '#' lines and blank lines are skipped; the first
/// remaining line is treated as a header when its first field is not a number.
/// Errors name the offending line.
NumericRows read_numeric_csv(std::istream& in, std::string_view source);

std::string trim(std::string_view text);

}  // namespace polgeom::cli
