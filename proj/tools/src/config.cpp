#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace polgeom::cli {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool try_parse_double(std::string_view text, double& value) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* begin = t.data();
  if (*begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
  return ec == std::errc() && ptr == t.data() + t.size() && std::isfinite(value);
}

}  // namespace

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw InputError(path + ":" + std::to_string(number) + ": expected key=value");
    }
    std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    if (key.empty()) throw InputError(path + ":" + std::to_string(number) + ": empty key");
    values[key] = trim(std::string_view(body).substr(eq + 1));
  }
  return values;
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  if (!try_parse_double(text, value)) {
    throw InputError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

long parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw InputError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
  std::vector<double> values;
  for (const auto& part : split(text, ',')) values.push_back(parse_double(part, what));
  return values;
}

NumericRows read_numeric_csv(std::istream& in, std::string_view source) {
  NumericRows out;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = split(body, ',');
    double probe = 0.0;
    if (first && !try_parse_double(fields.front(), probe)) {
      out.header = std::move(fields);
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    row.reserve(fields.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      double value = 0.0;
      if (!try_parse_double(fields[c], value)) {
        throw InputError(std::string(source) + ": row at line " + std::to_string(number) +
                         ", column " + std::to_string(c + 1) + ": not a number: '" + fields[c] +
                         "'");
      }
      row.push_back(value);
    }
    if (!out.rows.empty() && row.size() != out.rows.front().size()) {
      throw InputError(std::string(source) + ": row at line " + std::to_string(number) +
                       " has " + std::to_string(row.size()) + " fields, expected " +
                       std::to_string(out.rows.front().size()));
    }
    out.rows.push_back(std::move(row));
    out.lines.push_back(number);
  }
  return out;
}

}  // namespace polgeom::cli
