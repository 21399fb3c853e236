#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polgeom::cli {

/// An empty cell renders as nothing in CSV and as null in JSON.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Summary facts: "# key=value" footer lines in CSV, top-level members in JSON.
  std::vector<std::pair<std::string, Cell>> notes;

  void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
  void note(std::string key, Cell value) { notes.emplace_back(std::move(key), std::move(value)); }
};

struct RenderOptions {
  bool header_comment = false;
  std::string version;
};

void write_csv(std::ostream& os, const Table& table, const RenderOptions& options);
void write_json(std::ostream& os, const Table& table, const RenderOptions& options);

}  // namespace polgeom::cli
