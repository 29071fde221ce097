#pragma once

// CSV / JSON / SVG writers. Floats are printed in shortest round-trip form so
// identical inputs give byte-identical files.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace isw::cli {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::vector<double> column(std::size_t i) const;
};

// "# {json header}\n", column names, then data rows.
std::string csv_string(const nlohmann::json& header, const Table& table);
nlohmann::json table_json(const nlohmann::json& header, const Table& table);

// Polyline plot of columns ys against column x.
std::string svg_string(const Table& table, std::size_t x, const std::vector<std::size_t>& ys,
                       const std::string& title);

// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace isw::cli
