#include "isw/cli/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>
#include <tuple>

namespace isw::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("Table::add_row: width mismatch");
  }
  rows.push_back(std::move(row));
}

std::vector<double> Table::column(std::size_t i) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(i));
  return out;
}

std::string csv_string(const nlohmann::json& header, const Table& table) {
  std::string out = "# " + header.dump() + "\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json table_json(const nlohmann::json& header, const Table& table) {
  nlohmann::json j;
  j["meta"] = header;
  j["columns"] = table.columns;
  j["rows"] = table.rows;
  return j;
}

std::string svg_string(const Table& table, std::size_t x, const std::vector<std::size_t>& ys,
                       const std::string& title) {
  constexpr double kW = 800, kH = 500, kPad = 50;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd"};
  const auto xs = table.column(x);
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!xs.empty()) {
    std::tie(xlo, xhi) = [&] {
      const auto [a, b] = std::minmax_element(xs.begin(), xs.end());
      return std::pair{*a, *b};
    }();
    ylo = std::numeric_limits<double>::infinity();
    yhi = -ylo;
    for (auto c : ys) {
      for (double v : table.column(c)) {
        if (std::isfinite(v)) {
          ylo = std::min(ylo, v);
          yhi = std::max(yhi, v);
        }
      }
    }
    if (!std::isfinite(ylo)) ylo = 0, yhi = 1;
  }
  if (xhi == xlo) xhi = xlo + 1;
  if (yhi == ylo) yhi = ylo + 1, ylo -= 1;
  auto px = [&](double v) { return kPad + (v - xlo) / (xhi - xlo) * (kW - 2 * kPad); };
  auto py = [&](double v) { return kH - kPad - (v - ylo) / (yhi - ylo) * (kH - 2 * kPad); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kW << ' ' << kH
    << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    << "<text x=\"" << kW / 2 << "\" y=\"25\" text-anchor=\"middle\" font-size=\"16\">" << title
    << "</text>\n<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kW - 2 * kPad
    << "\" height=\"" << kH - 2 * kPad << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const auto col = table.column(ys[k]);
    s << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kColors[k % 5]
      << "\" points=\"";
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (!std::isfinite(col[i])) continue;
      s << format_double(px(xs[i])) << ',' << format_double(py(col[i])) << ' ';
    }
    s << "\"/>\n<text x=\"" << kW - kPad - 5 << "\" y=\"" << kPad + 18 * (k + 1)
      << "\" text-anchor=\"end\" font-size=\"13\" fill=\"" << kColors[k % 5] << "\">"
      << table.columns[ys[k]] << "</text>\n";
  }
  s << "<text x=\"" << kPad << "\" y=\"" << kH - 15 << "\" font-size=\"12\">"
    << table.columns[x] << " [" << format_double(xlo) << ", " << format_double(xhi)
    << "]</text>\n<text x=\"5\" y=\"" << kPad - 8 << "\" font-size=\"12\">y ["
    << format_double(ylo) << ", " << format_double(yhi) << "]</text>\n</svg>\n";
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << content;
  f.close();
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace isw::cli
