#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace uniqlab::cli {

using Json = nlohmann::ordered_json;

/// 17 significant digits; non-finite values as inf, -inf, nan.
std::string format_real(double v);

/// Finite doubles as numbers, the rest as format_real strings.
Json json_real(double v);

using CsvCell = std::variant<double, long long, bool, std::string>;

/// RFC 4180 writer: CRLF records, quoted fields where needed, header first.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
  void row(std::initializer_list<CsvCell> cells);
  void row(const std::vector<CsvCell>& cells);
  const std::filesystem::path& path() const { return path_; }

 private:
  void write_field(const std::string& field, bool first);

  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t columns_;
};

/// Collects named pass/fail checks for the JSON summary.
class Assertions {
 public:
  void check(const std::string& name, bool passed, Json detail = Json::object());
  bool all_passed() const { return all_passed_; }
  Json to_json() const { return list_; }

 private:
  Json list_ = Json::array();
  bool all_passed_ = true;
};

/// Writes {schema_version, command, config, <body>, assertions, all_passed}.
void write_summary(const std::filesystem::path& path, const std::string& command, const Json& config,
                   const Json& body, const Assertions& assertions);

struct Segment {
  double x0, y0, x1, y1;  // grid units
};

struct Heatmap {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::function<std::string(std::size_t, std::size_t)> colour;  // (ix, iy), iy = 0 at the bottom
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Segment> overlay;
  std::vector<std::pair<std::string, std::string>> legend;  // colour, label
};

/// Self-contained SVG; equal-colour runs in each row become one rect.
void write_heatmap(const std::filesystem::path& path, const Heatmap& map);

/// Colour ramp for t in [0, 1].
std::string ramp_colour(double t);

std::filesystem::path prepare_output_dir(const std::filesystem::path& dir);

}  // namespace uniqlab::cli
