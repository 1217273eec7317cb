#include "output.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

namespace uniqlab::cli {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

Json json_real(double v) {
  if (std::isfinite(v)) return v;
  return format_real(v);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc), columns_(header.size()) {
  if (!out_) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
  std::vector<CsvCell> cells(header.begin(), header.end());
  row(cells);
}

void CsvWriter::write_field(const std::string& field, bool first) {
  if (!first) out_ << ',';
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    out_ << field;
    return;
  }
  out_ << '"';
  for (char c : field) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
}

void CsvWriter::row(std::initializer_list<CsvCell> cells) { row(std::vector<CsvCell>(cells)); }

void CsvWriter::row(const std::vector<CsvCell>& cells) {
  if (cells.size() != columns_) {
    throw std::logic_error(fmt::format("{}: row has {} fields, header has {}", path_.string(), cells.size(), columns_));
  }
  bool first = true;
  for (const auto& cell : cells) {
    const std::string text = std::visit(
        [](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            return format_real(v);
          } else if constexpr (std::is_same_v<T, bool>) {
            return v ? "true" : "false";
          } else if constexpr (std::is_same_v<T, long long>) {
            return std::to_string(v);
          } else {
            return v;
          }
        },
        cell);
    write_field(text, first);
    first = false;
  }
  out_ << "\r\n";
  if (!out_) throw std::runtime_error(fmt::format("write failed: {}", path_.string()));
}

void Assertions::check(const std::string& name, bool passed, Json detail) {
  Json entry;
  entry["name"] = name;
  entry["passed"] = passed;
  if (!detail.empty()) entry["detail"] = std::move(detail);
  list_.push_back(std::move(entry));
  all_passed_ = all_passed_ && passed;
}

void write_summary(const std::filesystem::path& path, const std::string& command, const Json& config,
                   const Json& body, const Assertions& assertions) {
  Json doc;
  doc["schema_version"] = 1;
  doc["command"] = command;
  doc["config"] = config;
  for (const auto& [key, value] : body.items()) doc[key] = value;
  doc["assertions"] = assertions.to_json();
  doc["all_passed"] = assertions.all_passed();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error(fmt::format("write failed: {}", path.string()));
}

std::string ramp_colour(double t) {
  // Dark blue -> teal -> yellow.
  static constexpr std::array<std::array<double, 3>, 5> stops = {{{{68, 1, 84}},
                                                                  {{59, 82, 139}},
                                                                  {{33, 145, 140}},
                                                                  {{94, 201, 98}},
                                                                  {{253, 231, 37}}}};
  if (!std::isfinite(t)) t = 0.0;
  t = std::clamp(t, 0.0, 1.0) * static_cast<double>(stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(i);
  std::array<int, 3> rgb{};
  for (std::size_t c = 0; c < 3; ++c) {
    rgb[c] = static_cast<int>(std::lround(stops[i][c] + f * (stops[i + 1][c] - stops[i][c])));
  }
  return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

void write_heatmap(const std::filesystem::path& path, const Heatmap& map) {
  if (map.nx == 0 || map.ny == 0) throw std::invalid_argument("heatmap needs a non-empty grid");
  const double plot = 512.0;
  const double margin = 56.0;
  const double legend_height = map.legend.empty() ? 0.0 : 24.0;
  const double cw = plot / static_cast<double>(map.nx);
  const double ch = plot / static_cast<double>(map.ny);
  const double width = plot + 2 * margin;
  const double height = plot + 2 * margin + legend_height;
  auto px = [&](double gx) { return margin + gx * cw; };
  auto py = [&](double gy) { return margin + plot - gy * ch; };

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
      width, height, width, height);
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out << fmt::format("<text x=\"{:.1f}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
                     width / 2, map.title);
  out << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t iy = 0; iy < map.ny; ++iy) {
    std::size_t ix = 0;
    while (ix < map.nx) {
      const std::string c = map.colour(ix, iy);
      std::size_t end = ix + 1;
      while (end < map.nx && map.colour(end, iy) == c) ++end;
      out << fmt::format("<rect x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" height=\"{:.3f}\" fill=\"{}\"/>\n", px(double(ix)),
                         py(double(iy + 1)), cw * double(end - ix), ch, c);
      ix = end;
    }
  }
  out << "</g>\n";
  for (const auto& s : map.overlay) {
    out << fmt::format(
        "<line x1=\"{:.3f}\" y1=\"{:.3f}\" x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"#d62728\" stroke-width=\"2\"/>\n",
        px(s.x0), py(s.y0), px(s.x1), py(s.y1));
  }
  out << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"none\" stroke=\"#000000\"/>\n",
                     margin, margin, plot, plot);
  for (int t = 0; t <= 4; ++t) {
    const double v = t / 4.0;
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">{:.2f}</text>\n",
                       margin + v * plot, margin + plot + 16, v);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">{:.2f}</text>\n",
                       margin - 6, margin + plot - v * plot + 4, v);
  }
  out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">{}</text>\n",
                     margin + plot / 2, margin + plot + 36, map.x_label);
  out << fmt::format(
      "<text x=\"16\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1f})\">{}</text>\n",
      margin + plot / 2, margin + plot / 2, map.y_label);
  double lx = margin;
  const double ly = margin + plot + 48;
  for (const auto& [colour, label] : map.legend) {
    out << fmt::format("<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"12\" height=\"12\" fill=\"{}\" stroke=\"#000000\"/>\n", lx, ly,
                       colour);
    out << fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n", lx + 16,
                       ly + 10, label);
    lx += 24 + 7.0 * static_cast<double>(label.size());
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error(fmt::format("write failed: {}", path.string()));
}

std::filesystem::path prepare_output_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(fmt::format("cannot create output directory {}: {}", dir.string(), ec.message()));
  return dir;
}

}  // namespace uniqlab::cli
