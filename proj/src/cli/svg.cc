// Copyright 2026 The alphagrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphagrad/cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "alphagrad/json_params.h"

namespace alphagrad::cli {
namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool log = false;

  double Map(double v) const { return log ? std::log10(v) : v; }
  void Include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, Map(v));
    hi = std::max(hi, Map(v));
  }
  void Finish() {
    if (!(lo <= hi)) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  double Fraction(double v) const { return (Map(v) - lo) / (hi - lo); }
};

int Column(const ResultTable& table, const std::string& name) {
  const int c = table.ColumnIndex(name);
  if (c < 0) throw ConfigError("plot: no column named '" + name + "'", name);
  return c;
}

}  // namespace

PlotSpec ParsePlotSpec(const nlohmann::json& doc) {
  ParamReader r(doc, "plot");
  PlotSpec spec;
  spec.x = r.String("x", "");
  if (spec.x.empty()) throw ConfigError("plot.x is required", "x");
  const nlohmann::json series = r.Raw("series");
  if (!series.is_array() || series.empty()) {
    throw ConfigError("plot.series must be a non-empty array", "series");
  }
  for (const auto& s : series) {
    if (!s.is_string()) throw ConfigError("plot.series: expected names", "series");
    spec.series.push_back(s.get<std::string>());
  }
  spec.log_x = r.Bool("log_x", false);
  spec.log_y = r.Bool("log_y", false);
  const nlohmann::json scale = r.Raw("scale");
  if (!scale.is_null()) {
    ParamReader sr(scale, "plot.scale");
    for (const auto& [name, value] : scale.items()) {
      spec.scale[name] = sr.Number(name, 1.0);
    }
  }
  spec.title = r.String("title", "");
  spec.width = r.Integer("width", spec.width);
  spec.height = r.Integer("height", spec.height);
  r.Finish();
  if (spec.width < 100 || spec.height < 100) {
    throw ConfigError("plot size must be at least 100 px", "width");
  }
  return spec;
}

std::string EmitSvg(const ResultTable& table, const PlotSpec& spec) {
  const int xc = Column(table, spec.x);
  std::vector<int> cols;
  for (const auto& s : spec.series) cols.push_back(Column(table, s));

  auto scaled = [&](std::size_t k, double v) {
    const auto it = spec.scale.find(spec.series[k]);
    return it == spec.scale.end() ? v : v * it->second;
  };

  Axis ax{.log = spec.log_x};
  Axis ay{.log = spec.log_y};
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const double x = table.rows[r][xc];
    if (spec.log_x && !(x > 0)) {
      throw ConfigError("plot: nonpositive value on log x axis at row " +
                            std::to_string(r),
                        spec.x);
    }
    ax.Include(x);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const double y = scaled(k, table.rows[r][cols[k]]);
      if (spec.log_y && !(y > 0)) {
        throw ConfigError("plot: nonpositive value on log y axis at row " +
                              std::to_string(r),
                          spec.series[k]);
      }
      ay.Include(y);
    }
  }
  ax.Finish();
  ay.Finish();

  const double margin = 50.0;
  const double w = spec.width - 2 * margin;
  const double h = spec.height - 2 * margin;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << ' ' << spec.height << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << Num(margin) << "\" y=\"" << Num(margin)
      << "\" width=\"" << Num(w) << "\" height=\"" << Num(h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (!spec.title.empty()) {
    svg << "<text x=\"" << Num(spec.width / 2.0)
        << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << Escape(spec.title) << "</text>\n";
  }
  auto tick = [](double v, bool log) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", log ? std::pow(10.0, v) : v);
    return std::string(buf);
  };
  svg << "<text x=\"" << Num(margin) << "\" y=\"" << Num(spec.height - 20.0)
      << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(ax.lo, ax.log) << "</text>\n";
  svg << "<text x=\"" << Num(margin + w) << "\" y=\""
      << Num(spec.height - 20.0)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(ax.hi, ax.log) << "</text>\n";
  svg << "<text x=\"" << Num(margin + w / 2) << "\" y=\""
      << Num(spec.height - 8.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">"
      << Escape(spec.x) << "</text>\n";
  svg << "<text x=\"5\" y=\"" << Num(margin + h)
      << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(ay.lo, ay.log) << "</text>\n";
  svg << "<text x=\"5\" y=\"" << Num(margin)
      << "\" font-family=\"sans-serif\" font-size=\"11\">"
      << tick(ay.hi, ay.log) << "</text>\n";

  for (std::size_t k = 0; k < cols.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    svg << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      const double y = scaled(k, row[cols[k]]);
      if (!std::isfinite(row[xc]) || !std::isfinite(y)) continue;
      svg << (first ? "" : " ") << Num(margin + w * ax.Fraction(row[xc]))
          << ',' << Num(margin + h * (1.0 - ay.Fraction(y)));
      first = false;
    }
    svg << "\"/>\n";
    svg << "<text x=\"" << Num(margin + w - 5) << "\" y=\""
        << Num(margin + 15.0 + 14.0 * k)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\" fill=\""
        << color << "\">" << Escape(spec.series[k]) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace alphagrad::cli
