// Copyright 2026 The qprobe Authors
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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "qprobe/cli.hpp"

namespace qprobe::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;
constexpr int kTicks = 5;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

// Fixed three-decimal coordinates keep the output byte-stable.
std::string coord(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) lo = hi = 0.0;
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

}  // namespace

std::string render_svg(const Table& t, const std::vector<std::string>& columns, const std::string& title) {
  if (t.header.empty() || t.rows.empty()) throw CliError(kExitDataShape, "nothing to plot");
  if (columns.empty()) throw CliError(kExitDataShape, "no columns selected");
  std::vector<std::size_t> idx;
  for (const std::string& c : columns) idx.push_back(t.column(c));

  Range xr, yr;
  for (const auto& row : t.rows) {
    xr.add(row[0]);
    for (std::size_t i : idx) yr.add(row[i]);
  }
  xr.pad();
  yr.pad();

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + coord(kWidth) + "\" height=\"" +
       coord(kHeight) + "\" viewBox=\"0 0 " + coord(kWidth) + " " + coord(kHeight) + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + coord(kWidth) + "\" height=\"" + coord(kHeight) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + escape(title) + "</text>\n";

  // Axes and ticks.
  s += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  s += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop + ph) + "\" x2=\"" + coord(kLeft + pw) + "\" y2=\"" +
       coord(kTop + ph) + "\"/>\n";
  s += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(kLeft) + "\" y2=\"" +
       coord(kTop + ph) + "\"/>\n";
  s += "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double xv = xr.lo + (xr.hi - xr.lo) * k / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * k / kTicks;
    s += "<line x1=\"" + coord(px(xv)) + "\" y1=\"" + coord(kTop + ph) + "\" x2=\"" + coord(px(xv)) + "\" y2=\"" +
         coord(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + coord(px(xv)) + "\" y=\"" + coord(kTop + ph + 18) + "\" text-anchor=\"middle\">" +
         format_number(std::round(xv * 1e4) / 1e4) + "</text>\n";
    s += "<line x1=\"" + coord(kLeft - 5) + "\" y1=\"" + coord(py(yv)) + "\" x2=\"" + coord(kLeft) + "\" y2=\"" +
         coord(py(yv)) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(py(yv) + 4) + "\" text-anchor=\"end\">" +
         format_number(std::round(yv * 1e4) / 1e4) + "</text>\n";
  }
  s += "<text x=\"" + coord(kLeft + pw / 2) + "\" y=\"" + coord(kHeight - 10) + "\" text-anchor=\"middle\">" +
       escape(t.header[0]) + "</text>\n";
  s += "</g>\n";

  // One polyline per column. Non-finite samples are skipped.
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const char* color = kPalette[c % (sizeof kPalette / sizeof kPalette[0])];
    std::string points;
    for (const auto& row : t.rows) {
      if (!std::isfinite(row[0]) || !std::isfinite(row[idx[c]])) continue;
      if (!points.empty()) points += ' ';
      points += coord(px(row[0])) + "," + coord(py(row[idx[c]]));
    }
    const bool noisy = columns[c].ends_with("_noisy");
    const std::string dash = noisy ? " stroke-dasharray=\"6 3\"" : "";
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"" + dash +
         " points=\"" + points + "\"/>\n";
  }

  // Legend.
  s += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t c = 0; c < idx.size(); ++c) {
    const char* color = kPalette[c % (sizeof kPalette / sizeof kPalette[0])];
    const double y = kTop + 10 + 20.0 * static_cast<double>(c);
    const double x = kLeft + pw + 15;
    s += "<line x1=\"" + coord(x) + "\" y1=\"" + coord(y) + "\" x2=\"" + coord(x + 24) + "\" y2=\"" + coord(y) +
         "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + coord(x + 30) + "\" y=\"" + coord(y + 4) + "\">" + escape(columns[c]) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace qprobe::cli
