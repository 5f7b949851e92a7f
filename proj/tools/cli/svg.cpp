// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace rssb::cli {
namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string label(double v) {
  std::ostringstream os;
  if (v != 0.0 && (std::abs(v) < 1e-3 || std::abs(v) >= 1e5)) {
    os.precision(2);
    os << std::scientific << v;
  } else {
    os.precision(6);
    os << v;
  }
  return os.str();
}

}  // namespace

std::vector<double> nice_ticks(double lo, double hi, int target) {
  if (!(hi > lo)) return {lo};
  const double raw = (hi - lo) / std::max(1, target);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * step; t += step) {
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

std::string LinePlot::render() const {
  const double left = 70, right = 20, top = 40, bottom = 55;
  const double pw = width - left - right;
  const double ph = height - top - bottom;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto ty = [&](double v) { return log_y ? std::log10(v) : v; };
  for (const auto& s : series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]) || (log_y && !(s.y[i] > 0.0))) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  if (xmax == xmin) xmin -= 0.5, xmax += 0.5;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  auto sx = [&](double v) { return left + (v - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double v) { return top + (1.0 - (v - ymin) / (ymax - ymin)) * ph; };

  std::ostringstream os;
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << escape(title)
     << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t : nice_ticks(xmin, xmax)) {
    const double x = sx(t);
    os << "<line x1=\"" << x << "\" y1=\"" << top + ph << "\" x2=\"" << x << "\" y2=\"" << top + ph + 5
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << label(t)
       << "</text>\n";
  }
  for (double t : nice_ticks(ymin, ymax)) {
    const double y = sy(t);
    os << "<line x1=\"" << left - 5 << "\" y1=\"" << y << "\" x2=\"" << left << "\" y2=\"" << y
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << left - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\">"
       << label(log_y ? std::pow(10.0, t) : t) << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">"
     << escape(x_label) << "</text>\n";
  os << "<text transform=\"translate(16," << top + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
     << escape(y_label) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % kPalette.size()];
    std::ostringstream pts;
    pts.precision(6);
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i]) || (log_y && !(s.y[i] > 0.0))) continue;
      if (s.markers) {
        os << "<circle cx=\"" << sx(s.x[i]) << "\" cy=\"" << sy(ty(s.y[i])) << "\" r=\"1.5\" fill=\"" << color
           << "\"/>\n";
      } else {
        pts << sx(s.x[i]) << ',' << sy(ty(s.y[i])) << ' ';
      }
    }
    if (!s.markers) {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"" << pts.str()
         << "\"/>\n";
    }
    const double ly = top + 14 + 16 * static_cast<double>(k);
    os << "<line x1=\"" << left + pw - 120 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw - 100 << "\" y2=\""
       << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + pw - 95 << "\" y=\"" << ly << "\">" << escape(s.name) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace rssb::cli
