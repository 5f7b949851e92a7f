// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace rssb::cli {

struct LineSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  bool markers{false};  // draw points instead of a polyline
};

/// Minimal static line plot: axes with ticks, one polyline per series, legend.
struct LinePlot {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<LineSeries> series;
  bool log_y{false};
  int width{640};
  int height{420};

  std::string render() const;
};

/// Round tick positions covering [lo, hi], about `target` of them.
std::vector<double> nice_ticks(double lo, double hi, int target = 6);

}  // namespace rssb::cli
