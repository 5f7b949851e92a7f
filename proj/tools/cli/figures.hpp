// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "rssb/evaluation.hpp"
#include "rssb/simulator.hpp"
#include "svg.hpp"

namespace rssb::cli {

/// n points uniform on [lo, hi].
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// RMS error over one breathing period between the exact log ratio (excess path
/// linearized, G frozen at p0) and the two-harmonic model with inner series order
/// I, for the reflector on the mid-line at each excess in `excess`.
/// Returns rmse[i][k] for orders[i] and excess[k].
std::vector<std::vector<double>> series_rmse(const sim::ScenarioConfig& scenario,
                                             const std::vector<double>& excess,
                                             const std::vector<int>& orders, int samples = 256);

/// E_1 = c_1^2 + c_2^2 (two harmonics, two series terms) on the mid-line.
std::vector<double> two_harmonic_energy(const sim::ScenarioConfig& scenario,
                                        const std::vector<double>& excess);

/// c_m^2 / E_1 for m = 1, 2 with the reflector at (0, y) on every channel.
struct HarmonicShare {
  double y{0.0};
  double channel_hz{0.0};
  double c1{0.0};
  double c2{0.0};
};
std::vector<HarmonicShare> harmonic_shares(const sim::ScenarioConfig& scenario,
                                           const std::vector<double>& ys);

struct Figure {
  std::string name;
  std::string csv;
  LinePlot plot;
};

Figure figure_fig2c(const sim::ScenarioConfig& scenario);
Figure figure_fig3a(const sim::ScenarioConfig& scenario);
Figure figure_fig3b(const sim::ScenarioConfig& scenario);
Figure figure_fig6c(const eval::SweepConfig& sweep);

/// fig2c, fig3a, fig3b, fig6c.
const std::vector<std::string>& figure_names();

}  // namespace rssb::cli
