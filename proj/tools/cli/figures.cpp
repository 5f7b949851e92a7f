// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "figures.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "rssb/error.hpp"
#include "rssb/io.hpp"
#include "rssb/rss_model.hpp"
#include "rssb/scenarios.hpp"

namespace rssb::cli {
namespace {

model::ReflectionState state_at_excess(sim::ScenarioConfig c, double excess) {
  scenarios::place_at_excess(c, excess);
  return model::reflection_state(c.link, c.motion, c.medium);
}

}  // namespace

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return v;
}

std::vector<std::vector<double>> series_rmse(const sim::ScenarioConfig& scenario,
                                             const std::vector<double>& excess,
                                             const std::vector<int>& orders, int samples) {
  if (samples < 4) throw ValidationError("series_rmse: need at least 4 samples per period");
  std::vector<std::vector<double>> out(orders.size(), std::vector<double>(excess.size()));
  for (std::size_t k = 0; k < excess.size(); ++k) {
    const auto st = state_at_excess(scenario, excess[k]);
    const double a = st.grad_proj * scenario.motion.amplitude;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      const auto hm = model::log_harmonics(st, 2, orders[i]);
      double acc = 0.0;
      for (int n = 0; n < samples; ++n) {
        const double t = n / (samples * st.breath_freq);
        const double d = excess[k] + a * std::sin(2.0 * std::numbers::pi * st.breath_freq * t);
        const double e = model::ratio_db_exact(st.G, d, st.wavelength) - hm.evaluate(t);
        acc += e * e;
      }
      out[i][k] = std::sqrt(acc / samples);
    }
  }
  return out;
}

std::vector<double> two_harmonic_energy(const sim::ScenarioConfig& scenario,
                                        const std::vector<double>& excess) {
  std::vector<double> e;
  e.reserve(excess.size());
  for (double d : excess) {
    const auto hm = model::log_harmonics(state_at_excess(scenario, d), 2, 2);
    e.push_back(model::signal_energy_approx(hm));
  }
  return e;
}

std::vector<HarmonicShare> harmonic_shares(const sim::ScenarioConfig& scenario,
                                           const std::vector<double>& ys) {
  std::vector<double> channels = scenario.channels_hz.empty() ? sim::default_channels() : scenario.channels_hz;
  std::vector<HarmonicShare> out;
  for (double y : ys) {
    for (double ch : channels) {
      sim::ScenarioConfig c = scenario;
      c.motion.p0 = {0.5 * (c.link.tx.x + c.link.rx.x), y};
      c.medium.wavelength = sim::kSpeedOfLight / ch;
      const auto hm = model::log_harmonics(model::reflection_state(c.link, c.motion, c.medium), 2, 2);
      const double e1 = model::signal_energy_approx(hm);
      const double c1 = hm.coefficient(1), c2 = hm.coefficient(2);
      out.push_back({y, ch, e1 > 0.0 ? c1 * c1 / e1 : 0.0, e1 > 0.0 ? c2 * c2 / e1 : 0.0});
    }
  }
  return out;
}

Figure figure_fig2c(const sim::ScenarioConfig& scenario) {
  const auto excess = linspace(0.5 * scenario.medium.wavelength, 1.0, 200);
  const std::vector<int> orders{1, 2, 3};
  const auto rmse = series_rmse(scenario, excess, orders);
  Figure f{"fig2c", {}, {}};
  std::ostringstream os;
  os.precision(10);
  os << "excess_m,rmse_i1_db,rmse_i2_db,rmse_i3_db\n";
  for (std::size_t k = 0; k < excess.size(); ++k) {
    os << excess[k] << ',' << rmse[0][k] << ',' << rmse[1][k] << ',' << rmse[2][k] << '\n';
  }
  f.csv = os.str();
  f.plot.title = "Two-harmonic model error";
  f.plot.x_label = "excess path [m]";
  f.plot.y_label = "RMSE [dB]";
  f.plot.log_y = true;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    f.plot.series.push_back({"I = " + std::to_string(orders[i]), excess, rmse[i], false});
  }
  return f;
}

Figure figure_fig3a(const sim::ScenarioConfig& scenario) {
  const auto excess = linspace(0.5 * scenario.medium.wavelength, 1.0, 400);
  const auto e1 = two_harmonic_energy(scenario, excess);
  Figure f{"fig3a", {}, {}};
  std::ostringstream os;
  os.precision(10);
  os << "excess_m,energy_db2\n";
  for (std::size_t k = 0; k < excess.size(); ++k) os << excess[k] << ',' << e1[k] << '\n';
  f.csv = os.str();
  f.plot.title = "Two-harmonic signal energy";
  f.plot.x_label = "excess path [m]";
  f.plot.y_label = "E1 [dB^2]";
  f.plot.series.push_back({"E1", excess, e1, false});
  return f;
}

Figure figure_fig3b(const sim::ScenarioConfig& scenario) {
  const auto ys = linspace(0.1, 0.5, 161);
  const auto shares = harmonic_shares(scenario, ys);
  Figure f{"fig3b", {}, {}};
  std::ostringstream os;
  os.precision(10);
  os << "y_m,channel_hz,c1_rel,c2_rel\n";
  std::map<double, std::pair<double, double>> sums;
  std::map<double, int> counts;
  LineSeries dots1{"c1^2 / E1 (channels)", {}, {}, true};
  LineSeries dots2{"c2^2 / E1 (channels)", {}, {}, true};
  for (const auto& s : shares) {
    os << s.y << ',' << s.channel_hz << ',' << s.c1 << ',' << s.c2 << '\n';
    sums[s.y].first += s.c1;
    sums[s.y].second += s.c2;
    ++counts[s.y];
    dots1.x.push_back(s.y);
    dots1.y.push_back(s.c1);
    dots2.x.push_back(s.y);
    dots2.y.push_back(s.c2);
  }
  f.csv = os.str();
  LineSeries mean1{"c1^2 / E1 (mean)", {}, {}, false}, mean2{"c2^2 / E1 (mean)", {}, {}, false};
  for (const auto& [y, s] : sums) {
    mean1.x.push_back(y);
    mean1.y.push_back(s.first / counts[y]);
    mean2.x.push_back(y);
    mean2.y.push_back(s.second / counts[y]);
  }
  f.plot.title = "Relative harmonic energy on the mid-line";
  f.plot.x_label = "y [m]";
  f.plot.y_label = "share of E1";
  f.plot.series = {mean1, mean2, dots1, dots2};
  return f;
}

Figure figure_fig6c(const eval::SweepConfig& sweep) {
  const auto rows = eval::snr_sweep(sweep);
  Figure f{"fig6c", {}, {}};
  std::ostringstream os;
  io::write_sweep(os, rows);
  f.csv = os.str();
  f.plot.title = "Hit ratio versus SNR";
  f.plot.x_label = "SNR [dB]";
  f.plot.y_label = "hit ratio [%]";
  for (auto m : sweep.methods) {
    LineSeries s{eval::method_name(m), {}, {}, false};
    for (const auto& r : rows) {
      if (r.method != m) continue;
      s.x.push_back(r.snr_db);
      s.y.push_back(r.hit_ratio_pct);
    }
    f.plot.series.push_back(std::move(s));
  }
  return f;
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig2c", "fig3a", "fig3b", "fig6c"};
  return names;
}

}  // namespace rssb::cli
