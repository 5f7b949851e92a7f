// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "rssb/error.hpp"
#include "rssb/estimators.hpp"

namespace rssb::est {

std::vector<double> KfConfig::default_bins(std::size_t n, double f_min, double f_max) {
  if (n == 0 || !(f_min > 0.0) || !(f_max > f_min || (n == 1 && f_max == f_min))) {
    throw ValidationError("kf: need n >= 1 and 0 < f_min < f_max");
  }
  std::vector<double> bins(n);
  if (n == 1) {
    bins[0] = f_min;
    return bins;
  }
  const double step = (f_max - f_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) bins[i] = f_min + step * static_cast<double>(i);
  return bins;
}

void KfConfig::validate() const {
  if (bin_freqs.empty()) throw ValidationError("kf: bin_freqs is empty");
  for (std::size_t i = 0; i < bin_freqs.size(); ++i) {
    if (!(bin_freqs[i] > 0.0) || (i > 0 && !(bin_freqs[i] > bin_freqs[i - 1]))) {
      throw ValidationError("kf: bin_freqs must be positive and strictly increasing");
    }
  }
  const std::size_t n = state_dim();
  if (!process_var_diag.empty() && process_var_diag.size() != n) {
    throw ValidationError("kf: process_var_diag must have 2N+1 entries");
  }
  if (!init_var_diag.empty() && init_var_diag.size() != n) {
    throw ValidationError("kf: init_var_diag must have 2N+1 entries");
  }
  if (!init_mean.empty() && init_mean.size() != n) throw ValidationError("kf: init_mean must have 2N+1 entries");
  if (!(process_var >= 0.0) || !(init_var > 0.0)) throw ValidationError("kf: variances must be positive");
  if (!(meas_var > 0.0)) throw ValidationError("kf: meas_var must be > 0");
}

EstimateSeries kf_estimate(std::span<const double> t, std::span<const double> z, const KfConfig& cfg) {
  cfg.validate();
  if (t.size() != z.size()) throw ValidationError("kf: timestamp and sample counts differ");
  const auto nb = static_cast<Eigen::Index>(cfg.bin_freqs.size());
  const Eigen::Index n = 2 * nb + 1;

  Eigen::VectorXd q(n), x(n), g(n), pg(n);
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    q[i] = cfg.process_var_diag.empty() ? cfg.process_var : cfg.process_var_diag[static_cast<std::size_t>(i)];
    P(i, i) = cfg.init_var_diag.empty() ? cfg.init_var : cfg.init_var_diag[static_cast<std::size_t>(i)];
    x[i] = cfg.init_mean.empty() ? 0.0 : cfg.init_mean[static_cast<std::size_t>(i)];
  }
  if (cfg.init_mean.empty() && !z.empty()) x[0] = z[0];

  EstimateSeries out;
  out.method = "kf";
  out.timestamps.assign(t.begin(), t.end());
  out.f_hat.reserve(z.size());
  out.reconstruction.reserve(z.size());
  out.undetermined.reserve(z.size());
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!std::isfinite(z[k]) || !std::isfinite(t[k])) {
      throw DomainError("kf: non-finite measurement at sample " + std::to_string(k));
    }
    if (k > 0) {
      if (!(t[k] > t[k - 1])) throw ValidationError("kf: timestamps must be strictly increasing");
      P.diagonal() += q;
    }
    g[0] = 1.0;
    for (Eigen::Index i = 0; i < nb; ++i) {
      const double ph = two_pi * cfg.bin_freqs[static_cast<std::size_t>(i)] * t[k];
      g[1 + i] = std::sin(ph);
      g[1 + nb + i] = std::cos(ph);
    }
    const double pred = g.dot(x);
    pg.noalias() = P.selfadjointView<Eigen::Lower>() * g;
    const double s = g.dot(pg) + cfg.meas_var;
    x += pg * ((z[k] - pred) / s);
    P.selfadjointView<Eigen::Lower>().rankUpdate(pg, -1.0 / s);

    Eigen::Index best = 0;
    double best_amp = -1.0;
    for (Eigen::Index i = 0; i < nb; ++i) {
      const double amp = std::hypot(x[1 + i], x[1 + nb + i]);
      if (amp > best_amp) {
        best_amp = amp;
        best = i;
      }
    }
    out.f_hat.push_back(cfg.bin_freqs[static_cast<std::size_t>(best)]);
    out.reconstruction.push_back(x[0] + x[1 + best] * g[1 + best] + x[1 + nb + best] * g[1 + nb + best]);
    out.undetermined.push_back(best_amp < cfg.amplitude_floor);
  }
  return out;
}

}  // namespace rssb::est
