// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <numbers>

#include "rssb/error.hpp"
#include "rssb/estimators.hpp"
#include "rssb/special_functions.hpp"

namespace rssb::est {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Symmetrize and, if needed, lift eigenvalues so that P is positive definite.
bool ensure_positive_definite(MatrixXd& P) {
  P = 0.5 * (P + P.transpose());
  Eigen::LLT<MatrixXd> llt(P);
  if (llt.info() == Eigen::Success) return false;
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(P);
  VectorXd ev = eig.eigenvalues();
  const double floor = std::max(1e-12, 1e-9 * ev.cwiseAbs().maxCoeff());
  for (Index i = 0; i < ev.size(); ++i) ev[i] = std::max(ev[i], floor);
  P = eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().transpose();
  P = 0.5 * (P + P.transpose());
  return true;
}

}  // namespace

double GpConfig::init_harmonic_var(int n) {
  return 1.0 / (std::pow(2.0, n) * std::tgamma(n + 1.0));
}

void GpConfig::validate() const {
  if (!(sigma_k2 > 0.0) || !(length_scale > 0.0) || !(sf > 0.0)) {
    throw ValidationError("gp: sigma_k2, length_scale and sf must be > 0");
  }
  if (harmonics < 1) throw ValidationError("gp: harmonics must be >= 1");
  if (!(meas_var > 0.0)) throw ValidationError("gp: meas_var must be > 0");
  if (!(init_log_freq_var > 0.0) || !(init_u0_var > 0.0)) {
    throw ValidationError("gp: initial variances must be > 0");
  }
  if (!(ut_alpha > 0.0) || 1.0 + ut_kappa <= 0.0) throw ValidationError("gp: invalid sigma-point parameters");
  if (!std::isfinite(init_log_freq)) throw ValidationError("gp: init_log_freq must be finite");
}

double stationary_block_variance(int n, double sigma_k2, double length_scale) {
  const double x = 1.0 / (length_scale * length_scale);
  const double scale = n == 0 ? 1.0 : 2.0;
  return scale * sigma_k2 * std::exp(-x) * special::bessel_i(n, x);
}

double periodic_kernel(double tau, double freq, double sigma_k2, double length_scale) {
  const double s = std::sin(std::numbers::pi * freq * tau);
  return sigma_k2 * std::exp(-2.0 * s * s / (length_scale * length_scale));
}

double periodic_kernel_truncated(double tau, double freq, double sigma_k2, double length_scale,
                                 int harmonics) {
  double k = stationary_block_variance(0, sigma_k2, length_scale);
  for (int n = 1; n <= harmonics; ++n) {
    k += stationary_block_variance(n, sigma_k2, length_scale) * std::cos(kTwoPi * n * freq * tau);
  }
  return k;
}

EstimateSeries gp_estimate(std::span<const double> t, std::span<const double> z, const GpConfig& cfg) {
  cfg.validate();
  if (t.size() != z.size()) throw ValidationError("gp: timestamp and sample counts differ");
  const int nh = cfg.harmonics;
  const Index d = static_cast<Index>(cfg.state_dim());
  const Index du = d - 1;

  // Process noise rates per unit time of the DC term and of each harmonic coordinate.
  const double x = 1.0 / (cfg.length_scale * cfg.length_scale);
  std::vector<double> q_rate(static_cast<std::size_t>(nh) + 1);
  q_rate[0] = 2.0 * cfg.sigma_k2 * std::exp(-x) * special::bessel_i(0, x);
  for (int n = 1; n <= nh; ++n) q_rate[n] = 4.0 * cfg.sigma_k2 * std::exp(-x) * special::bessel_i(n, x);

  VectorXd m = VectorXd::Zero(d);
  MatrixXd P = MatrixXd::Zero(d, d);
  m[0] = cfg.init_log_freq;
  m[1] = cfg.use_first_sample && !z.empty() ? z[0] : cfg.init_u0_mean;
  P(0, 0) = cfg.init_log_freq_var;
  P(1, 1) = cfg.init_u0_var;
  for (int n = 1; n <= nh; ++n) {
    P(2 * n, 2 * n) = P(2 * n + 1, 2 * n + 1) = GpConfig::init_harmonic_var(n);
  }
  VectorXd h = VectorXd::Zero(d);
  h[1] = 1.0;
  for (int n = 1; n <= nh; ++n) h[2 * n] = 1.0;

  // Unscented weights for a scalar state.
  const double lambda = cfg.ut_alpha * cfg.ut_alpha * (1.0 + cfg.ut_kappa) - 1.0;
  const double spread = std::sqrt(1.0 + lambda);
  const std::array<double, 3> wm{lambda / (1.0 + lambda), 0.5 / (1.0 + lambda), 0.5 / (1.0 + lambda)};
  const std::array<double, 3> wc{wm[0] + 1.0 - cfg.ut_alpha * cfg.ut_alpha + cfg.ut_beta, wm[1], wm[2]};

  EstimateSeries out;
  out.method = "gp";
  out.timestamps.assign(t.begin(), t.end());
  out.f_hat.reserve(z.size());
  out.reconstruction.reserve(z.size());
  out.undetermined.assign(z.size(), false);
  out.states.reserve(z.size());

  std::array<double, 3> chi{};
  std::array<VectorXd, 3> mu;
  std::array<MatrixXd, 3> sig;
  MatrixXd Fj = MatrixXd::Identity(du, du);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!std::isfinite(z[k]) || !std::isfinite(t[k])) {
      throw DomainError("gp: non-finite measurement at sample " + std::to_string(k));
    }
    if (k > 0) {
      const double dt = t[k] - t[k - 1];
      if (!(dt > 0.0)) throw ValidationError("gp: timestamps must be strictly increasing");
      // Geometric Brownian motion of the frequency: s drifts and diffuses.
      m[0] -= 0.5 * cfg.sf * cfg.sf * dt;
      P(0, 0) += cfg.sf * dt;

      const double ms = m[0];
      const double pss = P(0, 0);
      const VectorXd mu_base = m.tail(du);
      const VectorXd pus = P.block(1, 0, du, 1);
      const MatrixXd cond = P.bottomRightCorner(du, du) - pus * pus.transpose() / pss;
      const double sd = spread * std::sqrt(pss);
      chi = {ms, ms + sd, ms - sd};
      for (int j = 0; j < 3; ++j) {
        const double f = std::exp(chi[j]);
        for (int n = 1; n <= nh; ++n) {
          const double a = kTwoPi * n * f * dt;
          const double c = std::cos(a), s = std::sin(a);
          Fj(2 * n - 1, 2 * n - 1) = c;
          Fj(2 * n - 1, 2 * n) = -s;
          Fj(2 * n, 2 * n - 1) = s;
          Fj(2 * n, 2 * n) = c;
        }
        mu[j] = Fj * (mu_base + pus * ((chi[j] - ms) / pss));
        sig[j] = Fj * cond * Fj.transpose();
        sig[j](0, 0) += q_rate[0] * dt;
        for (int n = 1; n <= nh; ++n) {
          sig[j](2 * n - 1, 2 * n - 1) += q_rate[n] * dt;
          sig[j](2 * n, 2 * n) += q_rate[n] * dt;
        }
      }
      VectorXd mu_mean = VectorXd::Zero(du);
      for (int j = 0; j < 3; ++j) mu_mean += wm[j] * mu[j];
      MatrixXd puu = MatrixXd::Zero(du, du);
      VectorXd psu = VectorXd::Zero(du);
      for (int j = 0; j < 3; ++j) {
        const VectorXd dm = mu[j] - mu_mean;
        puu += wm[j] * sig[j] + wc[j] * dm * dm.transpose();
        psu += wc[j] * (chi[j] - ms) * dm;
      }
      m.tail(du) = mu_mean;
      P.bottomRightCorner(du, du) = puu;
      P.block(1, 0, du, 1) = psu;
      P.block(0, 1, 1, du) = psu.transpose();
    }

    const double pred = h.dot(m);
    const VectorXd ph = P * h;
    const double s = h.dot(ph) + cfg.meas_var;
    m += ph * ((z[k] - pred) / s);
    P -= ph * ph.transpose() / s;
    if (ensure_positive_definite(P)) out.reconditioned = true;

    out.f_hat.push_back(std::exp(m[0]));
    out.reconstruction.push_back(h.dot(m));
    out.states.emplace_back(m.data(), m.data() + d);
  }
  return out;
}

}  // namespace rssb::est
