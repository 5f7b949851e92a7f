// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace rssb::est {

/// Per-time respiration estimates of one method.
struct EstimateSeries {
  std::string method;
  std::vector<double> timestamps;      // s
  std::vector<double> f_hat;           // Hz
  std::vector<double> reconstruction;  // implied RSS [dB], aligned with timestamps
  /// Per-step flag: no harmonic stood out (KF amplitudes all below its floor).
  std::vector<bool> undetermined;
  /// Filter mean after each update (GP only).
  std::vector<std::vector<double>> states;
  /// Set when a covariance had to be repaired to stay positive definite.
  bool reconditioned{false};

  std::size_t size() const { return f_hat.size(); }
  bool empty() const { return f_hat.empty(); }
};

// ---------------------------------------------------------------------------
// Batch periodogram

struct DftConfig {
  std::size_t window_len{938};  // Nw
  std::size_t overlap{937};     // No
  std::size_t fft_len{2048};    // Ndft
  double fs{31.25};
  double band_min{0.1};  // Hz
  double band_max{1.25};
  bool keep_spectrogram{false};

  /// Nw = ceil(30 fs), No = Nw - 1.
  static DftConfig for_rate(double fs);
  void validate() const;
};

struct Spectrogram {
  std::vector<double> window_end;  // s
  std::vector<double> freqs;       // in-band bin frequencies [Hz]
  std::vector<std::vector<double>> psd;  // one row per window, aligned with freqs
};

struct DftResult {
  EstimateSeries series;
  Spectrogram spectrogram;  // empty unless keep_spectrogram
};

/// `y` is the uniformly sampled, mean-removed sequence; `t` its timestamps
/// (estimates are stamped at each window's last sample). `mean` is added back to
/// the reconstruction.
DftResult dft_estimate(std::span<const double> t, std::span<const double> y, const DftConfig& cfg,
                       double mean = 0.0);

// ---------------------------------------------------------------------------
// Recursive Fourier-coefficient Kalman filter

struct KfConfig {
  std::vector<double> bin_freqs = default_bins();
  double process_var{0.01};           // Cw = process_var * I unless process_var_diag is set
  std::vector<double> process_var_diag;
  double init_var{1.0};               // P0 = init_var * I unless init_var_diag is set
  std::vector<double> init_var_diag;
  std::vector<double> init_mean;      // empty: [z0, 0, ...]
  double meas_var{1.0};               // dB^2
  double amplitude_floor{1e-9};

  /// n bins uniform on [f_min, f_max], both ends included.
  static std::vector<double> default_bins(std::size_t n = 75, double f_min = 0.1, double f_max = 2.5);
  std::size_t state_dim() const { return 2 * bin_freqs.size() + 1; }
  void validate() const;
};

/// State ordering: [a0, a1..aN, b1..bN]; observation row [1, sin(2 pi f_n t), cos(2 pi f_n t)].
/// The reconstruction is the filtered DC term plus the dominant bin's tone.
EstimateSeries kf_estimate(std::span<const double> t, std::span<const double> z, const KfConfig& cfg);

// ---------------------------------------------------------------------------
// Quasi-periodic Gaussian process filter

struct GpConfig {
  double sigma_k2{0.01};      // kernel variance
  double length_scale{0.9};
  double sf{1e-4};            // spectral density of the log-frequency noise
  int harmonics{2};           // NGP
  double meas_var{1.0};
  double init_log_freq{-1.3862943611198906};  // ln(15 / 60)
  double init_log_freq_var{0.1};
  double init_u0_var{0.31622776601683794};    // sqrt(0.1)
  double init_u0_mean{0.0};                   // only used when use_first_sample is false
  bool use_first_sample{true};                // u0 starts at z[0]
  double ut_alpha{0.1};
  double ut_beta{2.0};
  double ut_kappa{0.0};

  std::size_t state_dim() const { return 2 + 2 * static_cast<std::size_t>(harmonics); }
  /// Initial variance of each coordinate of harmonic block n >= 1: 1 / (2^n n!).
  static double init_harmonic_var(int n);
  void validate() const;
};

/// Stationary variance of the DC term (n = 0) or of each coordinate of block n.
double stationary_block_variance(int n, double sigma_k2, double length_scale);

/// sigma_k2 exp(-2 sin^2(pi f tau) / l^2)
double periodic_kernel(double tau, double freq, double sigma_k2, double length_scale);

/// Cosine expansion of periodic_kernel truncated after `harmonics` terms.
double periodic_kernel_truncated(double tau, double freq, double sigma_k2, double length_scale,
                                 int harmonics);

/// State ordering: [s, u0, u_{1,1}, u_{1,2}, ..., u_{N,1}, u_{N,2}], f = exp(s).
/// Sigma points are drawn over s only; the remaining state is handled by exact
/// linear-Gaussian recursions conditional on each point. The reconstruction is
/// the filtered u0 + sum_n u_{n,1}.
EstimateSeries gp_estimate(std::span<const double> t, std::span<const double> z, const GpConfig& cfg);

/// Index of u_{m,1} in the GP state.
inline std::size_t gp_harmonic_index(int m) { return 2 * static_cast<std::size_t>(m); }

/// The signal implied by the estimator, one value per estimate.
inline const std::vector<double>& reconstruct_signal(const EstimateSeries& series) {
  return series.reconstruction;
}

}  // namespace rssb::est
