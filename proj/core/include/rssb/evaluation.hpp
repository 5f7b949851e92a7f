// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rssb/dsp.hpp"
#include "rssb/estimators.hpp"
#include "rssb/simulator.hpp"
#include "rssb/trace.hpp"

namespace rssb::eval {

inline constexpr double kBpmPerHz = 60.0;

/// 60 * mean |f_hat - f| [bpm]. Throws InsufficientDataError on empty input.
double freq_mae(const est::EstimateSeries& s, double f_true);

/// Percentage of estimates with 60 |f_hat - f| <= tol_bpm.
double hit_ratio(const est::EstimateSeries& s, double f_true, double tol_bpm = 1.0);

/// Same, restricted to estimates stamped after t_from.
std::optional<double> hit_ratio_after(const est::EstimateSeries& s, double f_true, double t_from,
                                      double tol_bpm = 1.0);

struct SplitMae {
  std::optional<double> early;  // t <= t_split
  std::optional<double> late;   // t > t_split
};
SplitMae convergence_split(const est::EstimateSeries& s, double f_true, double t_split = 30.0);

/// MAE over estimates within threshold_bpm of f; empty when all are outliers.
std::optional<double> outlier_filtered_mae(const est::EstimateSeries& s, double f_true,
                                           double threshold_bpm = 3.0);

/// Earliest estimate time t such that every estimate in [t, t + hold] lies within
/// tol_bpm of f. Empty if the series never settles for `hold` seconds.
std::optional<double> convergence_time(const est::EstimateSeries& s, double f_true,
                                       double tol_bpm = 1.0, double hold = 5.0);

/// mean |z - r_hat| [dB]
double modeling_mae(std::span<const double> z, std::span<const double> r_hat);

struct SnrConfig {
  double band_min{0.1};
  double band_max{3.0};
  int harmonics{2};
  double neighborhood{0.033};  // Hz either side of each harmonic
  std::size_t min_fft{2048};
};

/// 10 log10(power near f, 2f / remaining in-band power) of the zero-padded
/// periodogram of y, DC excluded.
double snr_estimate(std::span<const double> y, double fs, double f_true, const SnrConfig& cfg = {});

/// Percent energy of u_{m,1}, m = 1..NGP, averaged over GP states stamped after t_from
/// (all states when none are).
std::vector<double> harmonic_energy_fractions(const est::EstimateSeries& gp, double t_from = 30.0);

struct MetricsReport {
  std::string method;
  double f_true{0.0};
  std::size_t count{0};
  double eps_f{0.0};
  double eps_pct{0.0};
  std::optional<double> eps_f_early;
  std::optional<double> eps_f_late;
  std::optional<double> eps_f_no_outliers;
  std::optional<double> eps_z;
  std::optional<double> snr_db;
  std::optional<double> convergence_time;
  std::vector<double> harmonic_energy_pct;
  bool reconditioned{false};
};

enum class Method { kDft, kKf, kGp };
Method parse_method(const std::string& name);
std::string method_name(Method m);

struct EstimatorConfigs {
  dsp::FilterSpec filter;
  est::DftConfig dft;  // fs and window fields are rederived from the trace rate
  est::KfConfig kf;
  est::GpConfig gp;
};

struct PipelineResult {
  est::EstimateSeries series;
  std::vector<double> z_aligned;  // low-passed RSS at each estimate timestamp
  std::vector<double> y;          // band-passed sequence the estimator (or SNR) used
  est::Spectrogram spectrogram;   // DFT only, when dft.keep_spectrogram is set
  double fs{0.0};
  bool resampled{false};
};

/// Preprocess one trace and run the chosen estimator. The batch periodogram gets a
/// uniformly resampled trace when the input is uneven; the recursive filters take
/// the samples as they are.
PipelineResult run_estimator(const RssTrace& trace, Method method, const EstimatorConfigs& cfg,
                             double nominal_fs = 0.0);

/// Metrics of one run. `y` enables the SNR estimate, `z_aligned` the modeling MAE.
MetricsReport evaluate(const est::EstimateSeries& s, double f_true,
                       std::span<const double> z_aligned = {}, std::span<const double> y = {},
                       double fs = 0.0, double t_split = 30.0, double outlier_bpm = 3.0);

/// What calibrate_noise_std holds at the target.
enum class SnrTarget {
  /// Noise-free harmonic power over expected off-harmonic power (signal leakage
  /// plus noise). Defined for any target, including below the white-noise floor
  /// of snr_estimate.
  kSignalToNoise,
  /// Expected value of snr_estimate, noise near the harmonics included.
  kPeriodogramEstimate,
};

/// Noise standard deviation [dB] for channel 0 of the scenario that puts the chosen
/// SNR at target_db. Quantization noise (step^2 / 12) counts towards the total.
/// Throws ValidationError when the target lies below what white noise can reach.
double calibrate_noise_std(const sim::ScenarioConfig& scenario, double target_db,
                           SnrTarget target = SnrTarget::kSignalToNoise,
                           const dsp::FilterSpec& filter = {}, const SnrConfig& snr = {});

struct SweepConfig {
  sim::ScenarioConfig scenario;
  std::vector<double> snr_grid_db;
  std::size_t seeds{25};
  std::uint64_t seed_base{1};
  std::vector<Method> methods{Method::kDft, Method::kKf, Method::kGp};
  EstimatorConfigs estimators;
  double t_from{30.0};  // hit ratio counted on estimates after this time
  unsigned jobs{1};
};

struct SweepRow {
  double snr_db{0.0};           // target bucket
  double measured_snr_db{0.0};  // mean periodogram SNR over the bucket's traces
  Method method{Method::kDft};
  double hit_ratio_pct{0.0};
  std::size_t traces{0};
};

/// Runs every (snr, seed) trace through every method. Rows are ordered by
/// snr_grid then methods, independent of `jobs`.
std::vector<SweepRow> snr_sweep(const SweepConfig& cfg);

}  // namespace rssb::eval
