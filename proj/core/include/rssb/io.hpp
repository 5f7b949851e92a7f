// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rssb/estimators.hpp"
#include "rssb/evaluation.hpp"
#include "rssb/simulator.hpp"
#include "rssb/trace.hpp"

namespace rssb::io {

/// `key=value` pairs with dotted keys into the JSON document, e.g. motion.amplitude=0.02.
/// Values are read as JSON when they parse, otherwise as strings.
using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Splits "key=value"; throws ValidationError when '=' is missing.
std::pair<std::string, std::string> parse_override(const std::string& text);

struct ScenarioFile {
  sim::ScenarioConfig config;
  /// When set, noise_std is calibrated to reach this periodogram SNR.
  std::optional<double> target_snr_db;
};

/// Parses a scenario document. Errors name the offending field, or the line and
/// column for syntax errors.
ScenarioFile parse_scenario(const std::string& text, const Overrides& overrides = {});
ScenarioFile load_scenario(const std::string& path, const Overrides& overrides = {});
std::string scenario_to_json(const sim::ScenarioConfig& config,
                             std::optional<double> target_snr_db = std::nullopt);

/// Estimator settings document: {"filter": {...}, "dft": {...}, "kf": {...}, "gp": {...}}.
eval::EstimatorConfigs parse_estimator_configs(const std::string& text, const Overrides& overrides = {});
eval::EstimatorConfigs load_estimator_configs(const std::string& path, const Overrides& overrides = {});
std::string estimator_configs_to_json(const eval::EstimatorConfigs& cfg);

/// `time_s,channel_id,rss_db`, rows ordered by time.
void write_traces(std::ostream& os, const std::vector<RssTrace>& traces);
/// Groups rows by channel id (ascending). Malformed rows are reported by line number.
std::vector<RssTrace> read_traces(std::istream& is);

/// `time_s,method,f_hat_hz`
void write_estimates(std::ostream& os, const est::EstimateSeries& s);
est::EstimateSeries read_estimates(std::istream& is);

/// `time_s,z_db,r_hat_db`
void write_reconstruction(std::ostream& os, const est::EstimateSeries& s, const std::vector<double>& z);
struct Reconstruction {
  std::vector<double> timestamps, z, r_hat;
};
Reconstruction read_reconstruction(std::istream& is);

/// `time_s,s,u0,u1_1,u1_2,...`
void write_states(std::ostream& os, const est::EstimateSeries& s);
/// Reads states back into a series usable by harmonic_energy_fractions.
est::EstimateSeries read_states(std::istream& is);

/// `window_end_s,f_hz,psd`
void write_spectrogram(std::ostream& os, const est::Spectrogram& sg);

std::string metrics_to_json(const eval::MetricsReport& r);

/// `snr_db,method,hit_ratio_pct`
void write_sweep(std::ostream& os, const std::vector<eval::SweepRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rssb::io
