// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace rssb {

/// Timestamped RSS samples of one channel. Values are dB relative to the
/// baseline plus whatever baseline offset the producer applied.
struct RssTrace {
  int channel_id{0};
  double wavelength{0.0};          // m, 0 if unknown
  std::vector<double> timestamps;  // s, strictly increasing
  std::vector<double> values;      // dB / dBm

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  /// Throws ValidationError on length mismatch or non-increasing timestamps.
  void validate() const;
  /// True when every sampling interval equals the first one within `rel_tol`.
  bool is_uniform(double rel_tol = 1e-6) const;
  /// Median sampling interval.
  double median_interval() const;
};

}  // namespace rssb
