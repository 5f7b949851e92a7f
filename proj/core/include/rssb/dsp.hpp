// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "rssb/trace.hpp"

namespace rssb::dsp {

/// Low-pass template. Defaults: 5th order, 2 Hz pass, 3 Hz stop, 0.05 dB ripple, 40 dB.
struct FilterSpec {
  int order{5};
  double passband_hz{2.0};
  double stopband_hz{3.0};
  double passband_ripple_db{0.05};
  double stopband_atten_db{40.0};

  void validate(double fs) const;
};

/// y = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2) x
struct Biquad {
  double b0{1.0}, b1{0.0}, b2{0.0};
  double a1{0.0}, a2{0.0};

  double dc_gain() const { return (b0 + b1 + b2) / (1.0 + a1 + a2); }
};

/// Cascade of second-order sections, run in transposed direct form II.
class SosFilter {
 public:
  SosFilter() = default;
  explicit SosFilter(std::vector<Biquad> sections) : sections_(std::move(sections)) {}

  const std::vector<Biquad>& sections() const { return sections_; }
  std::complex<double> response(double freq_hz, double fs) const;
  double magnitude_db(double freq_hz, double fs) const;
  double dc_gain() const;

  /// Causal filtering. With settle_window = n > 0 the section states start at the
  /// steady state for a constant input equal to the mean of x[0..n), which removes
  /// the start-up step. n = 0 starts from rest.
  std::vector<double> apply(std::span<const double> x, std::size_t settle_window = 1) const;

 private:
  std::vector<Biquad> sections_;
};

struct EllipticDesign {
  SosFilter filter;
  double achieved_atten_db{0.0};  // stopband attenuation reached at stopband_hz
};

/// Elliptic (Cauer) low-pass via bilinear transform with pre-warped band edges.
/// The passband edge and ripple are met exactly; the stopband edge is placed at
/// spec.stopband_hz, which fixes the achievable attenuation. Throws
/// InfeasibleFilterError when that falls short of spec.stopband_atten_db.
EllipticDesign design_elliptic(const FilterSpec& spec, double fs);

enum class MeanMode { kBatch, kRunning };

struct Preprocessed {
  std::vector<double> timestamps;
  std::vector<double> y;  // low-pass of (P - mean): band-passed
  std::vector<double> z;  // low-pass of P
  double mean{0.0};       // batch mean (last running mean in streaming mode)
  std::size_t transient_samples{0};
};

/// Mean removal plus low-pass (y) and low-pass only (z). `fs` is the nominal rate
/// used for the filter design. Both filters settle on the first ceil(fs) samples.
Preprocessed preprocess(const RssTrace& trace, const FilterSpec& spec, double fs,
                        MeanMode mode = MeanMode::kBatch);

/// Linear interpolation onto t0 + j / fs, j = 0.. while <= last timestamp.
RssTrace resample_uniform(const RssTrace& trace, double fs);

}  // namespace rssb::dsp
