// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "rssb/error.hpp"

namespace rssb::dsp {
namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Descending Landen sequence of moduli.
std::vector<double> landen(double k) {
  std::vector<double> v;
  for (int n = 0; n < 12 && k > 1e-18; ++n) {
    k = std::pow(k / (1.0 + std::sqrt(1.0 - k * k)), 2);
    v.push_back(k);
  }
  return v;
}

// Jacobi cd(u K, k) and sn(u K, k) for complex normalized u.
cplx cde(cplx u, double k) {
  const auto v = landen(k);
  cplx w = std::cos(u * kPi / 2.0);
  for (auto it = v.rbegin(); it != v.rend(); ++it) w = (1.0 + *it) * w / (1.0 + *it * w * w);
  return w;
}

cplx sne(cplx u, double k) {
  const auto v = landen(k);
  cplx w = std::sin(u * kPi / 2.0);
  for (auto it = v.rbegin(); it != v.rend(); ++it) w = (1.0 + *it) * w / (1.0 + *it * w * w);
  return w;
}

// Inverse of sne: returns normalized u with sn(u K, k) = w.
cplx asne(cplx w, double k) {
  const auto v = landen(k);
  double prev = k;
  for (double vn : v) {
    w = w / (1.0 + std::sqrt(1.0 - w * w * prev * prev)) * 2.0 / (1.0 + vn);
    prev = vn;
  }
  return 2.0 * std::asin(w) / kPi;
}

// Degree equation: selectivity k -> discrimination k1 for order n.
double degree_modulus(int n, double k) {
  double prod = 1.0;
  for (int i = 1; i <= n / 2; ++i) {
    const double ui = (2.0 * i - 1.0) / n;
    prod *= std::real(sne(ui, k));
  }
  return std::pow(k, n) * std::pow(prod, 4);
}

// Analog section (n0 + n1 s + n2 s^2) / (d0 + d1 s + d2 s^2) -> digital, s = K (1 - z^-1)/(1 + z^-1).
Biquad bilinear(double n0, double n1, double n2, double d0, double d1, double d2, double K) {
  const double K2 = K * K;
  const double a0 = d0 + d1 * K + d2 * K2;
  Biquad q;
  q.b0 = (n0 + n1 * K + n2 * K2) / a0;
  q.b1 = (2.0 * n0 - 2.0 * n2 * K2) / a0;
  q.b2 = (n0 - n1 * K + n2 * K2) / a0;
  q.a1 = (2.0 * d0 - 2.0 * d2 * K2) / a0;
  q.a2 = (d0 - d1 * K + d2 * K2) / a0;
  return q;
}

}  // namespace

void FilterSpec::validate(double fs) const {
  if (order < 1) throw ValidationError("filter: order must be >= 1");
  if (!(passband_hz > 0.0 && passband_hz < stopband_hz && stopband_hz < fs / 2.0)) {
    throw ValidationError("filter: need 0 < passband < stopband < fs/2");
  }
  if (!(passband_ripple_db > 0.0)) throw ValidationError("filter: passband ripple must be > 0");
  if (!(stopband_atten_db > passband_ripple_db)) {
    throw ValidationError("filter: stopband attenuation must exceed passband ripple");
  }
}

std::complex<double> SosFilter::response(double freq_hz, double fs) const {
  const cplx z1 = std::polar(1.0, -2.0 * kPi * freq_hz / fs);
  const cplx z2 = z1 * z1;
  cplx h = 1.0;
  for (const auto& s : sections_) h *= (s.b0 + s.b1 * z1 + s.b2 * z2) / (1.0 + s.a1 * z1 + s.a2 * z2);
  return h;
}

double SosFilter::magnitude_db(double freq_hz, double fs) const {
  return 20.0 * std::log10(std::abs(response(freq_hz, fs)));
}

double SosFilter::dc_gain() const {
  double g = 1.0;
  for (const auto& s : sections_) g *= s.dc_gain();
  return g;
}

std::vector<double> SosFilter::apply(std::span<const double> x, std::size_t settle_window) const {
  std::vector<double> y(x.begin(), x.end());
  if (y.empty()) return y;
  const bool settle = settle_window > 0;
  const std::size_t n = std::min(settle_window, y.size());
  double level = settle ? std::accumulate(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n), 0.0) /
                              static_cast<double>(n)
                        : 0.0;
  for (const auto& s : sections_) {
    double s1 = 0.0, s2 = 0.0;
    if (settle) {
      const double out = s.dc_gain() * level;
      s2 = s.b2 * level - s.a2 * out;
      s1 = s.b1 * level - s.a1 * out + s2;
      level = out;
    }
    for (double& v : y) {
      const double in = v;
      const double out = s.b0 * in + s1;
      s1 = s.b1 * in - s.a1 * out + s2;
      s2 = s.b2 * in - s.a2 * out;
      v = out;
    }
  }
  return y;
}

EllipticDesign design_elliptic(const FilterSpec& spec, double fs) {
  spec.validate(fs);
  const int n = spec.order;
  const double K = 2.0 * fs;
  const double wp = K * std::tan(kPi * spec.passband_hz / fs);
  const double ws = K * std::tan(kPi * spec.stopband_hz / fs);
  const double k = wp / ws;
  const double ep = std::sqrt(std::pow(10.0, spec.passband_ripple_db / 10.0) - 1.0);
  const double k1 = degree_modulus(n, k);
  const double es = ep / k1;
  const double achieved = 10.0 * std::log10(1.0 + es * es);
  if (achieved < spec.stopband_atten_db) {
    throw InfeasibleFilterError("elliptic design: order " + std::to_string(n) + " reaches only " +
                                    std::to_string(achieved) + " dB at the stopband edge",
                                achieved);
  }

  const double v0 = std::real(cplx(0.0, -1.0) * asne(cplx(0.0, 1.0 / ep), k1)) / n;
  std::vector<Biquad> sections;
  for (int i = 1; i <= n / 2; ++i) {
    const double ui = (2.0 * i - 1.0) / n;
    const double zeta = std::real(cde(ui, k));
    const double zero = wp / (k * zeta);  // zeros at +-j zero
    const cplx pole = wp * cplx(0.0, 1.0) * cde(cplx(ui, -v0), k);
    const cplx inv = 1.0 / pole;
    // (1 + s^2/zero^2) / (1 - 2 Re(1/p) s + |1/p|^2 s^2): unity gain at DC.
    sections.push_back(bilinear(1.0, 0.0, 1.0 / (zero * zero), 1.0, -2.0 * inv.real(), std::norm(inv), K));
  }
  if (n % 2) {
    const double p0 = wp * std::real(cplx(0.0, 1.0) * sne(cplx(0.0, v0), k));
    // 1 / (1 - s/p0) -> first-order digital section
    const double d1 = -K / p0;
    Biquad q;
    q.b0 = 1.0 / (1.0 + d1);
    q.b1 = q.b0;
    q.a1 = (1.0 - d1) / (1.0 + d1);
    sections.push_back(q);
  } else {
    // Even orders ripple down to -Ap at DC.
    const double g = 1.0 / std::sqrt(1.0 + ep * ep);
    sections.front().b0 *= g;
    sections.front().b1 *= g;
    sections.front().b2 *= g;
  }
  return {SosFilter(std::move(sections)), achieved};
}

Preprocessed preprocess(const RssTrace& trace, const FilterSpec& spec, double fs, MeanMode mode) {
  trace.validate();
  if (trace.empty()) throw InsufficientDataError("preprocess: trace is empty");
  const SosFilter filter = design_elliptic(spec, fs).filter;

  Preprocessed out;
  out.timestamps = trace.timestamps;
  const auto settle = static_cast<std::size_t>(std::ceil(fs));
  out.z = filter.apply(trace.values, settle);
  std::vector<double> centered(trace.values.size());
  if (mode == MeanMode::kBatch) {
    out.mean = std::accumulate(trace.values.begin(), trace.values.end(), 0.0) /
               static_cast<double>(trace.values.size());
    for (std::size_t k = 0; k < centered.size(); ++k) centered[k] = trace.values[k] - out.mean;
  } else {
    double running = 0.0;
    for (std::size_t k = 0; k < centered.size(); ++k) {
      running += (trace.values[k] - running) / static_cast<double>(k + 1);
      centered[k] = trace.values[k] - running;
    }
    out.mean = running;
  }
  out.y = filter.apply(centered, settle);
  out.transient_samples = std::min(settle, trace.size());
  return out;
}

RssTrace resample_uniform(const RssTrace& trace, double fs) {
  trace.validate();
  if (trace.size() < 2) throw InsufficientDataError("resample_uniform: need at least 2 samples");
  if (!(fs > 0.0)) throw ValidationError("resample_uniform: fs must be > 0");
  RssTrace out;
  out.channel_id = trace.channel_id;
  out.wavelength = trace.wavelength;
  const double t0 = trace.timestamps.front();
  const double t1 = trace.timestamps.back();
  const auto count = static_cast<std::size_t>(std::floor((t1 - t0) * fs + 1e-9)) + 1;
  out.timestamps.reserve(count);
  out.values.reserve(count);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < count; ++j) {
    const double t = t0 + static_cast<double>(j) / fs;
    while (seg + 2 < trace.size() && trace.timestamps[seg + 1] < t) ++seg;
    const double ta = trace.timestamps[seg];
    const double tb = trace.timestamps[seg + 1];
    const double w = std::clamp((t - ta) / (tb - ta), 0.0, 1.0);
    out.timestamps.push_back(t);
    out.values.push_back(trace.values[seg] + w * (trace.values[seg + 1] - trace.values[seg]));
  }
  return out;
}

}  // namespace rssb::dsp
