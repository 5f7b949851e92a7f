// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <numbers>

#include "rssb/error.hpp"
#include "rssb/estimators.hpp"
#include "rssb/spectrum.hpp"

namespace rssb::est {

DftConfig DftConfig::for_rate(double fs) {
  DftConfig cfg;
  cfg.fs = fs;
  cfg.window_len = static_cast<std::size_t>(std::ceil(30.0 * fs - 1e-9));
  cfg.overlap = cfg.window_len - 1;
  cfg.fft_len = std::max<std::size_t>(2048, spectrum::next_pow2(cfg.window_len));
  return cfg;
}

void DftConfig::validate() const {
  if (!(fs > 0.0)) throw ValidationError("dft: fs must be > 0");
  if (window_len == 0 || overlap >= window_len || window_len > fft_len) {
    throw ValidationError("dft: need No < Nw <= Ndft");
  }
  if (!(band_min >= 0.0 && band_max > band_min)) throw ValidationError("dft: invalid band");
}

DftResult dft_estimate(std::span<const double> t, std::span<const double> y, const DftConfig& cfg,
                       double mean) {
  cfg.validate();
  if (t.size() != y.size()) throw ValidationError("dft: timestamp and sample counts differ");
  if (y.size() < cfg.window_len) {
    throw InsufficientDataError("dft: " + std::to_string(y.size()) + " samples, a window needs " +
                                std::to_string(cfg.window_len));
  }
  std::size_t lo = 0, hi = 0;
  bool any = false;
  for (std::size_t l = 1; l <= cfg.fft_len / 2; ++l) {
    const double f = spectrum::bin_frequency(l, cfg.fs, cfg.fft_len);
    if (f < cfg.band_min || f > cfg.band_max) continue;
    if (!any) lo = l;
    hi = l;
    any = true;
  }
  if (!any) throw ValidationError("dft: no frequency bin falls inside the band");

  DftResult out;
  out.series.method = "dft";
  if (cfg.keep_spectrogram) {
    for (std::size_t l = lo; l <= hi; ++l) {
      out.spectrogram.freqs.push_back(spectrum::bin_frequency(l, cfg.fs, cfg.fft_len));
    }
  }
  spectrum::RealFft fft(cfg.fft_len);
  std::vector<std::complex<double>> Y;
  const std::size_t hop = cfg.window_len - cfg.overlap;
  const double end_phase = 2.0 * std::numbers::pi * static_cast<double>(cfg.window_len - 1) /
                           static_cast<double>(cfg.fft_len);
  for (std::size_t start = 0; start + cfg.window_len <= y.size(); start += hop) {
    fft.transform(y.subspan(start, cfg.window_len), Y);
    std::size_t best = lo;
    double best_psd = -1.0;
    for (std::size_t l = lo; l <= hi; ++l) {
      const double p = std::norm(Y[l]);
      if (p > best_psd) {
        best_psd = p;
        best = l;
      }
    }
    const double t_end = t[start + cfg.window_len - 1];
    const std::complex<double> rot = std::polar(1.0, end_phase * static_cast<double>(best));
    out.series.timestamps.push_back(t_end);
    out.series.f_hat.push_back(spectrum::bin_frequency(best, cfg.fs, cfg.fft_len));
    out.series.reconstruction.push_back(
        mean + 2.0 / static_cast<double>(cfg.window_len) * std::real(Y[best] * rot));
    out.series.undetermined.push_back(best_psd <= 0.0);
    if (cfg.keep_spectrogram) {
      out.spectrogram.window_end.push_back(t_end);
      auto& row = out.spectrogram.psd.emplace_back();
      for (std::size_t l = lo; l <= hi; ++l) row.push_back(std::norm(Y[l]));
    }
  }
  return out;
}

}  // namespace rssb::est
