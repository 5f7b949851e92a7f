// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace rssb::spectrum {

/// Zero-padded real-input FFT of fixed length. Reuses its plan across calls.
class RealFft {
 public:
  explicit RealFft(std::size_t nfft);
  ~RealFft();
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;

  std::size_t size() const { return nfft_; }
  /// Bins 0..nfft/2 of the DFT of x zero-padded to nfft. x.size() must be <= nfft.
  void transform(std::span<const double> x, std::vector<std::complex<double>>& out);

 private:
  struct Impl;
  std::size_t nfft_;
  std::unique_ptr<Impl> impl_;
};

/// |Y[l]|^2 for l = 0..nfft/2.
std::vector<double> periodogram(std::span<const double> x, std::size_t nfft);

std::size_t next_pow2(std::size_t n);

inline double bin_frequency(std::size_t l, double fs, std::size_t nfft) {
  return static_cast<double>(l) * fs / static_cast<double>(nfft);
}

}  // namespace rssb::spectrum
