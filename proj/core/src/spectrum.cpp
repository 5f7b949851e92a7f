// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/spectrum.hpp"

#include <unsupported/Eigen/FFT>

#include "rssb/error.hpp"

namespace rssb::spectrum {

struct RealFft::Impl {
  Eigen::FFT<double> fft;
  std::vector<double> buffer;
  std::vector<std::complex<double>> full;
};

RealFft::RealFft(std::size_t nfft) : nfft_(nfft), impl_(std::make_unique<Impl>()) {
  if (nfft == 0) throw ValidationError("fft length must be > 0");
  impl_->fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  impl_->buffer.assign(nfft, 0.0);
}

RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

void RealFft::transform(std::span<const double> x, std::vector<std::complex<double>>& out) {
  if (x.size() > nfft_) throw ValidationError("fft input longer than transform length");
  std::fill(impl_->buffer.begin(), impl_->buffer.end(), 0.0);
  std::copy(x.begin(), x.end(), impl_->buffer.begin());
  impl_->fft.fwd(impl_->full, impl_->buffer);
  out.assign(impl_->full.begin(), impl_->full.begin() + static_cast<std::ptrdiff_t>(nfft_ / 2 + 1));
}

std::vector<double> periodogram(std::span<const double> x, std::size_t nfft) {
  RealFft fft(nfft);
  std::vector<std::complex<double>> bins;
  fft.transform(x, bins);
  std::vector<double> power(bins.size());
  for (std::size_t l = 0; l < bins.size(); ++l) power[l] = std::norm(bins[l]);
  return power;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace rssb::spectrum
