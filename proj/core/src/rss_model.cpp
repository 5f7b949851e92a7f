// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/rss_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rssb/error.hpp"
#include "rssb/special_functions.hpp"

namespace rssb::model {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDbPerNeperHalf = 0.5 * kDbPerNeper;  // 10 log10(e)

void require_sub_unity(double G) {
  if (!(G >= 0.0 && G < 1.0)) throw DomainError("effective reflection coefficient must lie in [0, 1)");
}

}  // namespace

ReflectionState reflection_state(const geometry::LinkGeometry& link,
                                 const geometry::ReflectorMotion& motion,
                                 const geometry::MediumParams& medium) {
  ReflectionState s;
  s.excess0 = geometry::excess_path(link, motion.p0);
  s.grad_proj = geometry::gradient_projection(link, motion.p0, motion.direction);
  s.velocity_proj = geometry::gradient_projection(link, motion.p0, motion.velocity);
  s.gamma = geometry::fresnel_coefficient(geometry::incidence_cosine(link, motion.p0),
                                          medium.rel_permittivity);
  s.G = geometry::effective_reflection(s.gamma, s.excess0, link.length(),
                                       medium.pathloss_exponent);
  s.amplitude_eff = kTwoPi * motion.amplitude * s.grad_proj / medium.wavelength;
  s.phase = kTwoPi * s.excess0 / medium.wavelength;
  s.kappa = 2.0 * s.G / (1.0 + s.G * s.G);
  s.wavelength = medium.wavelength;
  s.breath_freq = motion.breath_freq;
  return s;
}

double ratio_exact(double G, double excess, double wavelength) {
  require_sub_unity(G);
  return 1.0 + G * G - 2.0 * G * std::cos(kTwoPi * excess / wavelength);
}

double ratio_db_exact(double G, double excess, double wavelength) {
  return kDbPerNeperHalf * std::log(ratio_exact(G, excess, wavelength));
}

double ratio_db_series(double G, double excess, double wavelength, int order) {
  require_sub_unity(G);
  const double phi = kTwoPi * excess / wavelength;
  double sum = 0.0;
  double power = 1.0;
  for (int i = 1; i <= order; ++i) {
    power *= G;
    sum += power / i * std::cos(i * phi);
  }
  return -kDbPerNeper * sum;
}

std::vector<double> log_series_coefficients(double G, int max_order) {
  require_sub_unity(G);
  if (max_order < 0) throw DomainError("series order must be >= 0");
  std::vector<double> b(static_cast<std::size_t>(max_order) + 1);
  b[0] = -std::log1p(G * G);
  double power = 1.0;
  for (int i = 1; i <= max_order; ++i) {
    power *= G;
    b[static_cast<std::size_t>(i)] = -2.0 * power / i;
  }
  return b;
}

double HarmonicModel::coefficient(int m) const {
  if (m == 0) return dc;
  if (m < 0 || m > truncation()) return 0.0;
  return coeffs[static_cast<std::size_t>(m - 1)];
}

double HarmonicModel::evaluate(double t) const {
  double value = dc;
  for (int m = 1; m <= truncation(); ++m) {
    const double arg = kTwoPi * m * fundamental * t;
    value += coeffs[static_cast<std::size_t>(m - 1)] * ((m % 2) ? std::sin(arg) : std::cos(arg));
  }
  return value;
}

HarmonicModel linear_harmonics(const ReflectionState& state, int harmonics) {
  if (harmonics < 1) throw DomainError("linear_harmonics: need at least one harmonic");
  require_sub_unity(state.G);
  const double G = state.G;
  const double a = state.amplitude_eff;
  HarmonicModel out;
  out.scale = Scale::kLinear;
  out.fundamental = state.breath_freq;
  out.dc = 1.0 + G * G - 2.0 * G * special::bessel_j(0, a) * std::cos(state.phase);
  out.coeffs.resize(static_cast<std::size_t>(harmonics));
  for (int m = 1; m <= harmonics; ++m) {
    const double jm = special::bessel_j(m, a);
    out.coeffs[static_cast<std::size_t>(m - 1)] =
        (m % 2) ? 4.0 * G * jm * std::sin(state.phase) : -4.0 * G * jm * std::cos(state.phase);
  }
  return out;
}

HarmonicModel log_harmonics(const ReflectionState& state, int harmonics, int series_order) {
  if (harmonics < 1) throw DomainError("log_harmonics: need at least one harmonic");
  if (series_order < 1) throw DomainError("log_harmonics: series order must be >= 1");
  require_sub_unity(state.G);
  HarmonicModel out;
  out.scale = Scale::kLog;
  out.fundamental = state.breath_freq;
  out.series_order = series_order;
  out.coeffs.assign(static_cast<std::size_t>(harmonics), 0.0);

  double power = 1.0;
  for (int i = 1; i <= series_order; ++i) {
    power *= state.G;
    const double weight = power / i;
    const double ia = i * state.amplitude_eff;
    const double s = std::sin(i * state.phase);
    const double c = std::cos(i * state.phase);
    out.dc += -kDbPerNeper * special::bessel_j(0, ia) * weight * c;
    for (int m = 1; m <= harmonics; ++m) {
      const double jm = special::bessel_j(m, ia);
      out.coeffs[static_cast<std::size_t>(m - 1)] +=
          (m % 2) ? 2.0 * kDbPerNeper * jm * weight * s : -2.0 * kDbPerNeper * jm * weight * c;
    }
  }
  return out;
}

MovingHarmonicModel moving_harmonics(const ReflectionState& state, int harmonics,
                                     int series_order, Scale scale) {
  MovingHarmonicModel out;
  out.model = scale == Scale::kLinear ? linear_harmonics(state, harmonics)
                                      : log_harmonics(state, harmonics, series_order);
  out.center_shift = state.velocity_proj / state.wavelength;
  const double f = state.breath_freq;
  const double G = state.G;
  if (scale == Scale::kLinear) {
    for (int m = -harmonics; m <= harmonics; ++m) {
      const double jm = (m < 0 && (-m) % 2 ? -1.0 : 1.0) * special::bessel_j(std::abs(m), state.amplitude_eff);
      out.tones.push_back({out.center_shift + m * f, -2.0 * G * jm, m, 1});
    }
    return out;
  }
  double power = 1.0;
  for (int i = 1; i <= series_order; ++i) {
    power *= G;
    for (int m = -harmonics; m <= harmonics; ++m) {
      const double jm = (m < 0 && (-m) % 2 ? -1.0 : 1.0) *
                        special::bessel_j(std::abs(m), i * state.amplitude_eff);
      out.tones.push_back({i * out.center_shift + m * f, -kDbPerNeper * jm * power / i, m, i});
    }
  }
  return out;
}

double signal_energy_total(double G) {
  require_sub_unity(G);
  return special::dilog(G * G);
}

double signal_energy_approx(const HarmonicModel& model) {
  if (model.truncation() < 2) throw DomainError("signal_energy_approx: model needs M >= 2");
  const double c1 = model.coefficient(1);
  const double c2 = model.coefficient(2);
  return c1 * c1 + c2 * c2;
}

int carson_truncation(double amplitude_eff, double breath_freq) {
  if (!std::isfinite(amplitude_eff)) throw DomainError("carson_truncation: non-finite amplitude");
  if (!(breath_freq > 0.0)) throw DomainError("carson_truncation: frequency must be > 0");
  if (amplitude_eff == 0.0) return 1;
  const double a = std::abs(amplitude_eff);
  // sum_{m>=1} J_m^2 = (1 - J_0^2) / 2.
  const double j0 = special::bessel_j(0, a);
  const double total = 0.5 * (1.0 - j0 * j0);
  double partial = 0.0;
  int m = 0;
  while (partial < 0.98 * total) {
    ++m;
    const double jm = special::bessel_j(m, a);
    partial += jm * jm;
  }
  return std::max(m, 2);
}

}  // namespace rssb::model
