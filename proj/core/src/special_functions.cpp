// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rssb/error.hpp"

namespace rssb::special {
namespace {

void check_order(int order, const char* name) {
  if (order < 0) throw DomainError(std::string(name) + ": order must be >= 0");
}

void check_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw DomainError(std::string(name) + ": argument must be finite");
}

double parity_sign(int order, double x) { return (x < 0.0 && (order % 2) != 0) ? -1.0 : 1.0; }

// Li2(x) = sum x^k / k^2, used for x <= 1/2 where it converges geometrically.
double dilog_series(double x) {
  double sum = 0.0;
  double power = x;
  for (int k = 1; k < 200; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18) break;
    power *= x;
  }
  return sum;
}

}  // namespace

double bessel_j(int m, double x) {
  check_order(m, "bessel_j");
  check_finite(x, "bessel_j");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  return parity_sign(m, x) * std::cyl_bessel_j(static_cast<double>(m), std::abs(x));
}

double bessel_i(int n, double x) {
  check_order(n, "bessel_i");
  check_finite(x, "bessel_i");
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  return parity_sign(n, x) * std::cyl_bessel_i(static_cast<double>(n), std::abs(x));
}

double dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("dilog: argument must lie in [0, 1]");
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  if (x == 1.0) return kZeta2;
  if (x <= 0.5) return dilog_series(x);
  // Euler reflection: Li2(x) + Li2(1 - x) = pi^2/6 - ln(x) ln(1 - x).
  return kZeta2 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

}  // namespace rssb::special
