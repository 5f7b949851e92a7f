// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace rssb::special {

/// Bessel function of the first kind J_m(x), m >= 0, any finite x.
double bessel_j(int m, double x);

/// Modified Bessel function of the first kind I_n(x), n >= 0, any finite x.
double bessel_i(int n, double x);

/// Dilogarithm Li2(x) on [0, 1]. Absolute error below 1e-14.
double dilog(double x);

}  // namespace rssb::special
