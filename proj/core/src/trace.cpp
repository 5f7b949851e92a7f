// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/trace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rssb/error.hpp"

namespace rssb {

void RssTrace::validate() const {
  if (timestamps.size() != values.size()) {
    throw ValidationError("trace: timestamps and values differ in length");
  }
  for (std::size_t k = 1; k < timestamps.size(); ++k) {
    if (!(timestamps[k] > timestamps[k - 1])) {
      throw ValidationError("trace: timestamps must be strictly increasing (sample " +
                            std::to_string(k) + ")");
    }
  }
}

double RssTrace::median_interval() const {
  if (timestamps.size() < 2) return 0.0;
  std::vector<double> dt(timestamps.size() - 1);
  for (std::size_t k = 1; k < timestamps.size(); ++k) dt[k - 1] = timestamps[k] - timestamps[k - 1];
  auto mid = dt.begin() + static_cast<std::ptrdiff_t>(dt.size() / 2);
  std::nth_element(dt.begin(), mid, dt.end());
  return *mid;
}

bool RssTrace::is_uniform(double rel_tol) const {
  if (timestamps.size() < 3) return true;
  const double dt0 = timestamps[1] - timestamps[0];
  for (std::size_t k = 2; k < timestamps.size(); ++k) {
    if (std::abs((timestamps[k] - timestamps[k - 1]) - dt0) > rel_tol * dt0) return false;
  }
  return true;
}

}  // namespace rssb
