// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "rssb/simulator.hpp"

namespace rssb::scenarios {

/// Link (-1,0)-(1,0), lambda 0.125 m, eta 2, eps_r 1.5, reflector on the mid-line
/// moving along (0,-1) with A = 0.01 m.
sim::ScenarioConfig reference_link();

/// Person above a bed: Delta_0 = 3 lambda / 4, so the first harmonic dominates.
/// A = 2.5 mm, 12 bpm, 120 s at 31.25 Hz, one channel, 1 dB quantization, noise off.
sim::ScenarioConfig bed_like(std::uint64_t seed = 1);

/// Bed-like trace in a fade, Delta_0 = lambda, with A = 1 cm: odd harmonics
/// vanish and the trace moves at 2f.
sim::ScenarioConfig second_harmonic(std::uint64_t seed = 1);

/// Bed-like trace just off a fade: psi = 2 pi + U[0.02 pi, 0.08 pi] drawn from the
/// seed, A = 1 cm. The first harmonic holds roughly 35-90 % of the energy.
sim::ScenarioConfig harmonic_rich(std::uint64_t seed = 1);

/// Delta_0 = 3 lambda / 2 on the 16 default channels (or one channel at 0.125 m).
sim::ScenarioConfig double_frequency(bool all_channels = true);

/// Reflector placed on the mid-line at the given excess path.
void place_at_excess(sim::ScenarioConfig& config, double excess);

}  // namespace rssb::scenarios
