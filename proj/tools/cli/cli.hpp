// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rssb/simulator.hpp"

namespace rssb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Runs `rssb <args...>` (args excludes the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in scenarios: bed_like, second_harmonic, harmonic_rich, reference, fig3.
sim::ScenarioConfig preset_scenario(const std::string& name);
const std::vector<std::string>& preset_names();

/// Parses "lo:hi:step" (inclusive) or "a,b,c".
std::vector<double> parse_grid(const std::string& text);

}  // namespace rssb::cli
