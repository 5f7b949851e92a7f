// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "rssb/error.hpp"
#include "rssb/io.hpp"
#include "rssb/scenarios.hpp"

namespace rssb::io {
namespace {

std::string golden(const std::string& name) { return read_file(std::string(RSSB_SOURCE_DIR) + "/tests/golden/" + name); }

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

std::string expect_validation_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no ValidationError";
  return {};
}

TEST(Traces, RoundTrip) {
  auto c = scenarios::bed_like(4);
  c.channels_hz = {2.405e9, 2.41e9};
  c.noise_std = 0.8;
  c.drop_prob = 0.1;
  c.duration = 10.0;
  const auto traces = sim::synthesize(c);
  std::stringstream ss;
  write_traces(ss, traces);
  const auto back = read_traces(ss);
  ASSERT_EQ(back.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(back[i].channel_id, traces[i].channel_id);
    EXPECT_EQ(back[i].timestamps, traces[i].timestamps);
    EXPECT_EQ(back[i].values, traces[i].values);
  }
}

TEST(Traces, GoldenSchema) {
  std::stringstream ss;
  write_traces(ss, {});
  EXPECT_EQ(first_line(ss.str()), first_line(golden("trace.csv")));
  std::istringstream is(golden("trace.csv"));
  const auto t = read_traces(is);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[1].channel_id, 1);
  EXPECT_EQ(t[1].values, (std::vector<double>{0.0, 1.0, 1.0}));
  EXPECT_DOUBLE_EQ(t[0].timestamps[2], 0.064);
}

TEST(Traces, MalformedRowNamesTheLine) {
  std::istringstream is("time_s,channel_id,rss_db\n0,0,1\n0.032,0,abc\n");
  EXPECT_NE(expect_validation_error([&] { read_traces(is); }).find("line 3"), std::string::npos);
  std::istringstream short_row("time_s,channel_id,rss_db\n0,0\n");
  EXPECT_NE(expect_validation_error([&] { read_traces(short_row); }).find("line 2"), std::string::npos);
  std::istringstream bad_header("t,c,v\n0,0,1\n");
  EXPECT_THROW(read_traces(bad_header), ValidationError);
  std::istringstream backwards("time_s,channel_id,rss_db\n1,0,1\n0.5,0,1\n");
  EXPECT_NE(expect_validation_error([&] { read_traces(backwards); }).find("line 3"), std::string::npos);
}

TEST(Estimates, RoundTripAndGolden) {
  std::istringstream is(golden("estimates.csv"));
  const auto s = read_estimates(is);
  EXPECT_EQ(s.method, "dft");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s.f_hat[2], 0.213623046875);
  std::stringstream ss;
  write_estimates(ss, s);
  EXPECT_EQ(ss.str(), golden("estimates.csv"));
}

TEST(Reconstruction, GoldenSchema) {
  std::istringstream is(golden("reconstruction.csv"));
  const auto r = read_reconstruction(is);
  ASSERT_EQ(r.z.size(), 3u);
  est::EstimateSeries s;
  s.timestamps = r.timestamps;
  s.f_hat.assign(3, 0.2);
  s.reconstruction = r.r_hat;
  std::stringstream ss;
  write_reconstruction(ss, s, r.z);
  EXPECT_EQ(ss.str(), golden("reconstruction.csv"));
}

TEST(States, GoldenSchema) {
  std::istringstream is(golden("states.csv"));
  const auto s = read_states(is);
  ASSERT_EQ(s.states.size(), 2u);
  EXPECT_EQ(s.states[1].size(), 6u);
  EXPECT_DOUBLE_EQ(s.states[1][2], -0.0043);
  std::stringstream ss;
  write_states(ss, s);
  EXPECT_EQ(first_line(ss.str()), first_line(golden("states.csv")));
  EXPECT_EQ(eval::harmonic_energy_fractions(s).size(), 2u);
}

TEST(Sweep, GoldenSchema) {
  std::vector<eval::SweepRow> rows{{-16.0, -10.5, eval::Method::kDft, 20.8, 25},
                                   {-16.0, -10.5, eval::Method::kKf, 20.0, 25},
                                   {-16.0, -10.5, eval::Method::kGp, 13.83, 25}};
  std::stringstream ss;
  write_sweep(ss, rows);
  EXPECT_EQ(ss.str(), golden("sweep.csv"));
}

TEST(Metrics, GoldenKeys) {
  const auto want = nlohmann::json::parse(golden("metrics.json"));
  const auto got = nlohmann::json::parse(metrics_to_json(eval::MetricsReport{}));
  std::set<std::string> a, b;
  for (auto it = want.begin(); it != want.end(); ++it) a.insert(it.key());
  for (auto it = got.begin(); it != got.end(); ++it) b.insert(it.key());
  EXPECT_EQ(a, b);
  EXPECT_TRUE(got["eps_z_db"].is_null());
}

TEST(Scenario, RoundTrip) {
  const auto c = scenarios::harmonic_rich(3);
  const auto f = parse_scenario(scenario_to_json(c, -5.0));
  EXPECT_EQ(f.target_snr_db, -5.0);
  EXPECT_EQ(scenario_to_json(f.config), scenario_to_json(c));
}

TEST(Scenario, ShippedFiles) {
  const auto bed = load_scenario(std::string(RSSB_SOURCE_DIR) + "/tools/configs/bed_like.json");
  EXPECT_EQ(bed.target_snr_db, -5.0);
  EXPECT_EQ(scenario_to_json(bed.config), scenario_to_json(scenarios::bed_like()));
  const auto fig3 = load_scenario(std::string(RSSB_SOURCE_DIR) + "/tools/configs/fig3.json");
  EXPECT_EQ(fig3.config.channel_count(), 16u);
  EXPECT_EQ(fig3.config.motion.p0, (geometry::Point2{0.0, 0.25}));
  EXPECT_EQ(fig3.config.motion.amplitude, 0.01);
}

TEST(Scenario, ErrorsNameTheField) {
  const std::string base = scenario_to_json(scenarios::bed_like());
  EXPECT_NE(expect_validation_error([&] { parse_scenario(base, {{"motion.amplitude", "\"big\""}}); })
                .find("motion.amplitude"),
            std::string::npos);
  EXPECT_NE(expect_validation_error([&] { parse_scenario(base, {{"duration", "0"}}); }).find("duration"),
            std::string::npos);
  EXPECT_NE(expect_validation_error([&] { parse_scenario(base, {{"motion.speed", "1"}}); }).find("speed"),
            std::string::npos);
  EXPECT_NE(expect_validation_error([&] { parse_scenario("{\n  \"fs\": 31.25,\n  \"duration\": ]\n}"); })
                .find("line 3"),
            std::string::npos);
}

TEST(Scenario, Overrides) {
  const auto f = parse_scenario(scenario_to_json(scenarios::bed_like()),
                                {{"motion.amplitude", "0.02"}, {"seed", "9"}, {"geometry_model", "linearized"}});
  EXPECT_EQ(f.config.motion.amplitude, 0.02);
  EXPECT_EQ(f.config.seed, 9u);
  EXPECT_EQ(f.config.geometry_model, sim::GeometryModel::kLinearized);
  EXPECT_EQ(parse_override("a.b=c=d"), (std::pair<std::string, std::string>{"a.b", "c=d"}));
  EXPECT_THROW(parse_override("novalue"), ValidationError);
}

TEST(EstimatorConfigs, ShippedDefaultsMatch) {
  const auto shipped = load_estimator_configs(std::string(RSSB_SOURCE_DIR) + "/tools/configs/estimators.json");
  EXPECT_EQ(estimator_configs_to_json(shipped), estimator_configs_to_json(eval::EstimatorConfigs{}));
}

TEST(EstimatorConfigs, BinGridAndErrors) {
  const auto c = parse_estimator_configs("{\"kf\": {\"n_bins\": 5, \"f_min\": 0.1, \"f_max\": 0.5}}");
  ASSERT_EQ(c.kf.bin_freqs.size(), 5u);
  EXPECT_NEAR(c.kf.bin_freqs[4], 0.5, 1e-15);
  EXPECT_NE(expect_validation_error([] { parse_estimator_configs("{\"gp\": {\"harmonics\": 0}}"); }).find("harmonics"),
            std::string::npos);
  EXPECT_THROW(parse_estimator_configs("{\"mystery\": {}}"), ValidationError);
  const auto o = parse_estimator_configs("{}", {{"gp.harmonics", "3"}});
  EXPECT_EQ(o.gp.harmonics, 3);
}

}  // namespace
}  // namespace rssb::io
