// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cli.hpp"
#include "figures.hpp"
#include "json.hpp"
#include "rssb/error.hpp"
#include "rssb/evaluation.hpp"
#include "rssb/io.hpp"
#include "rssb/scenarios.hpp"

#ifndef RSSB_VERSION
#define RSSB_VERSION "0.0.0"
#endif

namespace rssb::cli {
namespace {

using nlohmann::json;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  unsigned jobs{1};
  std::vector<std::string> set;
};

void add_common(CLI::App* cmd, Common& c, bool out_required = true) {
  cmd->add_option("--config", c.config, "JSON configuration file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "Random seed (overrides the configuration)");
  auto* out = cmd->add_option("--out", c.out, "Output path");
  if (out_required) out->required();
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--set", c.set, "Override a configuration field, key=value (repeatable)");
}

bool is_estimator_key(const std::string& key) {
  for (const char* p : {"filter.", "dft.", "kf.", "gp."}) {
    if (key.rfind(p, 0) == 0) return true;
  }
  return false;
}

// Splits --set values into scenario and estimator overrides.
std::pair<io::Overrides, io::Overrides> split_overrides(const std::vector<std::string>& set) {
  io::Overrides scenario, estimators;
  for (const auto& s : set) {
    auto kv = io::parse_override(s);
    (is_estimator_key(kv.first) ? estimators : scenario).push_back(std::move(kv));
  }
  return {scenario, estimators};
}

json overrides_json(const std::vector<std::string>& set) {
  json j = json::object();
  for (const auto& s : set) {
    auto [k, v] = io::parse_override(s);
    j[k] = v;
  }
  return j;
}

void put_file(const std::string& path, const std::string& content) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  io::write_file(path, content);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Manifest {
  std::string command;
  std::string config;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> args;
  std::vector<std::string> set;
  json resolved = json::object();
  json extra = json::object();

  void write(const std::string& path) const {
    json j;
    j["command"] = command;
    j["config"] = config.empty() ? json(nullptr) : json(config);
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["seed"] = seed ? json(*seed) : json(nullptr);
    j["tool_version"] = RSSB_VERSION;
    j["timestamp"] = utc_timestamp();
    j["args"] = args;
    j["overrides"] = overrides_json(set);
    j["resolved"] = resolved;
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    put_file(path, j.dump(2) + "\n");
  }
};

std::string manifest_path(const std::string& out) { return out + ".manifest.json"; }

sim::ScenarioConfig load_or_preset(const std::string& config, const std::string& preset,
                                   const io::Overrides& overrides, std::optional<double>* target) {
  io::ScenarioFile f = config.empty()
                           ? io::parse_scenario(io::scenario_to_json(preset_scenario(preset)), overrides)
                           : io::load_scenario(config, overrides);
  if (target) *target = f.target_snr_db;
  return f.config;
}

eval::EstimatorConfigs load_estimators(const std::string& path, const io::Overrides& overrides) {
  if (path.empty()) {
    return io::parse_estimator_configs(io::estimator_configs_to_json(eval::EstimatorConfigs{}), overrides);
  }
  return io::load_estimator_configs(path, overrides);
}

std::vector<RssTrace> load_traces(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError("cannot open trace file '" + path + "'");
  return io::read_traces(is);
}

const RssTrace& pick_channel(const std::vector<RssTrace>& traces, std::optional<int> channel) {
  if (traces.empty()) throw ValidationError("trace file holds no samples");
  if (!channel) return traces.front();
  for (const auto& t : traces) {
    if (t.channel_id == *channel) return t;
  }
  throw ValidationError("channel " + std::to_string(*channel) + " not present in the trace file");
}

template <class F>
void write_stream(const std::string& path, F&& fn) {
  std::ostringstream os;
  os.precision(10);
  fn(os);
  put_file(path, os.str());
}

double nominal_rate(const RssTrace& trace, double requested) {
  if (requested > 0.0) return requested;
  const double dt = trace.median_interval();
  if (!(dt > 0.0)) throw ValidationError("cannot infer the sampling rate from the trace");
  return 1.0 / dt;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  Common c;
  std::string preset{"bed_like"};
};

int cmd_simulate(const SimulateArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  auto [scn_over, est_over] = split_overrides(a.c.set);
  if (!est_over.empty()) throw ValidationError("simulate: '" + est_over.front().first + "' is not a scenario field");
  std::optional<double> target;
  auto cfg = load_or_preset(a.c.config, a.preset, scn_over, &target);
  if (a.c.seed) cfg.seed = *a.c.seed;
  if (target) {
    cfg.noise_std = eval::calibrate_noise_std(cfg, *target, eval::SnrTarget::kPeriodogramEstimate);
  }
  cfg.validate();
  const auto traces = sim::synthesize(cfg);
  write_stream(a.c.out, [&](std::ostream& os) { io::write_traces(os, traces); });

  Manifest m{"simulate", a.c.config, {}, {a.c.out}, cfg.seed, args, a.c.set};
  m.resolved = json::parse(io::scenario_to_json(cfg, target));
  m.write(manifest_path(a.c.out));
  out << "wrote " << traces.size() << " channel(s), " << (traces.empty() ? 0 : traces.front().size())
      << " samples each, noise_std " << cfg.noise_std << " dB -> " << a.c.out << "\n";
  return kExitOk;
}

struct EstimateArgs {
  Common c;
  std::string trace;
  std::string method;
  std::optional<int> channel;
  double fs{0.0};
  std::string recon, states, spectrogram;
};

int cmd_estimate(const EstimateArgs& a, const std::vector<std::string>& args, std::ostream& out,
                 std::ostream& err) {
  const auto method = eval::parse_method(a.method);
  auto [scn_over, est_over] = split_overrides(a.c.set);
  if (!scn_over.empty()) throw ValidationError("estimate: '" + scn_over.front().first + "' is not an estimator field");
  auto cfg = load_estimators(a.c.config, est_over);
  if (!a.states.empty() && method != eval::Method::kGp) throw ValidationError("--states needs --method gp");
  if (!a.spectrogram.empty()) {
    if (method != eval::Method::kDft) throw ValidationError("--spectrogram needs --method dft");
    cfg.dft.keep_spectrogram = true;
  }
  const auto traces = load_traces(a.trace);
  const auto& trace = pick_channel(traces, a.channel);
  const double fs = nominal_rate(trace, a.fs);
  const auto r = eval::run_estimator(trace, method, cfg, fs);
  if (r.resampled) {
    err << "warning: uneven timestamps; resampled to " << fs << " Hz for the periodogram\n";
  }
  write_stream(a.c.out, [&](std::ostream& os) { io::write_estimates(os, r.series); });
  std::vector<std::string> outputs{a.c.out};
  if (!a.recon.empty()) {
    write_stream(a.recon, [&](std::ostream& os) { io::write_reconstruction(os, r.series, r.z_aligned); });
    outputs.push_back(a.recon);
  }
  if (!a.states.empty()) {
    write_stream(a.states, [&](std::ostream& os) { io::write_states(os, r.series); });
    outputs.push_back(a.states);
  }
  if (!a.spectrogram.empty()) {
    write_stream(a.spectrogram, [&](std::ostream& os) { io::write_spectrogram(os, r.spectrogram); });
    outputs.push_back(a.spectrogram);
  }

  Manifest m{"estimate", a.c.config, {a.trace}, outputs, a.c.seed, args, a.c.set};
  m.resolved = json::parse(io::estimator_configs_to_json(cfg));
  m.extra["method"] = eval::method_name(method);
  m.extra["channel_id"] = trace.channel_id;
  m.extra["fs_hz"] = fs;
  m.extra["resampled"] = r.resampled;
  m.extra["reconditioned"] = r.series.reconditioned;
  m.write(manifest_path(a.c.out));
  if (r.series.reconditioned) err << "warning: covariance repaired to stay positive definite\n";
  out << std::fixed << std::setprecision(2) << "final f_hat: " << r.series.f_hat.back() * eval::kBpmPerHz
      << " bpm (" << r.series.size() << " estimates, channel " << trace.channel_id << ")\n";
  return kExitOk;
}

struct EvaluateArgs {
  Common c;
  std::string estimates;
  std::string trace;
  double f_true{0.0};
  std::optional<int> channel;
  double fs{0.0};
  double t_split{30.0};
  double outlier_bpm{3.0};
  std::string recon, states;
};

int cmd_evaluate(const EvaluateArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  if (!(a.f_true > 0.0)) throw ValidationError("--f-true must be > 0 Hz");
  auto [scn_over, est_over] = split_overrides(a.c.set);
  if (!scn_over.empty()) throw ValidationError("evaluate: '" + scn_over.front().first + "' is not an estimator field");
  const auto cfg = load_estimators(a.c.config, est_over);

  est::EstimateSeries series;
  {
    std::ifstream is(a.estimates);
    if (!is) throw ValidationError("cannot open estimates file '" + a.estimates + "'");
    series = io::read_estimates(is);
  }
  if (series.empty()) throw ValidationError("estimates file holds no rows");
  const auto traces = load_traces(a.trace);
  const auto& trace = pick_channel(traces, a.channel);
  const double slack = trace.median_interval();
  if (series.timestamps.front() < trace.timestamps.front() - slack ||
      series.timestamps.back() > trace.timestamps.back() + slack) {
    throw ValidationError("estimate times [" + std::to_string(series.timestamps.front()) + ", " +
                          std::to_string(series.timestamps.back()) + "] s fall outside the trace [" +
                          std::to_string(trace.timestamps.front()) + ", " +
                          std::to_string(trace.timestamps.back()) + "] s");
  }

  const double fs = nominal_rate(trace, a.fs);
  const RssTrace uniform = trace.is_uniform(1e-3) ? trace : dsp::resample_uniform(trace, fs);
  const auto pre = dsp::preprocess(uniform, cfg.filter, fs);

  std::vector<std::string> inputs{a.estimates, a.trace};
  std::vector<double> z;
  if (!a.recon.empty()) {
    std::ifstream is(a.recon);
    if (!is) throw ValidationError("cannot open reconstruction file '" + a.recon + "'");
    const auto rec = io::read_reconstruction(is);
    if (rec.r_hat.size() != series.size()) {
      throw ValidationError("reconstruction has " + std::to_string(rec.r_hat.size()) + " rows, estimates have " +
                            std::to_string(series.size()));
    }
    series.reconstruction = rec.r_hat;
    z = rec.z;
    inputs.push_back(a.recon);
  }
  if (!a.states.empty()) {
    std::ifstream is(a.states);
    if (!is) throw ValidationError("cannot open states file '" + a.states + "'");
    series.states = io::read_states(is).states;
    inputs.push_back(a.states);
  }
  const auto report = eval::evaluate(series, a.f_true, z, pre.y, fs, a.t_split, a.outlier_bpm);
  put_file(a.c.out, io::metrics_to_json(report));

  Manifest m{"evaluate", a.c.config, inputs, {a.c.out}, a.c.seed, args, a.c.set};
  m.resolved = json::parse(io::estimator_configs_to_json(cfg));
  m.extra["f_true_hz"] = a.f_true;
  m.extra["channel_id"] = trace.channel_id;
  m.write(manifest_path(a.c.out));
  out << std::fixed << std::setprecision(3) << report.method << ": eps_f " << report.eps_f << " bpm, eps_% "
      << report.eps_pct << "\n";
  return kExitOk;
}

struct SweepArgs {
  Common c;
  std::string preset{"bed_like"};
  std::string estimators;
  std::string grid{"-16:-2:2"};
  std::size_t seeds{25};
  std::string methods{"dft,kf,gp"};
  double t_from{30.0};
};

std::vector<eval::Method> parse_methods(const std::string& text) {
  std::vector<eval::Method> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(eval::parse_method(item));
  }
  if (out.empty()) throw ValidationError("--methods is empty");
  return out;
}

eval::SweepConfig sweep_config(const SweepArgs& a) {
  auto [scn_over, est_over] = split_overrides(a.c.set);
  eval::SweepConfig s;
  s.scenario = load_or_preset(a.c.config, a.preset, scn_over, nullptr);
  s.estimators = load_estimators(a.estimators, est_over);
  s.snr_grid_db = parse_grid(a.grid);
  s.seeds = a.seeds;
  s.seed_base = a.c.seed.value_or(1);
  s.methods = parse_methods(a.methods);
  s.t_from = a.t_from;
  s.jobs = a.c.jobs;
  return s;
}

json sweep_rows_json(const std::vector<eval::SweepRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) {
    j.push_back({{"snr_db", r.snr_db},
                 {"measured_snr_db", r.measured_snr_db},
                 {"method", eval::method_name(r.method)},
                 {"hit_ratio_pct", r.hit_ratio_pct},
                 {"traces", r.traces}});
  }
  return j;
}

int cmd_sweep(const SweepArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const auto s = sweep_config(a);
  const auto rows = eval::snr_sweep(s);
  write_stream(a.c.out, [&](std::ostream& os) { io::write_sweep(os, rows); });

  std::vector<std::string> inputs;
  if (!a.estimators.empty()) inputs.push_back(a.estimators);
  Manifest m{"sweep", a.c.config, inputs, {a.c.out}, s.seed_base, args, a.c.set};
  m.resolved = {{"scenario", json::parse(io::scenario_to_json(s.scenario))},
                {"estimators", json::parse(io::estimator_configs_to_json(s.estimators))},
                {"snr_grid_db", s.snr_grid_db},
                {"seeds", s.seeds},
                {"t_from_s", s.t_from}};
  m.extra["rows"] = sweep_rows_json(rows);
  m.write(manifest_path(a.c.out));
  for (const auto& r : rows) {
    out << std::fixed << std::setprecision(1) << std::setw(6) << r.snr_db << " dB (measured "
        << std::setw(6) << r.measured_snr_db << ")  " << std::setw(3) << eval::method_name(r.method) << "  "
        << std::setprecision(2) << r.hit_ratio_pct << " %\n";
  }
  return kExitOk;
}

struct FiguresArgs {
  Common c;
  std::vector<std::string> names;
  std::string grid{"-16:-2:2"};
  std::size_t seeds{25};
};

int cmd_figures(const FiguresArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> names = a.names;
  if (names.empty() || std::find(names.begin(), names.end(), "all") != names.end()) names = figure_names();
  for (const auto& n : names) {
    if (std::find(figure_names().begin(), figure_names().end(), n) == figure_names().end()) {
      throw ValidationError("unknown figure '" + n + "' (expected fig2c, fig3a, fig3b, fig6c or all)");
    }
  }
  auto [scn_over, est_over] = split_overrides(a.c.set);
  std::filesystem::create_directories(a.c.out);

  std::vector<std::string> outputs;
  json resolved = json::object();
  for (const auto& n : names) {
    Figure f;
    if (n == "fig6c") {
      SweepArgs sa;
      sa.c = a.c;
      sa.grid = a.grid;
      sa.seeds = a.seeds;
      const auto s = sweep_config(sa);
      resolved["fig6c"] = {{"scenario", json::parse(io::scenario_to_json(s.scenario))},
                           {"snr_grid_db", s.snr_grid_db},
                           {"seeds", s.seeds}};
      f = figure_fig6c(s);
    } else {
      const auto scenario = load_or_preset(a.c.config, n == "fig2c" ? "reference" : "fig3", scn_over, nullptr);
      resolved[n] = json::parse(io::scenario_to_json(scenario));
      f = n == "fig2c" ? figure_fig2c(scenario) : n == "fig3a" ? figure_fig3a(scenario) : figure_fig3b(scenario);
    }
    const auto base = (std::filesystem::path(a.c.out) / f.name).string();
    put_file(base + ".csv", f.csv);
    put_file(base + ".svg", f.plot.render());
    outputs.push_back(base + ".csv");
    outputs.push_back(base + ".svg");
    out << "wrote " << base << ".csv, " << base << ".svg\n";
  }
  Manifest m{"figures", a.c.config, {}, outputs, a.c.seed, args, a.c.set};
  m.resolved = resolved;
  m.write((std::filesystem::path(a.c.out) / "manifest.json").string());
  return kExitOk;
}

}  // namespace

sim::ScenarioConfig preset_scenario(const std::string& name) {
  if (name == "bed_like") return scenarios::bed_like();
  if (name == "second_harmonic") return scenarios::second_harmonic();
  if (name == "harmonic_rich") return scenarios::harmonic_rich();
  if (name == "reference") {
    auto c = scenarios::reference_link();
    scenarios::place_at_excess(c, 0.75 * c.medium.wavelength);
    return c;
  }
  if (name == "fig3") {
    auto c = scenarios::reference_link();
    c.motion.p0 = {0.0, 0.25};
    c.channels_hz = sim::default_channels();
    return c;
  }
  throw ValidationError("unknown preset '" + name + "'");
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"bed_like", "second_harmonic", "harmonic_rich", "reference", "fig3"};
  return names;
}

std::vector<double> parse_grid(const std::string& text) {
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw ValidationError("grid: bad number '" + s + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw ValidationError("grid: expected lo:hi:step");
    const double lo = number(parts[0]), hi = number(parts[1]), step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw ValidationError("grid: need step > 0 and hi >= lo");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) out.push_back(lo + step * static_cast<double>(i));
  } else {
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ',')) {
      if (!p.empty()) out.push_back(number(p));
    }
  }
  if (out.empty()) throw ValidationError("grid: empty");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Respiration-rate estimation from RSS: simulation, estimators, evaluation", "rssb"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(RSSB_VERSION));

  SimulateArgs sim_a;
  auto* sim_cmd = app.add_subcommand("simulate", "Synthesize RSS traces from a scenario");
  add_common(sim_cmd, sim_a.c);
  sim_cmd->add_option("--preset", sim_a.preset, "Built-in scenario when --config is absent")
      ->check(CLI::IsMember(preset_names()));

  EstimateArgs est_a;
  auto* est_cmd = app.add_subcommand("estimate", "Run an estimator on one channel of a trace file");
  add_common(est_cmd, est_a.c);
  est_cmd->add_option("trace", est_a.trace, "Trace CSV (time_s,channel_id,rss_db)")->required()->check(CLI::ExistingFile);
  est_cmd->add_option("--method", est_a.method, "dft, kf or gp")->required();
  est_cmd->add_option("--channel", est_a.channel, "Channel id (default: lowest)");
  est_cmd->add_option("--fs", est_a.fs, "Nominal sampling rate [Hz] (default: 1 / median interval)");
  est_cmd->add_option("--recon", est_a.recon, "Also write time_s,z_db,r_hat_db");
  est_cmd->add_option("--states", est_a.states, "Also write the GP state means");
  est_cmd->add_option("--spectrogram", est_a.spectrogram, "Also write the periodogram rows (dft)");

  EvaluateArgs ev_a;
  auto* ev_cmd = app.add_subcommand("evaluate", "Score estimates against the true rate");
  add_common(ev_cmd, ev_a.c);
  ev_cmd->add_option("estimates", ev_a.estimates, "Estimates CSV")->required()->check(CLI::ExistingFile);
  ev_cmd->add_option("trace", ev_a.trace, "Trace CSV the estimates came from")->required()->check(CLI::ExistingFile);
  ev_cmd->add_option("--f-true", ev_a.f_true, "True breathing frequency [Hz]")->required();
  ev_cmd->add_option("--channel", ev_a.channel, "Channel id (default: lowest)");
  ev_cmd->add_option("--fs", ev_a.fs, "Nominal sampling rate [Hz]");
  ev_cmd->add_option("--t-split", ev_a.t_split, "Early/late split [s]");
  ev_cmd->add_option("--outlier-bpm", ev_a.outlier_bpm, "Outlier threshold [bpm]");
  ev_cmd->add_option("--recon", ev_a.recon, "Reconstruction CSV from estimate --recon");
  ev_cmd->add_option("--states", ev_a.states, "States CSV from estimate --states");

  SweepArgs sw_a;
  auto* sw_cmd = app.add_subcommand("sweep", "Hit ratio versus SNR over seeded ensembles");
  add_common(sw_cmd, sw_a.c);
  sw_cmd->add_option("--preset", sw_a.preset, "Built-in scenario when --config is absent")
      ->check(CLI::IsMember(preset_names()));
  sw_cmd->add_option("--estimators", sw_a.estimators, "Estimator configuration JSON")->check(CLI::ExistingFile);
  sw_cmd->add_option("--grid", sw_a.grid, "SNR grid [dB]: lo:hi:step or a,b,c");
  sw_cmd->add_option("--seeds", sw_a.seeds, "Traces per SNR")->check(CLI::PositiveNumber);
  sw_cmd->add_option("--methods", sw_a.methods, "Comma-separated methods");
  sw_cmd->add_option("--t-from", sw_a.t_from, "Count estimates after this time [s]");

  FiguresArgs fig_a;
  auto* fig_cmd = app.add_subcommand("figures", "Regenerate figure data (CSV) and plots (SVG)");
  add_common(fig_cmd, fig_a.c);
  fig_cmd->add_option("names", fig_a.names, "fig2c, fig3a, fig3b, fig6c or all");
  fig_cmd->add_option("--grid", fig_a.grid, "SNR grid for fig6c");
  fig_cmd->add_option("--seeds", fig_a.seeds, "Traces per SNR for fig6c")->check(CLI::PositiveNumber);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (sim_cmd->parsed()) return cmd_simulate(sim_a, args, out);
    if (est_cmd->parsed()) return cmd_estimate(est_a, args, out, err);
    if (ev_cmd->parsed()) return cmd_evaluate(ev_a, args, out);
    if (sw_cmd->parsed()) return cmd_sweep(sw_a, args, out);
    if (fig_cmd->parsed()) return cmd_figures(fig_a, args, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitValidation;
}

}  // namespace rssb::cli
