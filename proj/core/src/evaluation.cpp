// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "rssb/error.hpp"
#include "rssb/spectrum.hpp"

namespace rssb::eval {
namespace {

double err_bpm(double f_hat, double f_true) { return kBpmPerHz * std::abs(f_hat - f_true); }

void require_nonempty(const est::EstimateSeries& s, const char* what) {
  if (s.empty()) throw InsufficientDataError(std::string(what) + ": estimate series is empty");
}

struct BandBins {
  std::vector<std::size_t> harmonic;  // L
  std::vector<std::size_t> rest;      // S \ L
};

BandBins band_bins(std::size_t nfft, double fs, double f_true, const SnrConfig& cfg) {
  BandBins bins;
  for (std::size_t l = 1; l <= nfft / 2; ++l) {
    const double f = spectrum::bin_frequency(l, fs, nfft);
    if (f < cfg.band_min || f > cfg.band_max) continue;
    bool near = false;
    for (int m = 1; m <= cfg.harmonics; ++m) near = near || std::abs(f - m * f_true) <= cfg.neighborhood;
    (near ? bins.harmonic : bins.rest).push_back(l);
  }
  if (bins.harmonic.empty() || bins.rest.empty()) {
    throw ValidationError("snr_estimate: band holds no harmonic or no noise bins");
  }
  return bins;
}

double sum_over(const std::vector<double>& p, const std::vector<std::size_t>& idx) {
  double s = 0.0;
  for (std::size_t l : idx) s += p[l];
  return s;
}

}  // namespace

double freq_mae(const est::EstimateSeries& s, double f_true) {
  require_nonempty(s, "freq_mae");
  double sum = 0.0;
  for (double f : s.f_hat) sum += err_bpm(f, f_true);
  return sum / static_cast<double>(s.size());
}

double hit_ratio(const est::EstimateSeries& s, double f_true, double tol_bpm) {
  require_nonempty(s, "hit_ratio");
  const auto hits = std::count_if(s.f_hat.begin(), s.f_hat.end(),
                                  [&](double f) { return err_bpm(f, f_true) <= tol_bpm; });
  return 100.0 * static_cast<double>(hits) / static_cast<double>(s.size());
}

std::optional<double> hit_ratio_after(const est::EstimateSeries& s, double f_true, double t_from,
                                      double tol_bpm) {
  std::size_t n = 0, hits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.timestamps[i] <= t_from) continue;
    ++n;
    if (err_bpm(s.f_hat[i], f_true) <= tol_bpm) ++hits;
  }
  if (n == 0) return std::nullopt;
  return 100.0 * static_cast<double>(hits) / static_cast<double>(n);
}

SplitMae convergence_split(const est::EstimateSeries& s, double f_true, double t_split) {
  double se = 0.0, sl = 0.0;
  std::size_t ne = 0, nl = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double e = err_bpm(s.f_hat[i], f_true);
    if (s.timestamps[i] <= t_split) {
      se += e;
      ++ne;
    } else {
      sl += e;
      ++nl;
    }
  }
  SplitMae out;
  if (ne) out.early = se / static_cast<double>(ne);
  if (nl) out.late = sl / static_cast<double>(nl);
  return out;
}

std::optional<double> outlier_filtered_mae(const est::EstimateSeries& s, double f_true,
                                           double threshold_bpm) {
  double sum = 0.0;
  std::size_t n = 0;
  for (double f : s.f_hat) {
    const double e = err_bpm(f, f_true);
    if (e > threshold_bpm) continue;
    sum += e;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> convergence_time(const est::EstimateSeries& s, double f_true, double tol_bpm,
                                       double hold) {
  if (s.empty()) return std::nullopt;
  const double t_last = s.timestamps.back();
  std::optional<double> best;
  std::size_t next_miss = s.size();
  for (std::size_t i = s.size(); i-- > 0;) {
    if (err_bpm(s.f_hat[i], f_true) > tol_bpm) {
      next_miss = i;
      continue;
    }
    const double t = s.timestamps[i];
    const bool held = next_miss == s.size() ? t + hold <= t_last : s.timestamps[next_miss] > t + hold;
    if (held) best = t;
  }
  return best;
}

double modeling_mae(std::span<const double> z, std::span<const double> r_hat) {
  if (z.size() != r_hat.size()) throw ValidationError("modeling_mae: length mismatch");
  if (z.empty()) throw InsufficientDataError("modeling_mae: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) sum += std::abs(z[i] - r_hat[i]);
  return sum / static_cast<double>(z.size());
}

double snr_estimate(std::span<const double> y, double fs, double f_true, const SnrConfig& cfg) {
  if (y.empty()) throw InsufficientDataError("snr_estimate: empty input");
  const std::size_t nfft = spectrum::next_pow2(std::max(y.size(), cfg.min_fft));
  const auto bins = band_bins(nfft, fs, f_true, cfg);
  const auto p = spectrum::periodogram(y, nfft);
  return 10.0 * std::log10(sum_over(p, bins.harmonic) / sum_over(p, bins.rest));
}

std::vector<double> harmonic_energy_fractions(const est::EstimateSeries& gp, double t_from) {
  if (gp.states.empty()) throw ValidationError("harmonic_energy_fractions: series has no GP states");
  const std::size_t dim = gp.states.front().size();
  if (dim < 4 || dim % 2) throw ValidationError("harmonic_energy_fractions: unexpected state size");
  const int nh = static_cast<int>((dim - 2) / 2);
  bool any_late = false;
  for (double t : gp.timestamps) any_late = any_late || t > t_from;

  std::vector<double> energy(static_cast<std::size_t>(nh), 0.0);
  for (std::size_t k = 0; k < gp.states.size(); ++k) {
    if (any_late && gp.timestamps[k] <= t_from) continue;
    for (int m = 1; m <= nh; ++m) {
      const double u = gp.states[k][est::gp_harmonic_index(m)];
      energy[static_cast<std::size_t>(m - 1)] += u * u;
    }
  }
  double total = 0.0;
  for (double e : energy) total += e;
  if (!(total > 0.0)) return std::vector<double>(energy.size(), 100.0 / static_cast<double>(nh));
  for (double& e : energy) e *= 100.0 / total;
  return energy;
}

Method parse_method(const std::string& name) {
  if (name == "dft") return Method::kDft;
  if (name == "kf") return Method::kKf;
  if (name == "gp") return Method::kGp;
  throw ValidationError("unknown method '" + name + "' (expected dft, kf or gp)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kDft: return "dft";
    case Method::kKf: return "kf";
    case Method::kGp: return "gp";
  }
  return "?";
}

PipelineResult run_estimator(const RssTrace& trace, Method method, const EstimatorConfigs& cfg,
                             double nominal_fs) {
  trace.validate();
  if (trace.size() < 2) throw InsufficientDataError("run_estimator: trace needs at least 2 samples");
  PipelineResult out;
  out.fs = nominal_fs > 0.0 ? nominal_fs : 1.0 / trace.median_interval();

  if (method == Method::kDft) {
    const bool uneven = !trace.is_uniform(1e-3);
    const RssTrace uniform = uneven ? dsp::resample_uniform(trace, out.fs) : trace;
    out.resampled = uneven;
    const auto pre = dsp::preprocess(uniform, cfg.filter, out.fs);
    est::DftConfig dcfg = cfg.dft;
    if (std::abs(dcfg.fs - out.fs) > 1e-9 * out.fs) {
      const auto derived = est::DftConfig::for_rate(out.fs);
      dcfg.fs = derived.fs;
      dcfg.window_len = derived.window_len;
      dcfg.overlap = derived.overlap;
      dcfg.fft_len = std::max(dcfg.fft_len, spectrum::next_pow2(derived.window_len));
    }
    auto dft = est::dft_estimate(pre.timestamps, pre.y, dcfg, pre.mean);
    out.series = std::move(dft.series);
    out.spectrogram = std::move(dft.spectrogram);
    const std::size_t hop = dcfg.window_len - dcfg.overlap;
    for (std::size_t i = 0; i < out.series.size(); ++i) {
      out.z_aligned.push_back(pre.z[i * hop + dcfg.window_len - 1]);
    }
    out.y = pre.y;
    return out;
  }

  const auto pre = dsp::preprocess(trace, cfg.filter, out.fs);
  out.series = method == Method::kKf ? est::kf_estimate(pre.timestamps, pre.z, cfg.kf)
                                     : est::gp_estimate(pre.timestamps, pre.z, cfg.gp);
  out.z_aligned = pre.z;
  out.y = pre.y;
  return out;
}

MetricsReport evaluate(const est::EstimateSeries& s, double f_true, std::span<const double> z_aligned,
                       std::span<const double> y, double fs, double t_split, double outlier_bpm) {
  require_nonempty(s, "evaluate");
  MetricsReport r;
  r.method = s.method;
  r.f_true = f_true;
  r.count = s.size();
  r.eps_f = freq_mae(s, f_true);
  r.eps_pct = hit_ratio(s, f_true);
  const auto split = convergence_split(s, f_true, t_split);
  r.eps_f_early = split.early;
  r.eps_f_late = split.late;
  r.eps_f_no_outliers = outlier_filtered_mae(s, f_true, outlier_bpm);
  r.convergence_time = convergence_time(s, f_true);
  if (!z_aligned.empty() && !s.reconstruction.empty()) r.eps_z = modeling_mae(z_aligned, s.reconstruction);
  if (!y.empty() && fs > 0.0) r.snr_db = snr_estimate(y, fs, f_true);
  if (!s.states.empty()) r.harmonic_energy_pct = harmonic_energy_fractions(s, t_split);
  r.reconditioned = s.reconditioned;
  return r;
}

double calibrate_noise_std(const sim::ScenarioConfig& scenario, double target_db, SnrTarget target,
                           const dsp::FilterSpec& filter, const SnrConfig& snr) {
  sim::ScenarioConfig clean = scenario;
  clean.noise_std = 0.0;
  clean.quantization_step = 0.0;
  clean.drop_prob = 0.0;
  const auto traces = sim::synthesize(clean);
  const auto& trace = traces.front();
  const auto pre = dsp::preprocess(trace, filter, clean.fs);
  const std::size_t n = pre.y.size();
  const std::size_t nfft = spectrum::next_pow2(std::max(n, snr.min_fft));
  const double f = clean.motion.breath_freq;
  const auto bins = band_bins(nfft, clean.fs, f, snr);
  const auto p = spectrum::periodogram(pre.y, nfft);
  const auto lp = dsp::design_elliptic(filter, clean.fs).filter;
  auto gain = [&](const std::vector<std::size_t>& idx) {
    double g = 0.0;
    for (std::size_t l : idx) g += std::norm(lp.response(spectrum::bin_frequency(l, clean.fs, nfft), clean.fs));
    return g * static_cast<double>(n);
  };
  const double r = std::pow(10.0, target_db / 10.0);
  const double ps = sum_over(p, bins.harmonic);
  const double pn = sum_over(p, bins.rest);
  const double a = target == SnrTarget::kPeriodogramEstimate ? gain(bins.harmonic) : 0.0;
  const double b = gain(bins.rest);
  const double denom = r * b - a;
  if (!(denom > 0.0)) {
    throw ValidationError("calibrate_noise_std: " + std::to_string(target_db) +
                          " dB is below the white-noise floor of the periodogram SNR");
  }
  const double total_var = std::max(0.0, (ps - r * pn) / denom);
  const double q2 = scenario.quantization_step * scenario.quantization_step / 12.0;
  if (total_var < q2) {
    throw ValidationError("calibrate_noise_std: " + std::to_string(target_db) +
                          " dB needs less noise than the quantization step alone adds");
  }
  return std::sqrt(total_var - q2);
}

std::vector<SweepRow> snr_sweep(const SweepConfig& cfg) {
  if (cfg.snr_grid_db.empty()) throw ValidationError("snr_sweep: empty SNR grid");
  if (cfg.seeds == 0) throw ValidationError("snr_sweep: need at least one seed");
  if (cfg.methods.empty()) throw ValidationError("snr_sweep: no methods");
  cfg.scenario.validate();

  const std::size_t ns = cfg.snr_grid_db.size();
  const std::size_t nm = cfg.methods.size();
  std::vector<double> noise(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    noise[i] = calibrate_noise_std(cfg.scenario, cfg.snr_grid_db[i], SnrTarget::kSignalToNoise,
                                   cfg.estimators.filter);
  }

  struct Cell {
    std::size_t hits{0}, count{0};
  };
  struct TaskResult {
    double snr{0.0};
    std::vector<Cell> cells;
  };
  const std::size_t tasks = ns * cfg.seeds;
  std::vector<TaskResult> results(tasks);
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(std::max(1u, cfg.jobs));

  auto worker = [&](std::size_t wid) {
    try {
      for (std::size_t task = next++; task < tasks; task = next++) {
        const std::size_t si = task / cfg.seeds;
        sim::ScenarioConfig sc = cfg.scenario;
        sc.noise_std = noise[si];
        sc.seed = cfg.seed_base + task % cfg.seeds;
        const auto trace = sim::synthesize(sc).front();
        const double f = sc.motion.breath_freq;
        TaskResult& res = results[task];
        res.cells.resize(nm);
        for (std::size_t mi = 0; mi < nm; ++mi) {
          const auto run = run_estimator(trace, cfg.methods[mi], cfg.estimators, sc.fs);
          if (mi == 0) res.snr = snr_estimate(run.y, run.fs, f);
          for (std::size_t k = 0; k < run.series.size(); ++k) {
            if (run.series.timestamps[k] <= cfg.t_from) continue;
            ++res.cells[mi].count;
            if (err_bpm(run.series.f_hat[k], f) <= 1.0) ++res.cells[mi].hits;
          }
        }
      }
    } catch (...) {
      errors[wid] = std::current_exception();
      next = tasks;
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<SweepRow> rows;
  for (std::size_t si = 0; si < ns; ++si) {
    double snr_sum = 0.0;
    for (std::size_t s = 0; s < cfg.seeds; ++s) snr_sum += results[si * cfg.seeds + s].snr;
    for (std::size_t mi = 0; mi < nm; ++mi) {
      std::size_t hits = 0, count = 0;
      for (std::size_t s = 0; s < cfg.seeds; ++s) {
        hits += results[si * cfg.seeds + s].cells[mi].hits;
        count += results[si * cfg.seeds + s].cells[mi].count;
      }
      SweepRow row;
      row.snr_db = cfg.snr_grid_db[si];
      row.measured_snr_db = snr_sum / static_cast<double>(cfg.seeds);
      row.method = cfg.methods[mi];
      row.hit_ratio_pct = count ? 100.0 * static_cast<double>(hits) / static_cast<double>(count) : 0.0;
      row.traces = cfg.seeds;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace rssb::eval
