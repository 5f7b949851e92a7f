// Copyright 2026 The rssb Authors
// SPDX-License-Identifier: Apache-2.0

#include "rssb/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rssb/error.hpp"
#include "rssb/geometry.hpp"

namespace rssb::io {
namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Reads typed fields out of one JSON object and rejects keys nobody asked for.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_.empty() ? "document" : path_, "expected an object");
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  void number(const std::string& key, double& out) {
    if (const json* v = take(key)) {
      if (!v->is_number()) fail(join(path_, key), "expected a number");
      out = v->get<double>();
    }
  }

  void count(const std::string& key, std::size_t& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_integer() || v->get<long long>() < 0) {
        fail(join(path_, key), "expected a non-negative integer");
      }
      out = v->get<std::size_t>();
    }
  }

  void integer(const std::string& key, int& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_integer()) fail(join(path_, key), "expected an integer");
      out = v->get<int>();
    }
  }

  void seed(const std::string& key, std::uint64_t& out) {
    if (const json* v = take(key)) {
      if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<long long>() >= 0)) {
        fail(join(path_, key), "expected a non-negative integer");
      }
      out = v->get<std::uint64_t>();
    }
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = take(key)) {
      if (!v->is_boolean()) fail(join(path_, key), "expected true or false");
      out = v->get<bool>();
    }
  }

  void text(const std::string& key, std::string& out) {
    if (const json* v = take(key)) {
      if (!v->is_string()) fail(join(path_, key), "expected a string");
      out = v->get<std::string>();
    }
  }

  void vec2(const std::string& key, geometry::Vec2& out) {
    if (const json* v = take(key)) {
      if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
        fail(join(path_, key), "expected [x, y]");
      }
      out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
    }
  }

  void numbers(const std::string& key, std::vector<double>& out) {
    if (const json* v = take(key)) {
      if (!v->is_array()) fail(join(path_, key), "expected an array of numbers");
      out.clear();
      for (std::size_t i = 0; i < v->size(); ++i) {
        if (!(*v)[i].is_number()) fail(join(path_, key) + "[" + std::to_string(i) + "]", "expected a number");
        out.push_back((*v)[i].get<double>());
      }
    }
  }

  const json* raw(const std::string& key) { return take(key); }

  std::optional<Fields> object(const std::string& key) {
    if (const json* v = take(key)) return Fields(*v, join(path_, key));
    return std::nullopt;
  }

  const std::string& path() const { return path_; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(join(path_, it.key()), "unknown field");
    }
  }

  [[noreturn]] static void fail(const std::string& field, const std::string& msg) {
    throw ValidationError("field '" + field + "': " + msg);
  }

 private:
  const json* take(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": " + e.what());
  }
}

void apply_overrides(json& doc, const Overrides& overrides) {
  for (const auto& [key, value] : overrides) {
    if (key.empty()) throw ValidationError("override with empty key");
    json* node = &doc;
    std::string path;
    std::size_t start = 0;
    while (true) {
      const std::size_t dot = key.find('.', start);
      const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
      if (part.empty()) throw ValidationError("override '" + key + "': empty path component");
      if (!node->is_object()) throw ValidationError("override '" + key + "': '" + path + "' is not an object");
      path = join(path, part);
      if (dot == std::string::npos) {
        json parsed = json::parse(value, nullptr, false);
        (*node)[part] = parsed.is_discarded() ? json(value) : parsed;
        break;
      }
      if (!node->contains(part)) (*node)[part] = json::object();
      node = &(*node)[part];
      start = dot + 1;
    }
  }
}

json vec_json(geometry::Vec2 v) { return json::array({v.x, v.y}); }

std::string geometry_model_name(sim::GeometryModel m) {
  return m == sim::GeometryModel::kExact ? "exact" : "linearized";
}

// Splits one CSV line; no quoting is used by any of the formats.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

double parse_double(const std::string& cell, std::size_t line, const char* column) {
  const std::string t = trim(cell);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw ValidationError("line " + std::to_string(line) + ": column '" + column + "' is not a finite number: '" +
                          t + "'");
  }
  return v;
}

// Reads a CSV with the given header; calls row(cells, line) for each data row.
template <typename Fn>
void read_csv(std::istream& is, const std::vector<std::string>& header, Fn&& row) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  while (std::getline(is, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split_csv(line);
    if (!have_header) {
      std::vector<std::string> got;
      for (auto& c : cells) got.push_back(trim(c));
      if (got != header) {
        std::string want;
        for (const auto& h : header) want += (want.empty() ? "" : ",") + h;
        throw ValidationError("line " + std::to_string(n) + ": expected header '" + want + "'");
      }
      have_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      throw ValidationError("line " + std::to_string(n) + ": expected " + std::to_string(header.size()) +
                            " columns, found " + std::to_string(cells.size()));
    }
    row(cells, n);
  }
  if (!have_header) throw ValidationError("empty CSV input");
}

/// Shortest text that reads back to the same double.
struct Num {
  double v;
};
std::ostream& operator<<(std::ostream& os, Num n) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, n.v);
  return os.write(buf, r.ptr - buf);
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::pair<std::string, std::string> parse_override(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("override '" + text + "' is not key=value");
  return {text.substr(0, eq), text.substr(eq + 1)};
}

ScenarioFile parse_scenario(const std::string& text, const Overrides& overrides) {
  json doc = parse_document(text);
  apply_overrides(doc, overrides);
  ScenarioFile out;
  sim::ScenarioConfig& c = out.config;
  Fields f(doc, "");
  if (auto link = f.object("link")) {
    link->vec2("tx", c.link.tx);
    link->vec2("rx", c.link.rx);
    link->finish();
  }
  if (auto medium = f.object("medium")) {
    medium->number("wavelength", c.medium.wavelength);
    medium->number("pathloss_exponent", c.medium.pathloss_exponent);
    medium->number("rel_permittivity", c.medium.rel_permittivity);
    medium->finish();
  }
  bool placed = false;
  if (auto motion = f.object("motion")) {
    if (motion->has("p0") && motion->has("excess0")) {
      Fields::fail(join(motion->path(), "excess0"), "give either p0 or excess0, not both");
    }
    motion->vec2("p0", c.motion.p0);
    double excess = 0.0;
    if (motion->has("excess0")) {
      motion->number("excess0", excess);
      try {
        c.motion.p0 = geometry::midline_point_for_excess(c.link, excess);
      } catch (const Error& e) {
        Fields::fail(join(motion->path(), "excess0"), e.what());
      }
    }
    placed = motion->has("p0") || motion->has("excess0");
    motion->vec2("direction", c.motion.direction);
    motion->number("amplitude", c.motion.amplitude);
    motion->number("breath_freq", c.motion.breath_freq);
    motion->vec2("velocity", c.motion.velocity);
    motion->finish();
  }
  if (!placed) Fields::fail("motion.p0", "reflector position missing (p0 or excess0)");
  if (const json* ch = f.raw("channels_hz")) {
    if (ch->is_string()) {
      if (ch->get<std::string>() != "ieee802154") Fields::fail("channels_hz", "expected an array or \"ieee802154\"");
      c.channels_hz = sim::default_channels();
    } else {
      json tmp = json::object();
      tmp["channels_hz"] = *ch;
      Fields sub(tmp, "");
      sub.numbers("channels_hz", c.channels_hz);
    }
  }
  f.number("fs", c.fs);
  f.number("duration", c.duration);
  f.number("baseline_dbm", c.baseline_dbm);
  f.number("noise_std", c.noise_std);
  f.number("quantization_step", c.quantization_step);
  f.number("drop_prob", c.drop_prob);
  f.seed("seed", c.seed);
  std::string model = geometry_model_name(c.geometry_model);
  f.text("geometry_model", model);
  if (model == "exact") {
    c.geometry_model = sim::GeometryModel::kExact;
  } else if (model == "linearized") {
    c.geometry_model = sim::GeometryModel::kLinearized;
  } else {
    Fields::fail("geometry_model", "expected \"exact\" or \"linearized\"");
  }
  if (f.has("target_snr_db")) {
    double snr = 0.0;
    f.number("target_snr_db", snr);
    out.target_snr_db = snr;
  }
  f.finish();
  c.validate();
  return out;
}

ScenarioFile load_scenario(const std::string& path, const Overrides& overrides) {
  try {
    return parse_scenario(read_file(path), overrides);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string scenario_to_json(const sim::ScenarioConfig& c, std::optional<double> target_snr_db) {
  json doc;
  doc["link"] = {{"tx", vec_json(c.link.tx)}, {"rx", vec_json(c.link.rx)}};
  doc["medium"] = {{"wavelength", c.medium.wavelength},
                   {"pathloss_exponent", c.medium.pathloss_exponent},
                   {"rel_permittivity", c.medium.rel_permittivity}};
  doc["motion"] = {{"p0", vec_json(c.motion.p0)},
                   {"direction", vec_json(c.motion.direction)},
                   {"amplitude", c.motion.amplitude},
                   {"breath_freq", c.motion.breath_freq},
                   {"velocity", vec_json(c.motion.velocity)}};
  doc["channels_hz"] = c.channels_hz;
  doc["fs"] = c.fs;
  doc["duration"] = c.duration;
  doc["baseline_dbm"] = c.baseline_dbm;
  doc["noise_std"] = c.noise_std;
  doc["quantization_step"] = c.quantization_step;
  doc["drop_prob"] = c.drop_prob;
  doc["seed"] = c.seed;
  doc["geometry_model"] = geometry_model_name(c.geometry_model);
  if (target_snr_db) doc["target_snr_db"] = *target_snr_db;
  return doc.dump(2) + "\n";
}

eval::EstimatorConfigs parse_estimator_configs(const std::string& text, const Overrides& overrides) {
  json doc = text.empty() ? json::object() : parse_document(text);
  apply_overrides(doc, overrides);
  eval::EstimatorConfigs c;
  Fields f(doc, "");
  if (auto s = f.object("filter")) {
    s->integer("order", c.filter.order);
    s->number("passband_hz", c.filter.passband_hz);
    s->number("stopband_hz", c.filter.stopband_hz);
    s->number("passband_ripple_db", c.filter.passband_ripple_db);
    s->number("stopband_atten_db", c.filter.stopband_atten_db);
    s->finish();
  }
  if (auto s = f.object("dft")) {
    s->number("fs", c.dft.fs);
    if (s->has("fs") && !s->has("window_len")) c.dft = est::DftConfig::for_rate(c.dft.fs);
    s->count("window_len", c.dft.window_len);
    if (s->has("window_len") && !s->has("overlap")) c.dft.overlap = c.dft.window_len - 1;
    s->count("overlap", c.dft.overlap);
    s->count("fft_len", c.dft.fft_len);
    s->number("band_min", c.dft.band_min);
    s->number("band_max", c.dft.band_max);
    s->boolean("keep_spectrogram", c.dft.keep_spectrogram);
    s->finish();
    c.dft.validate();
  }
  if (auto s = f.object("kf")) {
    std::size_t bins = c.kf.bin_freqs.size();
    double f_min = c.kf.bin_freqs.front();
    double f_max = c.kf.bin_freqs.back();
    s->count("n_bins", bins);
    s->number("f_min", f_min);
    s->number("f_max", f_max);
    if (bins == 0 || !(f_min > 0.0) || !(f_max > f_min)) {
      Fields::fail("kf.n_bins", "need n_bins >= 1 and 0 < f_min < f_max");
    }
    c.kf.bin_freqs = est::KfConfig::default_bins(bins, f_min, f_max);
    s->numbers("bin_freqs", c.kf.bin_freqs);
    s->number("process_var", c.kf.process_var);
    s->numbers("process_var_diag", c.kf.process_var_diag);
    s->number("init_var", c.kf.init_var);
    s->numbers("init_var_diag", c.kf.init_var_diag);
    s->numbers("init_mean", c.kf.init_mean);
    s->number("meas_var", c.kf.meas_var);
    s->number("amplitude_floor", c.kf.amplitude_floor);
    s->finish();
    c.kf.validate();
  }
  if (auto s = f.object("gp")) {
    s->number("sigma_k2", c.gp.sigma_k2);
    s->number("length_scale", c.gp.length_scale);
    s->number("sf", c.gp.sf);
    s->integer("harmonics", c.gp.harmonics);
    s->number("meas_var", c.gp.meas_var);
    s->number("init_log_freq", c.gp.init_log_freq);
    s->number("init_log_freq_var", c.gp.init_log_freq_var);
    s->number("init_u0_var", c.gp.init_u0_var);
    s->number("init_u0_mean", c.gp.init_u0_mean);
    s->boolean("use_first_sample", c.gp.use_first_sample);
    s->number("ut_alpha", c.gp.ut_alpha);
    s->number("ut_beta", c.gp.ut_beta);
    s->number("ut_kappa", c.gp.ut_kappa);
    s->finish();
    c.gp.validate();
  }
  f.finish();
  return c;
}

eval::EstimatorConfigs load_estimator_configs(const std::string& path, const Overrides& overrides) {
  try {
    return parse_estimator_configs(read_file(path), overrides);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string estimator_configs_to_json(const eval::EstimatorConfigs& c) {
  json doc;
  doc["filter"] = {{"order", c.filter.order},
                   {"passband_hz", c.filter.passband_hz},
                   {"stopband_hz", c.filter.stopband_hz},
                   {"passband_ripple_db", c.filter.passband_ripple_db},
                   {"stopband_atten_db", c.filter.stopband_atten_db}};
  doc["dft"] = {{"fs", c.dft.fs},
                {"window_len", c.dft.window_len},
                {"overlap", c.dft.overlap},
                {"fft_len", c.dft.fft_len},
                {"band_min", c.dft.band_min},
                {"band_max", c.dft.band_max},
                {"keep_spectrogram", c.dft.keep_spectrogram}};
  doc["kf"] = {{"bin_freqs", c.kf.bin_freqs},      {"process_var", c.kf.process_var},
               {"init_var", c.kf.init_var},        {"meas_var", c.kf.meas_var},
               {"amplitude_floor", c.kf.amplitude_floor}};
  if (!c.kf.process_var_diag.empty()) doc["kf"]["process_var_diag"] = c.kf.process_var_diag;
  if (!c.kf.init_var_diag.empty()) doc["kf"]["init_var_diag"] = c.kf.init_var_diag;
  if (!c.kf.init_mean.empty()) doc["kf"]["init_mean"] = c.kf.init_mean;
  doc["gp"] = {{"sigma_k2", c.gp.sigma_k2},
               {"length_scale", c.gp.length_scale},
               {"sf", c.gp.sf},
               {"harmonics", c.gp.harmonics},
               {"meas_var", c.gp.meas_var},
               {"init_log_freq", c.gp.init_log_freq},
               {"init_log_freq_var", c.gp.init_log_freq_var},
               {"init_u0_var", c.gp.init_u0_var},
               {"init_u0_mean", c.gp.init_u0_mean},
               {"use_first_sample", c.gp.use_first_sample},
               {"ut_alpha", c.gp.ut_alpha},
               {"ut_beta", c.gp.ut_beta},
               {"ut_kappa", c.gp.ut_kappa}};
  return doc.dump(2) + "\n";
}

void write_traces(std::ostream& os, const std::vector<RssTrace>& traces) {
  struct Row {
    double t;
    int ch;
    double v;
  };
  std::vector<Row> rows;
  for (const auto& tr : traces) {
    tr.validate();
    for (std::size_t k = 0; k < tr.size(); ++k) rows.push_back({tr.timestamps[k], tr.channel_id, tr.values[k]});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.t < b.t || (a.t == b.t && a.ch < b.ch);
  });
  os << "time_s,channel_id,rss_db\n";
  for (const auto& r : rows) os << Num{r.t} << ',' << r.ch << ',' << Num{r.v} << '\n';
}

std::vector<RssTrace> read_traces(std::istream& is) {
  std::map<int, RssTrace> by_channel;
  read_csv(is, {"time_s", "channel_id", "rss_db"}, [&](const std::vector<std::string>& c, std::size_t line) {
    const double t = parse_double(c[0], line, "time_s");
    const double ch = parse_double(c[1], line, "channel_id");
    if (ch != std::floor(ch) || ch < 0 || ch > 1e6) {
      throw ValidationError("line " + std::to_string(line) + ": channel_id must be a non-negative integer");
    }
    auto& tr = by_channel[static_cast<int>(ch)];
    tr.channel_id = static_cast<int>(ch);
    if (!tr.timestamps.empty() && !(t > tr.timestamps.back())) {
      throw ValidationError("line " + std::to_string(line) + ": timestamps of channel " +
                            std::to_string(tr.channel_id) + " are not strictly increasing");
    }
    tr.timestamps.push_back(t);
    tr.values.push_back(parse_double(c[2], line, "rss_db"));
  });
  std::vector<RssTrace> out;
  for (auto& [id, tr] : by_channel) out.push_back(std::move(tr));
  if (out.empty()) throw InsufficientDataError("trace CSV has no samples");
  return out;
}

void write_estimates(std::ostream& os, const est::EstimateSeries& s) {
  os << "time_s,method,f_hat_hz\n";
  for (std::size_t i = 0; i < s.size(); ++i) os << Num{s.timestamps[i]} << ',' << s.method << ',' << Num{s.f_hat[i]} << '\n';
}

est::EstimateSeries read_estimates(std::istream& is) {
  est::EstimateSeries s;
  read_csv(is, {"time_s", "method", "f_hat_hz"}, [&](const std::vector<std::string>& c, std::size_t line) {
    const double t = parse_double(c[0], line, "time_s");
    const std::string method = trim(c[1]);
    if (s.method.empty()) s.method = method;
    if (method != s.method) {
      throw ValidationError("line " + std::to_string(line) + ": mixed methods '" + s.method + "' and '" + method + "'");
    }
    const double f = parse_double(c[2], line, "f_hat_hz");
    if (!(f > 0.0)) throw ValidationError("line " + std::to_string(line) + ": f_hat_hz must be > 0");
    if (!s.timestamps.empty() && !(t > s.timestamps.back())) {
      throw ValidationError("line " + std::to_string(line) + ": timestamps are not strictly increasing");
    }
    s.timestamps.push_back(t);
    s.f_hat.push_back(f);
  });
  return s;
}

void write_reconstruction(std::ostream& os, const est::EstimateSeries& s, const std::vector<double>& z) {
  if (z.size() != s.size() || s.reconstruction.size() != s.size()) {
    throw ValidationError("write_reconstruction: length mismatch");
  }
  os << "time_s,z_db,r_hat_db\n";
  for (std::size_t i = 0; i < s.size(); ++i) os << Num{s.timestamps[i]} << ',' << Num{z[i]} << ',' << Num{s.reconstruction[i]} << '\n';
}

Reconstruction read_reconstruction(std::istream& is) {
  Reconstruction r;
  read_csv(is, {"time_s", "z_db", "r_hat_db"}, [&](const std::vector<std::string>& c, std::size_t line) {
    r.timestamps.push_back(parse_double(c[0], line, "time_s"));
    r.z.push_back(parse_double(c[1], line, "z_db"));
    r.r_hat.push_back(parse_double(c[2], line, "r_hat_db"));
  });
  return r;
}

void write_states(std::ostream& os, const est::EstimateSeries& s) {
  if (s.states.empty()) throw ValidationError("write_states: series carries no filter states");
  const std::size_t dim = s.states.front().size();
  os << "time_s,s,u0";
  for (std::size_t n = 1; 2 * n + 1 < dim + 1; ++n) os << ",u" << n << "_1,u" << n << "_2";
  os << '\n';
  for (std::size_t k = 0; k < s.states.size(); ++k) {
    os << Num{s.timestamps[k]};
    for (double v : s.states[k]) os << ',' << Num{v};
    os << '\n';
  }
}

est::EstimateSeries read_states(std::istream& is) {
  std::string header;
  std::size_t line = 0;
  while (std::getline(is, header)) {
    ++line;
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (!trim(header).empty()) break;
  }
  const auto names = split_csv(header);
  if (names.size() < 5 || trim(names[0]) != "time_s" || trim(names[1]) != "s" || trim(names[2]) != "u0" ||
      (names.size() - 3) % 2) {
    throw ValidationError("line " + std::to_string(line) + ": expected header 'time_s,s,u0,u1_1,u1_2,...'");
  }
  std::vector<std::string> expect;
  for (const auto& n : names) expect.push_back(trim(n));
  std::stringstream rest;
  rest << header << '\n' << is.rdbuf();
  est::EstimateSeries s;
  s.method = "gp";
  read_csv(rest, expect, [&](const std::vector<std::string>& c, std::size_t row) {
    const std::size_t at = row + line - 1;
    s.timestamps.push_back(parse_double(c[0], at, "time_s"));
    auto& st = s.states.emplace_back();
    for (std::size_t i = 1; i < c.size(); ++i) st.push_back(parse_double(c[i], at, expect[i].c_str()));
    s.f_hat.push_back(std::exp(st[0]));
  });
  return s;
}

void write_spectrogram(std::ostream& os, const est::Spectrogram& sg) {
  os << "window_end_s,f_hz,psd\n";
  for (std::size_t w = 0; w < sg.window_end.size(); ++w) {
    for (std::size_t l = 0; l < sg.freqs.size(); ++l) {
      os << Num{sg.window_end[w]} << ',' << Num{sg.freqs[l]} << ',' << Num{sg.psd[w][l]} << '\n';
    }
  }
}

std::string metrics_to_json(const eval::MetricsReport& r) {
  json doc;
  doc["method"] = r.method;
  doc["f_true_hz"] = r.f_true;
  doc["count"] = r.count;
  doc["eps_f_bpm"] = r.eps_f;
  doc["eps_pct"] = r.eps_pct;
  doc["eps_f_early_bpm"] = optional_json(r.eps_f_early);
  doc["eps_f_late_bpm"] = optional_json(r.eps_f_late);
  doc["eps_f_no_outliers_bpm"] = optional_json(r.eps_f_no_outliers);
  doc["eps_z_db"] = optional_json(r.eps_z);
  doc["snr_db"] = optional_json(r.snr_db);
  doc["convergence_time_s"] = optional_json(r.convergence_time);
  doc["harmonic_energy_pct"] = r.harmonic_energy_pct;
  doc["reconditioned"] = r.reconditioned;
  return doc.dump(2) + "\n";
}

void write_sweep(std::ostream& os, const std::vector<eval::SweepRow>& rows) {
  os << "snr_db,method,hit_ratio_pct\n";
  for (const auto& r : rows) os << Num{r.snr_db} << ',' << eval::method_name(r.method) << ',' << Num{r.hit_ratio_pct} << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace rssb::io
