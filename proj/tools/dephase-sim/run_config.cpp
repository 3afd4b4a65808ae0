// Copyright 2026 The dephase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dephase_sim {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Reads keys of one JSON object, tracking which were consumed so leftovers can be reported.
class Section {
 public:
  Section(const json& obj, std::string pointer, const std::string& source)
      : obj_(obj), pointer_(std::move(pointer)), source_(source) {
    if (!obj_.is_object()) error("", "expected an object");
  }

  [[noreturn]] void error(const std::string& key, const std::string& message) const {
    std::string where = pointer_;
    if (!key.empty()) where += "/" + key;
    if (where.empty()) where = "/";
    throw ConfigError(source_ + ":" + where + ": " + message);
  }

  bool has(const std::string& key) const { return obj_.contains(key); }
  bool is_array(const std::string& key) const { return has(key) && obj_.at(key).is_array(); }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    return it == obj_.end() ? nullptr : &*it;
  }

  double number(const std::string& key, std::optional<double> fallback = std::nullopt) {
    const json* v = find(key);
    if (!v) {
      if (fallback) return *fallback;
      error(key, "required number is missing");
    }
    if (!v->is_number()) error(key, "expected a number");
    return v->get<double>();
  }

  double positive(const std::string& key, std::optional<double> fallback = std::nullopt) {
    const double v = number(key, fallback);
    if (!(v > 0.0)) error(key, "must be positive");
    return v;
  }

  std::uint64_t count(const std::string& key, std::uint64_t fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_unsigned()) error(key, "expected a non-negative integer");
    return v->get<std::uint64_t>();
  }

  bool flag(const std::string& key, bool fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) error(key, "expected true or false");
    return v->get<bool>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) error(key, "expected a string");
    return v->get<std::string>();
  }

  template <class T>
  T choice(const std::string& key, const std::map<std::string, T>& options, T fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (v->is_string()) {
      const auto it = options.find(v->get<std::string>());
      if (it != options.end()) return it->second;
    }
    std::string allowed;
    for (const auto& [name, value] : options) allowed += (allowed.empty() ? "" : ", ") + name;
    error(key, "expected one of: " + allowed);
  }

  // A number or an array of numbers; element errors point at the element.
  std::vector<double> numbers(const std::string& key, bool allow_scalar) {
    const json* v = find(key);
    if (!v) error(key, "required value is missing");
    std::vector<double> out;
    if (allow_scalar && v->is_number()) {
      out.push_back(v->get<double>());
      return out;
    }
    if (!v->is_array() || v->empty()) error(key, allow_scalar ? "expected a number or a non-empty array of numbers"
                                                               : "expected a non-empty array of numbers");
    for (std::size_t k = 0; k < v->size(); ++k) {
      if (!(*v)[k].is_number()) error(key + "/" + std::to_string(k), "expected a number");
      out.push_back((*v)[k].get<double>());
    }
    return out;
  }

  Section child(const std::string& key, bool required) {
    const json* v = find(key);
    static const json empty = json::object();
    if (!v) {
      if (required) error(key, "required object is missing");
      return Section(empty, pointer_ + "/" + key, source_);
    }
    return Section(*v, pointer_ + "/" + key, source_);
  }

  void reject_unknown() const {
    for (const auto& [key, value] : obj_.items())
      if (!seen_.count(key)) error(key, "unknown key");
  }

  const std::string& pointer() const { return pointer_; }

 private:
  const json& obj_;
  std::string pointer_;
  const std::string& source_;
  std::set<std::string> seen_;
};

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t k = 0; k < end; ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double coupling(Section& p) { return kTwoPi * p.positive("J_hz"); }

TransmissionParams read_transmission(Section& p) {
  TransmissionParams out;
  auto& c = out.cfg;
  dph_transmission_config_init(&c);
  c.j = coupling(p);
  c.total_time = p.positive("total_time_s");
  c.t1 = p.positive("t1_s");
  c.bang_bang = p.flag("bang_bang", false) ? 1 : 0;
  if (c.bang_bang)
    c.t_b = p.positive("t_b_s");
  else if (p.has("t_b_s"))
    c.t_b = p.positive("t_b_s");
  c.pulses_per_trial = p.count("pulses_per_trial", 0);
  c.train_start = p.choice<int>("train_start",
                                {{"at_window", DPH_TRAIN_AT_WINDOW}, {"random_phase", DPH_TRAIN_RANDOM_PHASE}},
                                DPH_TRAIN_AT_WINDOW);
  c.trials = p.count("trials", c.trials);
  c.group_size = p.count("group_size", c.group_size);
  c.remove_trivial_phase = p.flag("remove_trivial_phase", true) ? 1 : 0;
  c.threads = static_cast<unsigned>(p.count("threads", 0));
  p.reject_unknown();
  if (dph_transmission_validate(&c) != DPH_OK) p.error("", dph_last_error());
  return out;
}

MemoryParams read_memory(Section& p) {
  MemoryParams out;
  auto& c = out.base;
  dph_memory_config_init(&c);
  c.j = coupling(p);
  c.mean_interval = p.positive("mean_interval_s");
  out.alphas = p.numbers("alpha", true);
  const bool alpha_list = p.is_array("alpha");
  for (std::size_t k = 0; k < out.alphas.size(); ++k) {
    const double a = out.alphas[k];
    const std::string at = alpha_list ? "alpha/" + std::to_string(k) : "alpha";
    if (!(a >= 0.0 && a <= 0.25)) p.error(at, "each value must lie in [0, 0.25]");
    for (std::size_t m = 0; m < k; ++m)
      if (std::lround(out.alphas[m] * 100.0) == std::lround(a * 100.0))
        p.error(at, "values must differ at two decimals (they name the output files)");
  }
  if (p.has("observation_times_s") == p.has("max_time_s"))
    p.error("", "give exactly one of observation_times_s or max_time_s");
  if (p.has("observation_times_s")) {
    out.observation_times = p.numbers("observation_times_s", false);
  } else {
    const double max_time = p.positive("max_time_s");
    const double step = 2.0 * c.mean_interval;
    const auto n = static_cast<std::size_t>(std::floor(max_time / step + 1e-9));
    if (n == 0) p.error("max_time_s", "shorter than one flip cycle (2 x mean_interval_s)");
    for (std::size_t k = 1; k <= n; ++k) out.observation_times.push_back(static_cast<double>(k) * step);
  }
  c.trials = p.count("trials", c.trials);
  c.bang_bang = p.flag("bang_bang", false) ? 1 : 0;
  if (c.bang_bang) c.t_b = p.positive("t_b_s");
  c.readout = p.choice<int>("readout", {{"flip_aligned", DPH_READOUT_FLIP_ALIGNED}, {"fixed_time", DPH_READOUT_FIXED_TIME}},
                            DPH_READOUT_FLIP_ALIGNED);
  c.max_rejections = static_cast<int>(p.count("max_rejections", static_cast<std::uint64_t>(c.max_rejections)));
  c.threads = static_cast<unsigned>(p.count("threads", 0));
  p.reject_unknown();
  for (const double a : out.alphas) {
    dph_memory_config probe = c;
    probe.alpha = a;
    probe.observation_times = out.observation_times.data();
    probe.observation_count = out.observation_times.size();
    if (dph_memory_validate(&probe) != DPH_OK) p.error("", dph_last_error());
  }
  return out;
}

ChannelDemoParams read_channel_demo(Section& p) {
  ChannelDemoParams out;
  if (p.has("p_values")) out.p_values = p.numbers("p_values", false);
  for (const double v : out.p_values)
    if (!(v >= 0.0 && v <= 1.0)) p.error("p_values", "each probability must lie in [0, 1]");
  out.gaussian_stddev = p.number("gaussian_stddev", out.gaussian_stddev);
  if (out.gaussian_stddev < 0.0) p.error("gaussian_stddev", "must be non-negative");
  out.two_point_delta = p.number("two_point_delta", out.two_point_delta);
  out.two_point_q = p.number("two_point_q", out.two_point_q);
  if (!(out.two_point_q >= 0.0 && out.two_point_q <= 1.0)) p.error("two_point_q", "must lie in [0, 1]");
  out.tolerance = p.positive("tolerance", out.tolerance);
  p.reject_unknown();
  return out;
}

VerifyParams read_verify(Section& p) {
  VerifyParams out;
  out.j = coupling(p);
  const double f02 = p.number("omega_02_hz", 500.0);
  const double f01 = p.number("omega_01_hz", f02 / 4.0);
  out.omega_02 = kTwoPi * f02;
  out.omega_01 = kTwoPi * f01;
  out.time = p.number("time_s", out.time);
  if (p.has("dt_s")) out.dts = p.numbers("dt_s", false);
  for (const double dt : out.dts)
    if (!(dt > 0.0)) p.error("dt_s", "each step must be positive");
  if (p.has("p_values")) out.p_values = p.numbers("p_values", false);
  for (const double v : out.p_values)
    if (!(v >= 0.0 && v <= 1.0)) p.error("p_values", "each probability must lie in [0, 1]");
  out.tolerance = p.positive("tolerance", out.tolerance);
  p.reject_unknown();
  return out;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ":" + line_column(text, e.byte) + ": malformed JSON");
  }
  RunConfig cfg;
  cfg.source = source;
  Section root(doc, "", cfg.source);
  cfg.experiment = root.choice<std::string>("experiment",
                                            {{"transmission", "transmission"},
                                             {"memory", "memory"},
                                             {"channel-demo", "channel-demo"},
                                             {"verify", "verify"}},
                                            "");
  if (cfg.experiment.empty()) root.error("experiment", "required string is missing");
  if (root.has("seed")) cfg.seed = root.count("seed", 0);

  Section out = root.child("output", false);
  cfg.output.dir = out.text("dir", cfg.output.dir);
  cfg.output.prefix = out.text("prefix", cfg.experiment);
  if (cfg.output.prefix.empty() || cfg.output.prefix.find('/') != std::string::npos)
    out.error("prefix", "must be a non-empty file name prefix");
  cfg.output.format = out.choice<OutputFormat>("format", {{"csv", OutputFormat::csv}, {"report", OutputFormat::report}},
                                               OutputFormat::csv);
  cfg.output.dump_schedule = out.flag("dump_schedule", false);
  out.reject_unknown();

  Section params = root.child("parameters", cfg.experiment != "channel-demo");
  if (cfg.experiment == "transmission")
    cfg.params = read_transmission(params);
  else if (cfg.experiment == "memory")
    cfg.params = read_memory(params);
  else if (cfg.experiment == "channel-demo")
    cfg.params = read_channel_demo(params);
  else
    cfg.params = read_verify(params);
  root.reject_unknown();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str(), path);
}

bool needs_seed(const RunConfig& cfg) { return cfg.experiment == "transmission" || cfg.experiment == "memory"; }

}  // namespace dephase_sim
