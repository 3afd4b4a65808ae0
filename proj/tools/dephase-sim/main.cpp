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

// dephase-sim: batch front-end over the dephase C API.
//
//   dephase-sim <config.json> [--seed N] [--out DIR]
//
// Exit status: 0 success, 1 config error, 2 runtime error.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "dephase/dephase.h"
#include "run_config.hpp"

namespace dephase_sim {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

class RuntimeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(dph_status st, const std::string& what) {
  if (st != DPH_OK) {
    std::string msg = what + ": " + dph_status_string(st);
    const std::string detail = dph_last_error();
    if (!detail.empty()) msg += " (" + detail + ")";
    throw RuntimeFailure(msg);
  }
}

std::string num(double v, int digits = 6) {
  if (std::isnan(v)) return "n/a";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fixed(double v, int decimals) {
  if (std::isnan(v)) return "n/a";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// Signed percent deviation of sim from theory; n/a when theory is 0 or not finite.
std::string deviation(double sim, double theory) {
  if (!std::isfinite(sim) || !std::isfinite(theory) || theory == 0.0) return "n/a";
  char buf[48];
  std::snprintf(buf, sizeof buf, "%+.2f", 100.0 * (sim - theory) / theory);
  return buf;
}

// Plain text table with left-aligned columns.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string render() const {
    std::vector<std::size_t> width(rows_.front().size(), 0);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

struct Context {
  Context(const RunConfig& c, std::filesystem::path d) : cfg(c), dir(std::move(d)) {}

  const RunConfig& cfg;
  std::filesystem::path dir;
  std::uint64_t seed = 0;
  std::ostringstream summary;  // printed to stdout, also heads the report
  std::ostringstream data;     // report-format data sections
  std::vector<std::string> written;

  std::string path(const std::string& name) const { return (dir / name).string(); }
  bool report() const { return cfg.output.format == OutputFormat::report; }
};

void write_text(Context& ctx, const std::string& name, const std::string& text) {
  const std::string p = ctx.path(name);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw RuntimeFailure("cannot open '" + p + "' for writing");
  out << text;
  out.flush();
  if (!out) throw RuntimeFailure("failed writing '" + p + "'");
  ctx.written.push_back(p);
}

void dump_schedule(Context& ctx, dph_schedule s, const std::string& name) {
  char* json = nullptr;
  const dph_status st = dph_schedule_to_json(s, &json);
  dph_schedule_free(s);
  check(st, "serializing schedule");
  const std::string text = std::string(json) + "\n";
  dph_string_free(json);
  write_text(ctx, name, text);
}

// ---- transmission

void run_transmission(Context& ctx, const TransmissionParams& params) {
  dph_transmission_config c = params.cfg;
  c.seed = ctx.seed;
  dph_ensemble ens = nullptr;
  check(dph_run_transmission(&c, &ens), "transmission run");
  std::unique_ptr<dph_ensemble_s, void (*)(dph_ensemble)> guard(ens, dph_ensemble_free);

  std::vector<dph_complex> trials(dph_ensemble_trial_count(ens));
  std::vector<dph_complex> groups(dph_ensemble_group_count(ens));
  check(dph_ensemble_trials(ens, trials.data(), trials.size()), "reading trials");
  check(dph_ensemble_groups(ens, groups.data(), groups.size()), "reading groups");
  dph_complex grand{};
  check(dph_ensemble_grand(ens, &grand), "reading grand average");

  const double n = static_cast<double>(trials.size());
  double spread = 0.0;
  for (const auto& a : trials) spread += std::pow(a.re - grand.re, 2) + std::pow(a.im - grand.im, 2);
  const double stderr_mean = trials.size() > 1 ? std::sqrt(spread / (n * (n - 1.0))) : NAN;
  const double magnitude = std::hypot(grand.re, grand.im);

  double theory = 0.0;
  std::string theory_label = "theory 0";
  std::size_t pulses = 0;
  if (c.bang_bang) {
    if (c.train_start == DPH_TRAIN_AT_WINDOW) {
      check(dph_kappa_fixed_start(c.j, c.t_b, &theory), "kappa");
      theory_label = "theory kappa_fixed_start " + num(theory);
    } else {
      check(dph_kappa(c.j, c.t_b, &theory), "kappa");
      theory_label = "theory kappa " + num(theory);
    }
    pulses = c.pulses_per_trial;
    if (pulses == 0) check(dph_transmission_pulse_count(c.j, c.t_b, &pulses), "pulse count");
  }

  auto& s = ctx.summary;
  s << "experiment: transmission\n";
  s << "J/2pi = " << num(c.j / kTwoPi) << " Hz, T = " << num(c.total_time * 1e3) << " ms, t1 = "
    << num(c.t1 * 1e3) << " ms, trials = " << trials.size() << ", groups = " << groups.size()
    << ", seed = " << ctx.seed << "\n";
  if (c.bang_bang)
    s << "bang-bang: t_b = " << num(c.t_b * 1e3) << " ms, " << pulses << " pulses, train start = "
      << (c.train_start == DPH_TRAIN_AT_WINDOW ? "at_window" : "random_phase") << "\n";
  else
    s << "bang-bang: off\n";
  s << "\n";
  Table t({"quantity", "simulated", "theory", "dev %", "mc stderr"});
  t.add({"grand |avg|", num(magnitude), num(theory), deviation(magnitude, theory), num(stderr_mean, 3)});
  t.add({"grand avg re", num(grand.re), "", "", ""});
  t.add({"grand avg im", num(grand.im), "", "", ""});
  s << t.render();
  s << "\ngrand |avg| = " << fixed(magnitude, 5) << " (" << theory_label << ")\n";

  const std::string& prefix = ctx.cfg.output.prefix;
  if (ctx.report()) {
    Table g({"group", "re", "im", "magnitude"});
    for (std::size_t k = 0; k < groups.size(); ++k)
      g.add({std::to_string(k), num(groups[k].re, 12), num(groups[k].im, 12),
             num(std::hypot(groups[k].re, groups[k].im), 12)});
    ctx.data << "\ngroup averages\n" << g.render();
  } else {
    const std::string tp = ctx.path(prefix + "_trials.csv");
    const std::string gp = ctx.path(prefix + "_groups.csv");
    check(dph_ensemble_write_csv(ens, tp.c_str(), gp.c_str()), "writing ensemble CSV");
    ctx.written.push_back(tp);
    ctx.written.push_back(gp);
  }

  if (ctx.cfg.output.dump_schedule) {
    dph_schedule sched = nullptr;
    // A representative trial: window of half the flip period, train at the window.
    check(dph_transmission_schedule(&c, 0.5 * kTwoPi / c.j, 0.0, &sched), "building schedule");
    dump_schedule(ctx, sched, prefix + "_schedule.json");
  }
}

// ---- memory

std::string alpha_suffix(double alpha) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "_a%03ld", std::lround(alpha * 100.0));
  return buf;
}

void run_memory(Context& ctx, const MemoryParams& params) {
  const dph_memory_config& base = params.base;
  const std::vector<double>& times = params.observation_times;
  const double t_last = times.back();

  auto& s = ctx.summary;
  s << "experiment: memory\n";
  s << "J/2pi = " << num(base.j / kTwoPi) << " Hz, mean interval = " << num(base.mean_interval * 1e3)
    << " ms, trials = " << base.trials << ", seed = " << ctx.seed
    << ", readout = " << (base.readout == DPH_READOUT_FLIP_ALIGNED ? "flip_aligned" : "fixed_time") << "\n";
  double t2b = NAN;
  if (base.bang_bang) {
    check(dph_t2b_star(base.j, base.t_b, base.mean_interval, &t2b), "T2b*");
    s << "bang-bang: t_b = " << num(base.t_b * 1e3) << " ms, T2b* theory = " << num(t2b * 1e3) << " ms\n";
  } else {
    s << "bang-bang: off\n";
  }
  s << "magnitudes at T = " << num(t_last * 1e3) << " ms\n\n";

  const double r_theory = base.j * base.j * base.mean_interval * t_last / 8.0;
  Table t({"alpha", "T2 sim [ms]", "T2 theory [ms]", "dev %", "|m(T)| sim", "|m(T)| fit", "|m(T)| theory", "dev %",
           "R sim", "R theory", "fit R^2"});
  std::vector<std::string> rows;

  for (const double alpha : params.alphas) {
    dph_memory_config c = base;
    c.alpha = alpha;
    c.seed = ctx.seed;
    c.observation_times = times.data();
    c.observation_count = times.size();
    dph_curve curve = nullptr;
    check(dph_run_memory(&c, &curve), "memory run at alpha " + num(alpha));
    std::unique_ptr<dph_curve_s, void (*)(dph_curve)> guard(curve, dph_curve_free);

    for (std::size_t k = 0; k < dph_curve_warning_count(curve); ++k)
      std::cerr << "warning: alpha " << num(alpha) << ": " << dph_curve_warning(curve, k) << "\n";

    std::vector<double> ts(dph_curve_point_count(curve)), ms(ts.size());
    check(dph_curve_points(curve, ts.data(), ms.data(), ts.size()), "reading curve");

    dph_fit fit{};
    const bool has_fit = dph_curve_fit(curve, &fit) == DPH_OK;
    const double t2_sim = has_fit ? fit.t2 : NAN;
    const double m_fit = has_fit ? std::exp(fit.intercept + fit.slope * t_last) : NAN;

    double t2_theory = INFINITY;
    if (base.bang_bang)
      t2_theory = t2b;
    else if (alpha > 0.0)
      check(dph_t2_star(base.j, alpha, base.mean_interval, &t2_theory), "T2*");
    const double m_theory = std::exp(-t_last / t2_theory);

    // R from the fitted decay factor exp(-T/T2) against an ideal reference of 1.
    double r_sim = NAN;
    if (!base.bang_bang && alpha > 0.0 && has_fit && fit.decays)
      check(dph_r_statistic(std::exp(-t_last / fit.t2), 1.0, alpha, &r_sim), "R statistic");
    const bool r_applies = !base.bang_bang && alpha > 0.0;

    t.add({fixed(alpha, 2), num(t2_sim * 1e3, 5), num(t2_theory * 1e3, 5), deviation(t2_sim, t2_theory),
           num(ms.back(), 4), num(m_fit, 4), num(m_theory, 4), deviation(ms.back(), m_theory),
           r_applies ? num(r_sim, 4) : "n/a", r_applies ? num(r_theory, 4) : "n/a",
           has_fit ? fixed(fit.r_squared, 5) : "n/a"});
    rows.push_back("alpha " + fixed(alpha, 2) + ": " + (base.bang_bang ? "T2b*" : "T2*") + " sim " +
                   fixed(t2_sim * 1e3, 2) + " ms vs " + fixed(t2_theory * 1e3, 2) + " ms");

    const std::string name = ctx.cfg.output.prefix + alpha_suffix(alpha);
    if (ctx.report()) {
      Table d({"time_s", "magnitude", "fit_magnitude"});
      for (std::size_t k = 0; k < ts.size(); ++k)
        d.add({num(ts[k], 12), num(ms[k], 12), has_fit ? num(std::exp(fit.intercept + fit.slope * ts[k]), 12) : "nan"});
      ctx.data << "\ncurve alpha = " << fixed(alpha, 2) << "\n" << d.render();
    } else {
      const std::string p = ctx.path(name + ".csv");
      check(dph_curve_write_csv(curve, p.c_str()), "writing curve CSV");
      ctx.written.push_back(p);
    }
  }
  s << t.render() << "\n";
  for (const auto& r : rows) s << r << "\n";
}

// ---- channel demo and verify

using Mat2 = std::array<dph_complex, 4>;
using Mat4 = std::array<dph_complex, 16>;

Mat2 ket_bra(double a0, double a1) {  // |a><a| for real a = (a0, a1)
  return {dph_complex{a0 * a0, 0}, {a0 * a1, 0}, {a1 * a0, 0}, {a1 * a1, 0}};
}

Mat2 scaled_sum(const Mat2& a, double wa, const Mat2& b, double wb) {
  Mat2 out{};
  for (int k = 0; k < 4; ++k) out[k] = {wa * a[k].re + wb * b[k].re, wa * a[k].im + wb * b[k].im};
  return out;
}

Mat4 add(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (int k = 0; k < 16; ++k) out[k] = {a[k].re + b[k].re, a[k].im + b[k].im};
  return out;
}

const Mat2 kIdentity{dph_complex{1, 0}, {0, 0}, {0, 0}, {1, 0}};
const Mat2 kSigmaZ{dph_complex{1, 0}, {0, 0}, {0, 0}, {-1, 0}};

Mat4 tensor(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  check(dph_tensor(a.data(), b.data(), out.data()), "tensor");
  return out;
}

struct ChannelSet {
  dph_channel flip = nullptr, dilation = nullptr, cnot = nullptr, mixing = nullptr;
  ~ChannelSet() {
    dph_channel_free(flip);
    dph_channel_free(dilation);
    dph_channel_free(cnot);
    dph_channel_free(mixing);
  }
};

void build_channels(double p, ChannelSet& set) {
  const double s = 1.0 / std::sqrt(2.0);
  const Mat4 u_flip = add(tensor(kIdentity, ket_bra(1, 0)), tensor(kSigmaZ, ket_bra(0, 1)));
  const Mat4 u_cnot = add(tensor(kIdentity, ket_bra(s, s)), tensor(kSigmaZ, ket_bra(s, -s)));
  const Mat2 psi_env = ket_bra(std::sqrt(p), std::sqrt(1.0 - p));
  const Mat2 mixed_env = scaled_sum(ket_bra(s, s), p, ket_bra(s, -s), 1.0 - p);
  check(dph_channel_phase_flip(p, &set.flip), "phase flip channel");
  check(dph_channel_from_environment(u_flip.data(), psi_env.data(), &set.dilation), "flip dilation");
  check(dph_channel_from_environment(u_cnot.data(), mixed_env.data(), &set.cnot), "CNOT dilation");
  std::array<dph_complex, 8> unitaries{};
  std::copy(kIdentity.begin(), kIdentity.end(), unitaries.begin());
  std::copy(kSigmaZ.begin(), kSigmaZ.end(), unitaries.begin() + 4);
  const double probs[2] = {p, 1.0 - p};
  check(dph_channel_from_mixing(unitaries.data(), probs, 2, &set.mixing), "mixing channel");
}

// Factor multiplying the coherence of (I + sigma_x)/2.
double coherence_factor(dph_channel ch) {
  const Mat2 plus{dph_complex{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}};
  Mat2 out{};
  check(dph_channel_apply(ch, plus.data(), out.data()), "applying channel");
  dph_complex amp{};
  check(dph_amplitude(out.data(), &amp, nullptr), "amplitude");
  return amp.re;
}

bool equal_maps(dph_channel a, dph_channel b, double tol) {
  int eq = 0;
  check(dph_channels_equal(a, b, tol, &eq), "comparing channels");
  return eq != 0;
}

void run_channel_demo(Context& ctx, const ChannelDemoParams& params) {
  auto& s = ctx.summary;
  s << "experiment: channel-demo\n";
  s << "coherence factor of (I + sigma_x)/2 under each construction; theory 2p - 1\n\n";
  Table t({"p", "phase_flip", "flip dilation", "CNOT dilation", "mixing", "theory", "equal as maps"});
  std::ostringstream csv;
  csv << "p,phase_flip,flip_dilation,cnot_dilation,mixing,theory,equal\n";
  for (const double p : params.p_values) {
    ChannelSet set;
    build_channels(p, set);
    const double f[4] = {coherence_factor(set.flip), coherence_factor(set.dilation), coherence_factor(set.cnot),
                         coherence_factor(set.mixing)};
    const bool equal = equal_maps(set.flip, set.dilation, params.tolerance) &&
                       equal_maps(set.flip, set.cnot, params.tolerance) &&
                       equal_maps(set.flip, set.mixing, params.tolerance);
    t.add({num(p), num(f[0]), num(f[1]), num(f[2]), num(f[3]), num(2.0 * p - 1.0), equal ? "yes" : "no"});
    csv << num(p, 12) << ',' << num(f[0], 12) << ',' << num(f[1], 12) << ',' << num(f[2], 12) << ','
        << num(f[3], 12) << ',' << num(2.0 * p - 1.0, 12) << ',' << (equal ? 1 : 0) << '\n';
  }
  s << t.render();

  s << "\nphase averaging <exp(i theta)>\n";
  Table ph({"distribution", "re", "im", "theory"});
  std::ostringstream pcsv;
  pcsv << "family,param,q,re,im\n";
  struct Family {
    const char* name;
    int id;
    double param, q, theory;
  };
  const Family families[] = {
      {"uniform", DPH_PHASE_UNIFORM, 0.0, 0.0, 0.0},
      {"gaussian", DPH_PHASE_GAUSSIAN, params.gaussian_stddev, 0.0,
       std::exp(-0.5 * params.gaussian_stddev * params.gaussian_stddev)},
      {"two_point", DPH_PHASE_TWO_POINT, params.two_point_delta, params.two_point_q, NAN},
  };
  for (const auto& fam : families) {
    dph_complex f{};
    check(dph_phase_average_factor(fam.id, fam.param, fam.q, &f), "phase average");
    const std::string theory = fam.id == DPH_PHASE_TWO_POINT
                                   ? num(std::cos(fam.param)) + (fam.q == 0.5 ? "" : " (re, q = 0.5)")
                                   : num(fam.theory);
    ph.add({fam.name, num(f.re), num(f.im), theory});
    pcsv << fam.name << ',' << num(fam.param, 12) << ',' << num(fam.q, 12) << ',' << num(f.re, 12) << ','
         << num(f.im, 12) << '\n';
  }
  s << ph.render();

  const std::string& prefix = ctx.cfg.output.prefix;
  if (ctx.report()) {
    ctx.data << "\nchannel table\n" << csv.str() << "\nphase factors\n" << pcsv.str();
  } else {
    write_text(ctx, prefix + ".csv", csv.str());
    write_text(ctx, prefix + "_phase_factors.csv", pcsv.str());
  }
}

void run_verify(Context& ctx, const VerifyParams& params) {
  auto& s = ctx.summary;
  double h_norm = 0.0;
  check(dph_lab_frame_norm(params.omega_01, params.omega_02, params.j, &h_norm), "Hamiltonian norm");
  s << "experiment: verify\n";
  s << "rotating frame: omega_01/2pi = " << num(params.omega_01 / kTwoPi) << " Hz, omega_02/2pi = "
    << num(params.omega_02 / kTwoPi) << " Hz, J/2pi = " << num(params.j / kTwoPi) << " Hz, t = "
    << num(params.time) << " s, |H| = " << num(h_norm) << "\n\n";

  std::ostringstream csv;
  csv << "check,parameter,residual,ratio\n";
  Table t({"dt [s]", "residual", "residual/|H|", "ratio to previous"});
  double prev = NAN;
  double prev_dt = NAN;
  for (const double dt : params.dts) {
    double r = 0.0;
    check(dph_verify_rotating_frame(params.omega_01, params.omega_02, params.j, params.time, dt, &r),
          "rotating-frame check");
    // Ratio normalized to a halving of dt, where second order means 4.
    const double ratio = std::isnan(prev) ? NAN : std::pow(prev / r, std::log(2.0) / std::log(prev_dt / dt));
    t.add({num(dt), num(r, 4), num(r / h_norm, 4), num(ratio, 4)});
    csv << "rotating_frame," << num(dt, 12) << ',' << num(r, 12) << ',' << num(ratio, 12) << '\n';
    prev = r;
    prev_dt = dt;
  }
  s << t.render();

  s << "\nchannel equivalence (tolerance " << num(params.tolerance) << ")\n";
  Table c({"p", "flip dilation", "CNOT dilation", "mixing", "max coherence error"});
  for (const double p : params.p_values) {
    ChannelSet set;
    build_channels(p, set);
    const bool d = equal_maps(set.flip, set.dilation, params.tolerance);
    const bool n = equal_maps(set.flip, set.cnot, params.tolerance);
    const bool m = equal_maps(set.flip, set.mixing, params.tolerance);
    const double expect = 2.0 * p - 1.0;
    double err = 0.0;
    for (dph_channel ch : {set.flip, set.dilation, set.cnot, set.mixing})
      err = std::max(err, std::fabs(coherence_factor(ch) - expect));
    c.add({num(p), d ? "pass" : "FAIL", n ? "pass" : "FAIL", m ? "pass" : "FAIL", num(err, 3)});
    csv << "channel_equivalence," << num(p, 12) << ',' << num(err, 12) << ',' << ((d && n && m) ? 1 : 0) << '\n';
  }
  s << c.render();

  if (ctx.report())
    ctx.data << "\nresiduals\n" << csv.str();
  else
    write_text(ctx, ctx.cfg.output.prefix + ".csv", csv.str());
}

int run(const std::string& config_path, std::optional<std::uint64_t> seed_override,
        const std::optional<std::string>& out_override) {
  RunConfig cfg;
  try {
    cfg = load_run_config(config_path);
    if (seed_override) cfg.seed = seed_override;
    if (needs_seed(cfg) && !cfg.seed)
      throw ConfigError(cfg.source + ":/seed: required for Monte Carlo experiments (or pass --seed)");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    Context ctx{cfg, out_override ? *out_override : cfg.output.dir};
    ctx.seed = cfg.seed.value_or(0);
    std::error_code ec;
    std::filesystem::create_directories(ctx.dir, ec);
    if (ec) throw RuntimeFailure("cannot create output directory '" + ctx.dir.string() + "': " + ec.message());

    if (const auto* p = std::get_if<TransmissionParams>(&cfg.params))
      run_transmission(ctx, *p);
    else if (const auto* p = std::get_if<MemoryParams>(&cfg.params))
      run_memory(ctx, *p);
    else if (const auto* p = std::get_if<ChannelDemoParams>(&cfg.params))
      run_channel_demo(ctx, *p);
    else
      run_verify(ctx, std::get<VerifyParams>(cfg.params));

    if (ctx.report()) write_text(ctx, cfg.output.prefix + "_report.txt", ctx.summary.str() + ctx.data.str());
    std::cout << ctx.summary.str();
    std::cout << "\noutputs:\n";
    for (const auto& w : ctx.written) std::cout << "  " << w << "\n";
    return 0;
  } catch (const RuntimeFailure& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace
}  // namespace dephase_sim

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulator of engineered dephasing in a two-qubit system"};
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  app.add_option("config", config, "experiment config (JSON)")->required();
  app.add_option("--seed", seed, "override the config seed");
  app.add_option("--out", out, "override the output directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return dephase_sim::run(config, seed, out);
}
