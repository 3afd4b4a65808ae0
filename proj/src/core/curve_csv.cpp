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

#include "core/curve_csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace dephase {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) fail(Errc::io, "failed writing '" + path + "'");
}

double parse_field(const std::string& s, const std::string& path) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(Errc::io, "'" + path + "': malformed number '" + s + "'");
}

}  // namespace

void write_curve_csv(const DecayCurve& curve, const std::string& path) {
  require(!curve.points.empty(), Errc::invalid_argument, "refusing to write an empty decay curve");
  auto out = open_for_write(path);
  out << "time_s,magnitude,fit_magnitude\n";
  for (const auto& p : curve.points) {
    const double fit = curve.fit ? curve.fit->evaluate(p.time) : std::numeric_limits<double>::quiet_NaN();
    out << format_number(p.time) << ',' << format_number(p.magnitude) << ',' << format_number(fit) << '\n';
  }
  finish(out, path);
}

std::vector<CurveRow> read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != "time_s,magnitude,fit_magnitude")
    fail(Errc::io, "'" + path + "': unexpected header");
  std::vector<CurveRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b, c;
    if (!std::getline(fields, a, ',') || !std::getline(fields, b, ',') || !std::getline(fields, c))
      fail(Errc::io, "'" + path + "': expected three columns");
    rows.push_back({parse_field(a, path), parse_field(b, path), parse_field(c, path)});
  }
  return rows;
}

void write_trials_csv(const EnsembleResult& result, const std::string& path) {
  require(!result.trials.empty(), Errc::invalid_argument, "refusing to write an empty ensemble");
  auto out = open_for_write(path);
  out << "trial,re,im,magnitude,phase\n";
  for (std::size_t k = 0; k < result.trials.size(); ++k) {
    const Complex a = result.trials[k];
    out << k << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << ','
        << format_number(std::abs(a)) << ',' << format_number(std::arg(a)) << '\n';
  }
  finish(out, path);
}

void write_groups_csv(const EnsembleResult& result, const std::string& path) {
  require(!result.groups.empty(), Errc::invalid_argument, "refusing to write an empty ensemble");
  auto out = open_for_write(path);
  out << "group,re,im,magnitude\n";
  for (std::size_t k = 0; k < result.groups.size(); ++k) {
    const Complex a = result.groups[k];
    out << k << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << ','
        << format_number(std::abs(a)) << '\n';
  }
  finish(out, path);
}

}  // namespace dephase
