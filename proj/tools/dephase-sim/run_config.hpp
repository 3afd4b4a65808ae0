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

#ifndef DEPHASE_TOOLS_RUN_CONFIG_HPP_
#define DEPHASE_TOOLS_RUN_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dephase/dephase.h"

namespace dephase_sim {

// Message already carries the file and JSON-pointer location.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, report };

struct OutputSpec {
  std::string dir = ".";
  std::string prefix;
  OutputFormat format = OutputFormat::csv;
  bool dump_schedule = false;
};

struct TransmissionParams {
  dph_transmission_config cfg{};
};

struct MemoryParams {
  dph_memory_config base{};
  std::vector<double> alphas;
  std::vector<double> observation_times;
};

struct ChannelDemoParams {
  std::vector<double> p_values{0.0, 0.25, 0.5, 0.75, 1.0};
  double gaussian_stddev = 0.5;
  double two_point_delta = 0.5;
  double two_point_q = 0.5;
  double tolerance = 1e-12;
};

struct VerifyParams {
  double j = 0.0;
  double omega_01 = 0.0;
  double omega_02 = 0.0;
  double time = 1e-3;
  std::vector<double> dts{1e-6, 5e-7, 2.5e-7, 1e-7};
  std::vector<double> p_values{0.0, 0.25, 0.5, 1.0};
  double tolerance = 1e-12;
};

using Parameters = std::variant<TransmissionParams, MemoryParams, ChannelDemoParams, VerifyParams>;

struct RunConfig {
  std::string experiment;
  std::optional<std::uint64_t> seed;
  OutputSpec output;
  Parameters params;
  std::string source;  // path the document was read from
};

RunConfig parse_run_config(const std::string& text, const std::string& source);
RunConfig load_run_config(const std::string& path);

bool needs_seed(const RunConfig& cfg);

}  // namespace dephase_sim

#endif  // DEPHASE_TOOLS_RUN_CONFIG_HPP_
