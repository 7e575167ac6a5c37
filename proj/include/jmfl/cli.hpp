// Copyright 2026 The jmfl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JMFL_CLI_HPP_
#define JMFL_CLI_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace jmfl {

struct CampaignConfig {
  int q = 3;
  int r = 2;
  int vmax = 1;
  std::string alpha = "all";  // all | sample:N
  std::vector<std::string> campaigns;
  std::string mode = "exact";  // exact | float
  std::string out;
  std::uint64_t seed = 1;
  int threads = 0;      // 0 keeps the OpenMP default
  bool strict = false;  // judge the identities exactly as stated
  bool timing = false;  // record wall time; off keeps reports byte-identical
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckRecord {
  std::string name;
  nlohmann::ordered_json inputs, values;
  bool pass = false;
  std::int64_t micros = 0;
};

struct Report {
  CampaignConfig config;
  std::vector<CheckRecord> checks;

  std::size_t failed() const;
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

const std::vector<std::string>& campaign_names();
// Throws ConfigError.
void validate(const CampaignConfig& c);
Report run_campaign(const CampaignConfig& c);

}  // namespace jmfl

#endif  // JMFL_CLI_HPP_
