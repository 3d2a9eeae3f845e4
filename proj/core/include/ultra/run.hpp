// Copyright 2026 The ultra authors
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

#pragma once

#include <cstdint>
#include <string>

#include "ultra/io.hpp"

namespace ultra {

// One invocation of the tool, fully determined by this config plus the input
// file bytes: reports are byte-stable for a fixed seed.
struct RunConfig {
  std::string command;   // newton | classify | bound | enumerate | verify | decompose
  std::string input_path;
  std::string slope = "0";
  unsigned long smax = 3;
  unsigned long nmax = 100;
  long budget = kDefaultExpansionBudget;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string plot_path;  // newton only

  bool cor_example = false;  // bound --cor-example: closed form, no input series
  Int cor_p = 2;
  unsigned long cor_e = 1;
  Int cor_n = 1;

  bool have_decompose_args = false;
  long dec_a1 = 0;
  long dec_a2 = 0;
  unsigned long dec_n = 1;

  unsigned long phi_ceiling = 256;
};

struct RunResult {
  // 0 success; 1 input/config/budget error; 2 verify found count > bound.
  int exit_code = 0;
  std::string output;
  std::string error;
};

RunResult run(const RunConfig& config);

}  // namespace ultra
