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

#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "ultra/run.hpp"

namespace {

long budget_from_env(long fallback) {
  const char* env = std::getenv("ULTRA_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) return fallback;
  return value;
}

void add_format_flag(CLI::App* cmd, ultra::RunConfig& config) {
  cmd->add_option("--format", config.format, "Report format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

void add_input_flag(CLI::App* cmd, ultra::RunConfig& config, bool required) {
  auto* opt = cmd->add_option("--input", config.input_path,
                              "Series file (JSON, one Laurent series)");
  opt->check(CLI::ExistingFile);
  if (required) opt->required();
}

}  // namespace

int main(int argc, char** argv) {
  ultra::RunConfig config;
  config.budget = budget_from_env(config.budget);

  CLI::App app{"Effective bounds for torsion values of Laurent series over "
               "non-Archimedean local fields"};
  app.require_subcommand(1);

  auto* newton = app.add_subcommand(
      "newton", "Valuation data and Newton polygon of a series");
  add_input_flag(newton, config, true);
  newton->add_option("--slope", config.slope, "Sphere slope as a/b")
      ->capture_default_str();
  newton->add_option("--plot", config.plot_path,
                     "Write the polygon as an SVG file");
  add_format_flag(newton, config);

  auto* classify = app.add_subcommand(
      "classify", "Speciality verdict, c_f case analysis, randomized checks");
  add_input_flag(classify, config, true);
  classify->add_option("--seed", config.seed, "Seed for the randomized checks")
      ->capture_default_str();
  add_format_flag(classify, config);

  auto* bound = app.add_subcommand(
      "bound", "Effective torsion-value bound for a series");
  add_input_flag(bound, config, false);
  bound->add_option("--budget", config.budget,
                    "Expansion budget in coefficient operations")
      ->check(CLI::PositiveNumber);
  auto* cor = bound->add_flag("--cor-example", config.cor_example,
                              "Evaluate the closed-form example bound instead");
  bound->add_option("-p", config.cor_p, "Residue characteristic")
      ->needs(cor);
  bound->add_option("-e", config.cor_e, "Ramification index")->needs(cor);
  bound->add_option("-n", config.cor_n, "Number of terms")->needs(cor);
  add_format_flag(bound, config);

  auto* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive torsion-value search for a series");
  add_input_flag(enumerate, config, true);
  enumerate->add_option("--smax", config.smax,
                        "Char p: largest extension degree to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  enumerate->add_option("--nmax", config.nmax,
                        "Char 0: largest root-of-unity order to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  enumerate->add_option("--budget", config.budget,
                        "Expansion budget in coefficient operations")
      ->check(CLI::PositiveNumber);
  add_format_flag(enumerate, config);

  auto* verify = app.add_subcommand(
      "verify", "Compare the bound against exhaustive enumeration");
  add_input_flag(verify, config, true);
  verify->add_option("--smax", config.smax,
                     "Char p: largest extension degree to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--nmax", config.nmax,
                     "Char 0: largest root-of-unity order to scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--budget", config.budget,
                     "Expansion budget in coefficient operations")
      ->check(CLI::PositiveNumber);
  add_format_flag(verify, config);

  auto* decompose = app.add_subcommand(
      "decompose", "Root-of-unity pair decomposition (a1, a2) mod n");
  decompose->add_option("a1", config.dec_a1, "First exponent")->required();
  decompose->add_option("a2", config.dec_a2, "Second exponent")->required();
  decompose->add_option("n", config.dec_n, "Root-of-unity order")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format_flag(decompose, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (const CLI::App* sub : app.get_subcommands()) {
    config.command = sub->get_name();
  }
  if (config.command == "decompose") config.have_decompose_args = true;

  ultra::RunResult result = ultra::run(config);
  if (!result.output.empty()) std::fputs(result.output.c_str(), stdout);
  if (!result.error.empty()) std::fputs(result.error.c_str(), stderr);
  return result.exit_code;
}
