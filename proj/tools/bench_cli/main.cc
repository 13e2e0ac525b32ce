// Copyright 2026 The bundleopt Authors
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
// bundleopt: command-line runner for smoothing diagnostics, iRS-LQR
// comparisons and contact-model probes.
//
// Exit codes: 0 success, 1 I/O or unexpected failure, 2 usage or config
// error, 3 numerical failure.

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "bench_cli/commands.h"
#include "bench_cli/json_reader.h"
#include "bundleopt/common/error.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

// BUNDLEOPT_LOG in {error, info, debug}; info when unset.
void ConfigureLogging() {
  auto logger = spdlog::stderr_color_mt("bundleopt");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  const char* env = std::getenv("BUNDLEOPT_LOG");
  const std::string level = env ? env : "info";
  if (level == "error") {
    spdlog::set_level(spdlog::level::err);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else {
    throw bundleopt::ConfigError("BUNDLEOPT_LOG must be error, info or debug, "
                                 "got '" + level + "'");
  }
}

struct CommandLine {
  std::string config;
  std::string out;
  std::uint64_t seed = 0;
  int jobs = 1;
};

CLI::App* AddCommand(CLI::App& app, const std::string& name,
                     const std::string& description, CommandLine& args,
                     CLI::Option*& seed_option) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--config", args.config, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", args.out, "Output directory")->required();
  seed_option =
      sub->add_option("--seed", args.seed, "Overrides the config seed");
  sub->add_option("--jobs", args.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  using bundleopt::cli::RunOptions;

  CLI::App app{"bundleopt: randomized smoothing and iRS-LQR experiments"};
  app.require_subcommand(1);
  CommandLine args;
  CLI::Option* seed_eval = nullptr;
  CLI::Option* seed_plan = nullptr;
  CLI::Option* seed_probe = nullptr;
  CLI::App* eval = AddCommand(app, "bundle-eval",
                              "Bundled objective and gradients of a test "
                              "function over a grid",
                              args, seed_eval);
  CLI::App* plan = AddCommand(app, "plan",
                              "iRS-LQR over gradient modes and seeds", args,
                              seed_plan);
  CLI::App* probe = AddCommand(app, "contact-probe",
                               "One-step box motion of the 2D contact models "
                               "over a command grid",
                               args, seed_probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    ConfigureLogging();
    RunOptions options;
    options.out_dir = args.out;
    options.jobs = args.jobs;
    std::function<void(bundleopt::cli::Json, const RunOptions&)> command;
    CLI::Option* seed_option = nullptr;
    if (eval->parsed()) {
      command = bundleopt::cli::RunBundleEval;
      seed_option = seed_eval;
    } else if (plan->parsed()) {
      command = bundleopt::cli::RunPlan;
      seed_option = seed_plan;
    } else {
      command = bundleopt::cli::RunContactProbe;
      seed_option = seed_probe;
    }
    if (seed_option->count() > 0) options.seed = args.seed;
    command(bundleopt::cli::LoadJsonFile(args.config), options);
    spdlog::info("wrote results to {}", options.out_dir.string());
    return kExitOk;
  } catch (const bundleopt::ConfigError& e) {
    spdlog::error("config error: {}", e.what());
    return kExitConfig;
  } catch (const bundleopt::NumericalError& e) {
    spdlog::error("numerical failure: {}", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitFailure;
  }
}
