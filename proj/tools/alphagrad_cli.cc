// Copyright 2026 The alphagrad Authors
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

// Command-line front end for the experiment runner.

#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "alphagrad/cli/commands.h"

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("ALPHAGRAD_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Monte-Carlo policy-gradient estimator experiments"};
  app.require_subcommand(1);
  alphagrad::cli::Invocation inv;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string plot;
  for (const char* name : {"estimate", "sweep", "optimize", "landscape"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", inv.config_path, "experiment JSON")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "overrides the config seed");
    sub->add_option("--plot", plot, "plot spec JSON");
    sub->callback([&inv, name] { inv.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : alphagrad::cli::kExitConfig;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--out")) inv.out_dir = out_dir;
    if (sub->count("--seed")) inv.seed = seed;
    if (sub->count("--plot")) inv.plot_path = plot;
  }
  try {
    return alphagrad::cli::Execute(inv, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
