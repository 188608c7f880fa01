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

#ifndef ALPHAGRAD_ENVS_REGISTRY_H_
#define ALPHAGRAD_ENVS_REGISTRY_H_

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphagrad/env.h"

namespace alphagrad {

// Per-environment experiment defaults; every field can be overridden from
// the experiment config.
struct ExperimentDefaults {
  double sigma = 1.0;
  double learning_rate = 0.1;
  double gamma = 1.0;
  int num_samples = 1000;
};

struct EnvEntry {
  std::shared_ptr<const EnvModel> env;
  ExperimentDefaults defaults;
};

// Builds a named environment from a JSON object of parameter overrides.
// Unknown names or keys raise ConfigError.
EnvEntry MakeEnv(const std::string& name, const nlohmann::json& params);

std::vector<std::string> EnvNames();

}  // namespace alphagrad

#endif  // ALPHAGRAD_ENVS_REGISTRY_H_
