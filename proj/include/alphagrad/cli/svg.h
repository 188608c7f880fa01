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

#ifndef ALPHAGRAD_CLI_SVG_H_
#define ALPHAGRAD_CLI_SVG_H_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphagrad/cli/csv.h"

namespace alphagrad::cli {

struct PlotSpec {
  std::string x;
  std::vector<std::string> series;
  bool log_x = false;
  bool log_y = false;
  // visual multipliers per series, never applied to data files
  std::map<std::string, double> scale;
  std::string title;
  int width = 640;
  int height = 400;
};

PlotSpec ParsePlotSpec(const nlohmann::json& doc);

// Standalone SVG with one polyline per series. ConfigError on a missing
// column or a nonpositive value on a log axis (naming the row index).
std::string EmitSvg(const ResultTable& table, const PlotSpec& spec);

}  // namespace alphagrad::cli

#endif  // ALPHAGRAD_CLI_SVG_H_
