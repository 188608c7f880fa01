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

#ifndef ALPHAGRAD_JSON_PARAMS_H_
#define ALPHAGRAD_JSON_PARAMS_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "alphagrad/types.h"

namespace alphagrad {

// Typed reads from a JSON object that remember which keys were consumed, so
// that Finish() can reject anything unknown.
class ParamReader {
 public:
  ParamReader(const nlohmann::json& object, std::string context);

  bool Has(const std::string& key) const;
  double Number(const std::string& key, double fallback);
  std::optional<double> OptionalNumber(const std::string& key);
  int Integer(const std::string& key, int fallback);
  std::uint64_t Unsigned(const std::string& key, std::uint64_t fallback);
  bool Bool(const std::string& key, bool fallback);
  std::string String(const std::string& key, const std::string& fallback);
  std::vector<double> Numbers(const std::string& key,
                              std::vector<double> fallback);
  std::vector<int> Integers(const std::string& key, std::vector<int> fallback);
  // marks the key consumed and returns it (null when absent)
  nlohmann::json Raw(const std::string& key);

  // throws ConfigError naming the first unconsumed key
  void Finish() const;

 private:
  [[noreturn]] void Fail(const std::string& key, const std::string& what) const;

  nlohmann::json object_;
  std::string context_;
  std::set<std::string> used_;
};

}  // namespace alphagrad

#endif  // ALPHAGRAD_JSON_PARAMS_H_
