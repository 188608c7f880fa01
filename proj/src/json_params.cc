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

#include "alphagrad/json_params.h"

#include <cmath>

namespace alphagrad {

ParamReader::ParamReader(const nlohmann::json& object, std::string context)
    : object_(object.is_null() ? nlohmann::json::object() : object),
      context_(std::move(context)) {
  if (!object_.is_object()) {
    throw ConfigError(context_ + " must be a JSON object", context_);
  }
}

void ParamReader::Fail(const std::string& key, const std::string& what) const {
  throw ConfigError(context_ + "." + key + ": " + what, key);
}

bool ParamReader::Has(const std::string& key) const {
  return object_.contains(key) && !object_.at(key).is_null();
}

double ParamReader::Number(const std::string& key, double fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (!v.is_number()) Fail(key, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) Fail(key, "must be finite");
  return d;
}

std::optional<double> ParamReader::OptionalNumber(const std::string& key) {
  if (!Has(key)) {
    used_.insert(key);
    return std::nullopt;
  }
  return Number(key, 0.0);
}

int ParamReader::Integer(const std::string& key, int fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == std::floor(d) && std::abs(d) < 2e9) return static_cast<int>(d);
  }
  Fail(key, "expected an integer");
}

std::uint64_t ParamReader::Unsigned(const std::string& key,
                                    std::uint64_t fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  Fail(key, "expected a non-negative integer");
}

bool ParamReader::Bool(const std::string& key, bool fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (!v.is_boolean()) Fail(key, "expected true or false");
  return v.get<bool>();
}

std::string ParamReader::String(const std::string& key,
                                const std::string& fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (!v.is_string()) Fail(key, "expected a string");
  return v.get<std::string>();
}

std::vector<double> ParamReader::Numbers(const std::string& key,
                                         std::vector<double> fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (!v.is_array()) Fail(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& item : v) {
    if (!item.is_number()) Fail(key, "expected an array of numbers");
    out.push_back(item.get<double>());
  }
  return out;
}

std::vector<int> ParamReader::Integers(const std::string& key,
                                       std::vector<int> fallback) {
  used_.insert(key);
  if (!Has(key)) return fallback;
  const auto& v = object_.at(key);
  if (!v.is_array()) Fail(key, "expected an array of integers");
  std::vector<int> out;
  for (const auto& item : v) {
    if (!item.is_number_integer()) Fail(key, "expected an array of integers");
    out.push_back(item.get<int>());
  }
  return out;
}

nlohmann::json ParamReader::Raw(const std::string& key) {
  used_.insert(key);
  return Has(key) ? object_.at(key) : nlohmann::json();
}

void ParamReader::Finish() const {
  for (const auto& [key, value] : object_.items()) {
    if (!used_.count(key)) Fail(key, "unknown key");
  }
}

}  // namespace alphagrad
