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

#ifndef ALPHAGRAD_PARALLEL_H_
#define ALPHAGRAD_PARALLEL_H_

#include <exception>
#include <vector>

#include "alphagrad/estimators.h"

namespace alphagrad {

// Evaluates fn(i) for i in [0, count) and returns the results by index.
// The parallel path shards indices over OpenMP threads; since each result
// depends only on i, the output is independent of the schedule. If any
// evaluation throws, the exception of the lowest failing index is rethrown.
template <class Result, class Fn>
std::vector<Result> ForEachSample(int count, Execution execution, Fn&& fn) {
  std::vector<Result> out(count);
  if (execution == Execution::kSerial) {
    for (int i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < count; ++i) {
    try {
      out[i] = fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace alphagrad

#endif  // ALPHAGRAD_PARALLEL_H_
