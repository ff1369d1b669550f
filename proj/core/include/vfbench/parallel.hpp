/*
 * Copyright 2026 The vfbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace vfb {

/// Worker count from the VFB_JOBS environment variable, falling back to the
/// hardware concurrency (at least 1).
int default_jobs();

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work items must write
/// disjoint outputs. If any item throws, the exception of the lowest failing
/// index is rethrown after all workers finish, so failures are reported the
/// same way regardless of scheduling.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

/// Ordered map: result[i] = fn(i), independent of completion order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int jobs, F&& fn) {
  std::vector<std::optional<T>> slots(n);
  parallel_for(n, jobs, [&](std::size_t i) { slots[i].emplace(fn(i)); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace vfb
