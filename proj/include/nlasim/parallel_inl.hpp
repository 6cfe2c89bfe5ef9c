// Copyright 2026 The nlasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLASIM_PARALLEL_INL_HPP
#define NLASIM_PARALLEL_INL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

namespace nlasim {

template <typename T>
std::vector<T> parallel_map(int n, int threads, const std::function<T(int)>& fn) {
  std::vector<std::optional<T>> slots(static_cast<std::size_t>(std::max(n, 0)));
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(slots.size());
  const auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      try {
        slots[static_cast<std::size_t>(i)].emplace(fn(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const int count = std::clamp(threads, 1, std::max(n, 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // Rethrow the lowest-index failure so the reported error is deterministic.
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace nlasim

#endif  // NLASIM_PARALLEL_INL_HPP
