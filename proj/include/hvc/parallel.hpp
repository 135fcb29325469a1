// Copyright 2026 The hvc Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace hvc {

/// Evaluates f(0..n-1) with at most `threads` tasks in flight (0 = hardware
/// concurrency). Results come back in index order.
template <typename F>
auto parallel_map(std::size_t n, std::size_t threads, F&& f) {
  using T = decltype(f(std::size_t{0}));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::max<std::size_t>(1, std::min(threads, n));
  std::vector<T> out(n);
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  for (std::size_t first = 0; first < n; first += threads) {
    const std::size_t last = std::min(n, first + threads);
    std::vector<std::future<T>> wave;
    for (std::size_t i = first; i < last; ++i) wave.push_back(std::async(std::launch::async, f, i));
    for (std::size_t i = first; i < last; ++i) out[i] = wave[i - first].get();
  }
  return out;
}

}  // namespace hvc
