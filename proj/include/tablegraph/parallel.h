// Copyright 2026 The tablegraph Authors.
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

#ifndef TABLEGRAPH_PARALLEL_H_
#define TABLEGRAPH_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace tablegraph {

// Worker count used when an operation is not given one explicitly.
// Defaults to the number of logical cores.
unsigned default_workers();
void set_default_workers(unsigned workers);

namespace parallel {

// Half-open index range owned by one worker.
struct Range {
  std::size_t begin;
  std::size_t end;
};

// Splits [0, n) into `parts` contiguous ranges whose sizes differ by at most
// one. The split depends only on (n, parts).
inline Range chunk(std::size_t n, std::size_t parts, std::size_t index) {
  const std::size_t base = n / parts;
  const std::size_t extra = n % parts;
  const std::size_t begin = index * base + std::min(index, extra);
  return {begin, begin + base + (index < extra ? 1 : 0)};
}

// Runs fn(chunk_index, range) for `parts` static chunks of [0, n) on up to
// `workers` threads.
template <typename Fn>
void for_chunks(std::size_t n, std::size_t parts, unsigned workers, Fn&& fn) {
  if (parts == 0) return;
  const auto count = static_cast<std::int64_t>(parts);
#pragma omp parallel for num_threads(workers) schedule(static) if (workers > 1)
  for (std::int64_t c = 0; c < count; ++c) {
    fn(static_cast<std::size_t>(c), chunk(n, parts, static_cast<std::size_t>(c)));
  }
}

// Runs fn(i) for i in [0, n), statically partitioned.
template <typename Fn>
void for_each_index(std::size_t n, unsigned workers, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(workers) schedule(static) if (workers > 1)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

// Same as for_each_index but with dynamic scheduling, for skewed per-index
// work such as per-node neighborhood intersections.
template <typename Fn>
void for_each_index_dynamic(std::size_t n, unsigned workers, Fn&& fn) {
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for num_threads(workers) schedule(dynamic, 256) if (workers > 1)
  for (std::int64_t i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

// Comparison sort: each worker sorts one chunk, then chunks are merged
// pairwise in rounds. The output is the unique sorted permutation for a
// strict total order, so it does not depend on the worker count.
template <typename It, typename Compare = std::less<>>
void sort(It first, It last, unsigned workers, Compare comp = {}) {
  const auto n = static_cast<std::size_t>(std::distance(first, last));
  std::size_t parts = std::min<std::size_t>(workers, n / 4096 + 1);
  if (parts <= 1) {
    std::sort(first, last, comp);
    return;
  }
  std::vector<std::size_t> bounds(parts + 1);
  for (std::size_t p = 0; p < parts; ++p) bounds[p] = chunk(n, parts, p).begin;
  bounds[parts] = n;
  for_chunks(parts, parts, workers, [&](std::size_t p, Range) {
    std::sort(first + bounds[p], first + bounds[p + 1], comp);
  });
  while (bounds.size() > 2) {
    const std::size_t runs = bounds.size() - 1;
    const std::size_t pairs = runs / 2;
    for_chunks(pairs, pairs, workers, [&](std::size_t p, Range) {
      std::inplace_merge(first + bounds[2 * p], first + bounds[2 * p + 1],
                         first + bounds[2 * p + 2], comp);
    });
    std::vector<std::size_t> next;
    next.reserve(runs / 2 + 2);
    for (std::size_t i = 0; i < bounds.size(); i += 2) next.push_back(bounds[i]);
    if (next.back() != n) next.push_back(n);
    bounds = std::move(next);
  }
}

}  // namespace parallel
}  // namespace tablegraph

#endif  // TABLEGRAPH_PARALLEL_H_
