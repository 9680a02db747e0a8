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

#ifndef TABLEGRAPH_CLAIM_VECTOR_H_
#define TABLEGRAPH_CLAIM_VECTOR_H_

#include <atomic>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tablegraph/error.h"

namespace tablegraph {

/// Fixed-capacity vector filled by concurrent writers. Each writer claims a
/// distinct cell by advancing a shared cursor with one indivisible
/// read-modify-write, then writes the cell it owns. The cursor never passes
/// capacity. Reads are only valid after the fill phase has ended.
template <typename T>
class ClaimVector {
 public:
  explicit ClaimVector(std::size_t capacity = 0)
      : cells_(capacity), capacity_(capacity) {}

  ClaimVector(ClaimVector&& other) noexcept
      : cells_(std::move(other.cells_)),
        capacity_(other.capacity_),
        cursor_(other.cursor_.load(std::memory_order_relaxed)) {
    other.capacity_ = 0;
    other.cursor_.store(0, std::memory_order_relaxed);
  }
  ClaimVector& operator=(ClaimVector&& other) noexcept {
    cells_ = std::move(other.cells_);
    capacity_ = other.capacity_;
    cursor_.store(other.cursor_.load(std::memory_order_relaxed),
                  std::memory_order_relaxed);
    other.capacity_ = 0;
    other.cursor_.store(0, std::memory_order_relaxed);
    return *this;
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept {
    return cursor_.load(std::memory_order_acquire);
  }
  bool full() const noexcept { return size() == capacity_; }

  std::size_t claim_append(const T& value) {
    std::size_t index = cursor_.load(std::memory_order_relaxed);
    do {
      if (index == capacity_) {
        throw Error(ErrorCode::kCapacityExhausted,
                    "claim vector full at capacity " +
                        std::to_string(capacity_));
      }
    } while (!cursor_.compare_exchange_weak(index, index + 1,
                                            std::memory_order_acq_rel,
                                            std::memory_order_relaxed));
    cells_[index] = value;
    return index;
  }

  std::span<T> claimed() noexcept { return {cells_.data(), size()}; }
  std::span<const T> claimed() const noexcept {
    return {cells_.data(), size()};
  }

  // Moves the claimed prefix out as an ordinary vector and empties this one.
  std::vector<T> release() {
    std::vector<T> out = std::move(cells_);
    out.resize(size());
    cells_ = {};
    capacity_ = 0;
    cursor_.store(0, std::memory_order_relaxed);
    return out;
  }

 private:
  std::vector<T> cells_;
  std::size_t capacity_;
  std::atomic<std::size_t> cursor_{0};
};

}  // namespace tablegraph

#endif  // TABLEGRAPH_CLAIM_VECTOR_H_
