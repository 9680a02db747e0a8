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

#ifndef TABLEGRAPH_CONCURRENT_SLOT_MAP_H_
#define TABLEGRAPH_CONCURRENT_SLOT_MAP_H_

#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>

#include "tablegraph/error.h"

namespace tablegraph {

// splitmix64 finalizer. Every input bit affects every output bit, so masking
// the low bits gives a usable home slot for any power-of-two capacity.
struct MixHash {
  std::uint64_t operator()(std::int64_t key) const noexcept {
    auto x = static_cast<std::uint64_t>(key);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
  }
};

// Home slot = key mod capacity. Only useful for tracing probe sequences in
// tests.
struct IdentityHash {
  std::uint64_t operator()(std::int64_t key) const noexcept {
    return static_cast<std::uint64_t>(key);
  }
};

/// Open-addressing, linear-probing map from 64-bit keys to slot indices.
///
/// The slot index is the payload handle: callers keep parallel arrays of
/// `slot_count()` entries and address them with the returned index. Insertion
/// is lock-free and may run concurrently from any number of threads; a key is
/// claimed by a compare-and-swap on the slot's key word, and a loser that
/// observes its own key in the slot simply returns that slot. Lookups must be
/// separated from insert phases by a barrier.
///
/// Occupancy never exceeds capacity/2. There is no deletion and no resize.
template <typename Hash = MixHash>
class ConcurrentSlotMap {
 public:
  using Key = std::int64_t;
  using SlotIndex = std::size_t;

  // INT64_MIN marks empty slots; that key itself lives in a dedicated extra
  // slot at index capacity().
  static constexpr Key kEmpty = std::numeric_limits<Key>::min();

  explicit ConcurrentSlotMap(std::size_t capacity)
      : capacity_(capacity), mask_(capacity - 1) {
    if (capacity < 2 || !std::has_single_bit(capacity)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "slot map capacity must be a power of two >= 2, got " +
                      std::to_string(capacity));
    }
    slots_ = std::make_unique<std::atomic<Key>[]>(capacity_);
    for (std::size_t i = 0; i < capacity_; ++i) {
      slots_[i].store(kEmpty, std::memory_order_relaxed);
    }
  }

  // Smallest power-of-two capacity that holds `keys` distinct keys.
  static std::size_t capacity_for(std::size_t keys) {
    return std::bit_ceil(std::max<std::size_t>(2, 2 * keys));
  }

  ConcurrentSlotMap(const ConcurrentSlotMap&) = delete;
  ConcurrentSlotMap& operator=(const ConcurrentSlotMap&) = delete;

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t slot_count() const noexcept { return capacity_ + 1; }
  std::size_t max_occupancy() const noexcept { return capacity_ / 2; }
  std::size_t size() const noexcept {
    return occupancy_.load(std::memory_order_acquire);
  }

  // Returns the slot holding `key`, claiming a new one if needed. Throws
  // kCapacityExhausted if a new key would push occupancy past capacity/2.
  SlotIndex insert(Key key) {
    if (key == kEmpty) return insert_sentinel();
    std::size_t pos = hash_(key) & mask_;
    for (std::size_t probes = 0; probes < capacity_; ++probes) {
      Key seen = slots_[pos].load(std::memory_order_acquire);
      if (seen == key) return pos;
      if (seen == kEmpty) {
        if (!reserve()) {
          // Another thread may have just claimed this key for us.
          if (auto found = probe_from(key, pos)) return *found;
          throw exhausted();
        }
        Key expected = kEmpty;
        if (slots_[pos].compare_exchange_strong(expected, key,
                                                std::memory_order_acq_rel,
                                                std::memory_order_acquire)) {
          return pos;
        }
        occupancy_.fetch_sub(1, std::memory_order_acq_rel);
        if (expected == key) return pos;
      }
      pos = (pos + 1) & mask_;
    }
    throw exhausted();
  }

  std::optional<SlotIndex> lookup(Key key) const {
    if (key == kEmpty) {
      if (sentinel_present_.load(std::memory_order_acquire)) return capacity_;
      return std::nullopt;
    }
    return probe_from(key, hash_(key) & mask_);
  }

  // Key stored at `slot`, or nullopt for an empty slot.
  std::optional<Key> key_at(SlotIndex slot) const {
    if (slot == capacity_) {
      if (sentinel_present_.load(std::memory_order_acquire)) return kEmpty;
      return std::nullopt;
    }
    Key k = slots_[slot].load(std::memory_order_acquire);
    if (k == kEmpty) return std::nullopt;
    return k;
  }

 private:
  std::optional<SlotIndex> probe_from(Key key, std::size_t pos) const {
    for (std::size_t probes = 0; probes < capacity_; ++probes) {
      Key seen = slots_[pos].load(std::memory_order_acquire);
      if (seen == key) return pos;
      if (seen == kEmpty) return std::nullopt;
      pos = (pos + 1) & mask_;
    }
    return std::nullopt;
  }

  bool reserve() {
    std::size_t cur = occupancy_.load(std::memory_order_relaxed);
    do {
      if (cur >= max_occupancy()) return false;
    } while (!occupancy_.compare_exchange_weak(cur, cur + 1,
                                               std::memory_order_acq_rel,
                                               std::memory_order_relaxed));
    return true;
  }

  SlotIndex insert_sentinel() {
    if (sentinel_present_.load(std::memory_order_acquire)) return capacity_;
    if (!reserve()) {
      if (sentinel_present_.load(std::memory_order_acquire)) return capacity_;
      throw exhausted();
    }
    if (sentinel_present_.exchange(true, std::memory_order_acq_rel)) {
      occupancy_.fetch_sub(1, std::memory_order_acq_rel);
    }
    return capacity_;
  }

  Error exhausted() const {
    return Error(ErrorCode::kCapacityExhausted,
                 "slot map full: occupancy limit " +
                     std::to_string(max_occupancy()) + " of capacity " +
                     std::to_string(capacity_));
  }

  std::size_t capacity_;
  std::size_t mask_;
  std::unique_ptr<std::atomic<Key>[]> slots_;
  std::atomic<bool> sentinel_present_{false};
  std::atomic<std::size_t> occupancy_{0};
  [[no_unique_address]] Hash hash_;
};

}  // namespace tablegraph

#endif  // TABLEGRAPH_CONCURRENT_SLOT_MAP_H_
