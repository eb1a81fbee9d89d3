// Copyright 2026 The ramsey-forge Authors
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

#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace rforge {

/// Fixed-capacity set of vertex ids backed by 64-bit words. Word count is
/// fixed at construction; all binary operations require equal capacity.
class vertex_set {
 public:
  vertex_set() = default;
  explicit vertex_set(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  int capacity() const { return capacity_; }

  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  void set_all() {
    for (int v = 0; v < capacity_; ++v) set(v);
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  vertex_set& operator&=(const vertex_set& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  vertex_set& operator|=(const vertex_set& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every element of o from this set.
  vertex_set& subtract(const vertex_set& o) {
    assert(capacity_ == o.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  bool operator==(const vertex_set& o) const { return words_ == o.words_; }

  bool intersects(const vertex_set& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Smallest element, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
  }

  /// Smallest element greater than v, or -1.
  int next(int v) const {
    int i = (v + 1) >> 6;
    if (i >= static_cast<int>(words_.size())) return -1;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i >= static_cast<int>(words_.size())) return -1;
      w = words_[i];
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

 private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rforge
