// Copyright 2026 The regamb Authors.
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

#ifndef REGAMB_UTIL_HPP_
#define REGAMB_UTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <unordered_set>
#include <vector>

namespace regamb {

inline std::size_t mix_hash(std::size_t seed, std::size_t value) noexcept {
  std::uint64_t z = static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL +
                    static_cast<std::uint64_t>(value);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return static_cast<std::size_t>(z ^ (z >> 31));
}

// An insertion-ordered sequence without structural duplicates. The first
// occurrence of a value wins.
template <typename T, typename Hash>
class UniqueSeq {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  UniqueSeq() = default;
  UniqueSeq(std::initializer_list<T> items) {
    for (const T& t : items) push_back(t);
  }

  // Returns false when an equal element is already present.
  bool push_back(const T& t) {
    if (!seen_.insert(t).second) return false;
    items_.push_back(t);
    return true;
  }

  bool contains(const T& t) const { return seen_.count(t) != 0; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const T& operator[](std::size_t i) const { return items_[i]; }
  const T& front() const { return items_.front(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const std::vector<T>& items() const noexcept { return items_; }

  friend bool operator==(const UniqueSeq& a, const UniqueSeq& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<T> items_;
  std::unordered_set<T, Hash> seen_;
};

}  // namespace regamb

#endif  // REGAMB_UTIL_HPP_
