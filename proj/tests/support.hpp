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

#ifndef REGAMB_TESTS_SUPPORT_HPP_
#define REGAMB_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdio>
#include <string>
#include <unordered_set>
#include <vector>

#include "deriv.hpp"
#include "oracle.hpp"
#include "parse_tree.hpp"
#include "syntax.hpp"

namespace regamb::testing {

constexpr std::uint64_t kCorpusSeed = 42;

// Distinct non-problematic expressions of depth <= 4 over {x,y}.
inline std::vector<Regex> corpus(std::size_t n = 500) {
  RegexSet seen;
  std::uint64_t seed = kCorpusSeed;
  while (seen.size() < n) {
    for (const Regex& r : oracle::gen_corpus(4, "xy", 4 * n, seed++)) {
      if (!is_problematic(r)) seen.push_back(r);
      if (seen.size() == n) break;
    }
  }
  return seen.items();
}

inline std::vector<std::string> tree_strings(const TreeSeq& ts) {
  std::vector<std::string> out;
  for (const ParseTree& t : ts) out.push_back(to_string(t));
  return out;
}

inline std::vector<std::string> sorted_strings(const TreeSeq& ts) {
  std::vector<std::string> out = tree_strings(ts);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool same_set(const TreeSeq& a, const TreeSeq& b) {
  if (a.size() != b.size()) return false;
  for (const ParseTree& t : a) {
    if (!b.contains(t)) return false;
  }
  return true;
}

inline Regex re(const char* text) { return parse_regex(text); }
inline ParseTree tree(const char* text) { return parse_tree_text(text); }

}  // namespace regamb::testing

#endif  // REGAMB_TESTS_SUPPORT_HPP_
