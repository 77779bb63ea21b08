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

#ifndef REGAMB_ORACLE_HPP_
#define REGAMB_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "parse_tree.hpp"
#include "syntax.hpp"

// Brute-force reference semantics. Works by splitting the word and shares
// nothing with the derivative machinery.
namespace regamb::oracle {

// All parse trees of w. Throws Error(kProblematic) for problematic r.
TreeSeq enumerate(const Regex& r, std::string_view w);

// Seeded random expressions of depth at most max_depth.
std::vector<Regex> gen_corpus(std::size_t max_depth, const std::string& alphabet, std::size_t n,
                              std::uint64_t seed);

// Every word over the alphabet up to max_len, shortest first, then
// lexicographic.
std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len);

}  // namespace regamb::oracle

#endif  // REGAMB_ORACLE_HPP_
