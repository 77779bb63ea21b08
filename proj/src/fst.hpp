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

#ifndef REGAMB_FST_HPP_
#define REGAMB_FST_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parse_tree.hpp"
#include "simplify.hpp"
#include "syntax.hpp"

namespace regamb {

enum class Mode : std::uint8_t { kPosix, kGreedy };

using StateId = std::size_t;
inline constexpr std::size_t kDefaultMaxStates = 10000;

struct Transition {
  StateId target = 0;
  // Trees of the target state back to trees of the source state.
  Transformer output;
  bool used_idemp = false;
  std::vector<Regex> live_idemp;
};

class Transducer {
 public:
  const Regex& source() const noexcept { return states_.front(); }
  Mode mode() const noexcept { return mode_; }
  StateId start() const noexcept { return 0; }
  std::size_t state_count() const noexcept { return states_.size(); }
  const Regex& state(StateId q) const { return states_.at(q); }
  bool is_final(StateId q) const { return states_.at(q).nullable(); }
  std::vector<StateId> finals() const;
  // Sorted symbols of the source expression.
  const std::string& alphabet() const noexcept { return alphabet_; }
  // nullptr when x does not occur in the source expression.
  const Transition* transition(StateId q, Symbol x) const;

 private:
  friend Transducer build(const Regex& r, Mode mode, std::size_t max_states);
  Mode mode_ = Mode::kPosix;
  std::string alphabet_;
  std::vector<Regex> states_;
  std::vector<std::vector<Transition>> delta_;
};

// States are the start expression r and the normalized derivatives reachable
// from it, numbered in breadth-first discovery order.
Transducer build(const Regex& r, Mode mode, std::size_t max_states = kDefaultMaxStates);

struct RunResult {
  // nullopt once a symbol outside the transducer alphabet was read.
  std::optional<StateId> state;
  Transformer output;
};

RunResult run(const Transducer& t, std::string_view w);
TreeSeq parse_all(const Transducer& t, std::string_view w);
std::optional<ParseTree> parse_first(const Transducer& t, std::string_view w);

}  // namespace regamb

#endif  // REGAMB_FST_HPP_
