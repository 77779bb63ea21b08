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

#ifndef REGAMB_AMBIGUITY_HPP_
#define REGAMB_AMBIGUITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fst.hpp"
#include "parse_tree.hpp"
#include "syntax.hpp"

namespace regamb {

enum class Criterion : std::uint8_t { kA1, kA2, kA3 };

const char* criterion_name(Criterion c);

struct CriterionHit {
  Criterion kind = Criterion::kA1;
  StateId state = 0;
  std::optional<Symbol> symbol;   // A2 and A3
  std::optional<StateId> target;  // A2 and A3
  std::string state_label;
  std::string detail;

  friend bool operator==(const CriterionHit&, const CriterionHit&) = default;
};

struct CounterExample {
  Word word;
  Word prefix;
  TreeSeq trees;
  ParseTree posix;
  ParseTree greedy;
  CriterionHit criterion;

  bool policies_differ() const { return posix != greedy; }
};

struct PolicyDiff {
  Word word;
  ParseTree posix;
  ParseTree greedy;
};

enum class Verdict : std::uint8_t { kUnambiguous, kAmbiguous, kRejectedProblematic };

const char* verdict_name(Verdict v);

struct AmbiguityReport {
  std::string regex;
  Verdict verdict = Verdict::kUnambiguous;
  std::optional<std::string> problematic_subterm;
  std::vector<CriterionHit> hits;
  std::vector<CounterExample> counter_examples;
  std::vector<PolicyDiff> posix_greedy_diff;
};

// States reachable from the start through states with a non-empty language.
std::vector<StateId> realizable_states(const Transducer& t);

// Throws Error(kProblematic) for a problematic source expression and
// Error(kInvalidArgument) for a Greedy transducer.
std::vector<CriterionHit> detect(const Transducer& t);

std::vector<CounterExample> counter_examples(const Transducer& t,
                                             const std::vector<CriterionHit>& hits,
                                             std::size_t max_states = kDefaultMaxStates);

AmbiguityReport diff_policies(const Regex& r, std::size_t max_states = kDefaultMaxStates);

}  // namespace regamb

#endif  // REGAMB_AMBIGUITY_HPP_
