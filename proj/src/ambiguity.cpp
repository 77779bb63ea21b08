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

#include "ambiguity.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "deriv.hpp"
#include "error.hpp"

namespace regamb {

namespace {

// Suffix search limits for counter-example completion.
constexpr std::size_t kSuffixBudget = 20000;
constexpr std::size_t kMaxSuffix = 24;

bool starts_with(const Regex& r, Symbol x) { return !deriv(r, x).empty_language(); }

std::string show_position(const std::string& path) { return path.empty() ? "root" : path; }

std::string join(const std::string& path, char step) {
  return path.empty() ? std::string(1, step) : path + "." + step;
}

// Concatenations t1.t2 with more than one empty tree for t1 that the
// injection of x can pass through in its right-hand case. Requires that r
// has a word starting with x.
void a2_sites(const Regex& r, Symbol x, const std::string& path,
              std::vector<std::string>& out) {
  switch (r.kind()) {
    case RegexKind::kCat: {
      const Regex& a = r.left();
      const Regex& b = r.right();
      if (!b.empty_language() && starts_with(a, x)) a2_sites(a, x, join(path, '0'), out);
      if (a.nullable() && starts_with(b, x)) {
        std::size_t n = count_all_eps(a);
        if (n > 1) {
          out.push_back("nullable left factor " + print_regex(a) + " with " + std::to_string(n) +
                        " empty parse trees in " + print_regex(r) + " at position " +
                        show_position(path));
        }
        a2_sites(b, x, join(path, '1'), out);
      }
      return;
    }
    case RegexKind::kAlt:
      if (starts_with(r.left(), x)) a2_sites(r.left(), x, join(path, '0'), out);
      if (starts_with(r.right(), x)) a2_sites(r.right(), x, join(path, '1'), out);
      return;
    case RegexKind::kStar:
      a2_sites(r.body(), x, join(path, '0'), out);
      return;
    default:
      return;
  }
}

std::vector<std::optional<Word>> shortest_words(const Transducer& t) {
  std::vector<std::optional<Word>> words(t.state_count());
  if (t.state(t.start()).empty_language()) return words;
  std::deque<StateId> queue{t.start()};
  words[t.start()] = Word();
  while (!queue.empty()) {
    StateId q = queue.front();
    queue.pop_front();
    for (char x : t.alphabet()) {
      const Transition* tr = t.transition(q, x);
      if (words[tr->target] || t.state(tr->target).empty_language()) continue;
      words[tr->target] = *words[q] + x;
      queue.push_back(tr->target);
    }
  }
  return words;
}

std::optional<Word> complete(const Transducer& t, StateId from, const Word& prefix) {
  struct Item {
    StateId state;
    Word suffix;
  };
  std::deque<Item> queue{{from, Word()}};
  std::size_t explored = 0;
  while (!queue.empty() && explored < kSuffixBudget) {
    Item item = std::move(queue.front());
    queue.pop_front();
    ++explored;
    if (t.is_final(item.state) && parse_all(t, prefix + item.suffix).size() >= 2) {
      return prefix + item.suffix;
    }
    if (item.suffix.size() >= kMaxSuffix) continue;
    for (char x : t.alphabet()) {
      const Transition* tr = t.transition(item.state, x);
      if (t.state(tr->target).empty_language()) continue;
      queue.push_back({tr->target, item.suffix + x});
    }
  }
  return std::nullopt;
}

}  // namespace

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::kA1:
      return "A1";
    case Criterion::kA2:
      return "A2";
    case Criterion::kA3:
      return "A3";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kUnambiguous:
      return "unambiguous";
    case Verdict::kAmbiguous:
      return "ambiguous";
    case Verdict::kRejectedProblematic:
      return "rejected-problematic";
  }
  return "?";
}

std::vector<StateId> realizable_states(const Transducer& t) {
  std::vector<std::optional<Word>> words = shortest_words(t);
  std::vector<StateId> out;
  for (StateId q = 0; q < words.size(); ++q) {
    if (words[q]) out.push_back(q);
  }
  return out;
}

std::vector<CriterionHit> detect(const Transducer& t) {
  if (t.mode() != Mode::kPosix) {
    throw Error(ErrorKind::kInvalidArgument, "ambiguity criteria need a POSIX-mode transducer");
  }
  if (auto s = problematic_subterm(t.source())) {
    throw Error(ErrorKind::kProblematic,
                "expression is problematic: " + print_regex(*s) + " has a nullable body");
  }
  std::vector<CriterionHit> hits;
  for (StateId q : realizable_states(t)) {
    const Regex& s = t.state(q);
    std::string label = print_regex(s);
    std::size_t n = count_all_eps(s);
    if (n > 1) {
      hits.push_back({Criterion::kA1, q, std::nullopt, std::nullopt, label,
                      std::to_string(n) + " empty parse trees"});
    }
    for (char x : t.alphabet()) {
      const Transition* tr = t.transition(q, x);
      if (t.state(tr->target).empty_language()) continue;
      std::vector<std::string> sites;
      a2_sites(s, x, "", sites);
      for (const std::string& site : sites) {
        hits.push_back({Criterion::kA2, q, x, tr->target, label, site});
      }
      std::unordered_set<Regex, RegexHash> merged_terms;
      for (const Regex& merged : tr->live_idemp) {
        if (!merged_terms.insert(merged).second) continue;
        hits.push_back({Criterion::kA3, q, x, tr->target, label,
                        "Idemp merged duplicate alternative " + print_regex(merged)});
      }
    }
  }
  return hits;
}

std::vector<CounterExample> counter_examples(const Transducer& t,
                                             const std::vector<CriterionHit>& hits,
                                             std::size_t max_states) {
  if (hits.empty()) return {};
  Transducer greedy = build(t.source(), Mode::kGreedy, max_states);
  std::vector<std::optional<Word>> words = shortest_words(t);
  std::vector<CounterExample> out;
  for (const CriterionHit& hit : hits) {
    if (hit.state >= words.size() || !words[hit.state]) continue;
    Word prefix = *words[hit.state];
    StateId from = hit.state;
    if (hit.kind != Criterion::kA1) {
      if (!hit.symbol || !hit.target) continue;
      prefix += *hit.symbol;
      from = *hit.target;
    }
    std::optional<Word> word = complete(t, from, prefix);
    if (!word) continue;
    CounterExample ce;
    ce.word = *word;
    ce.prefix = prefix;
    ce.trees = parse_all(t, ce.word);
    if (ce.trees.size() < 2) continue;
    ce.posix = *parse_first(t, ce.word);
    ce.greedy = *parse_first(greedy, ce.word);
    ce.criterion = hit;
    out.push_back(std::move(ce));
  }
  std::stable_sort(out.begin(), out.end(), [](const CounterExample& a, const CounterExample& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  std::vector<CounterExample> unique;
  for (CounterExample& ce : out) {
    if (unique.empty() || unique.back().word != ce.word) unique.push_back(std::move(ce));
  }
  return unique;
}

AmbiguityReport diff_policies(const Regex& r, std::size_t max_states) {
  AmbiguityReport report;
  report.regex = print_regex(r);
  if (auto s = problematic_subterm(r)) {
    report.verdict = Verdict::kRejectedProblematic;
    report.problematic_subterm = print_regex(*s);
    return report;
  }
  Transducer posix = build(r, Mode::kPosix, max_states);
  report.hits = detect(posix);
  report.verdict = report.hits.empty() ? Verdict::kUnambiguous : Verdict::kAmbiguous;
  report.counter_examples = counter_examples(posix, report.hits, max_states);
  for (const CounterExample& ce : report.counter_examples) {
    if (ce.policies_differ()) report.posix_greedy_diff.push_back({ce.word, ce.posix, ce.greedy});
  }
  return report;
}

}  // namespace regamb
