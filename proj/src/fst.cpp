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

#include "fst.hpp"

#include <unordered_map>

#include "deriv.hpp"
#include "error.hpp"

namespace regamb {

std::vector<StateId> Transducer::finals() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < states_.size(); ++q) {
    if (is_final(q)) out.push_back(q);
  }
  return out;
}

const Transition* Transducer::transition(StateId q, Symbol x) const {
  std::size_t i = alphabet_.find(x);
  if (i == std::string::npos) return nullptr;
  return &delta_.at(q)[i];
}

Transducer build(const Regex& r, Mode mode, std::size_t max_states) {
  if (max_states == 0) throw Error(ErrorKind::kInvalidArgument, "state limit must be positive");
  Transducer t;
  t.mode_ = mode;
  t.alphabet_ = symbols_of(r);
  t.states_.push_back(r);
  std::unordered_map<Regex, StateId, RegexHash> index{{r, 0}};
  for (StateId q = 0; q < t.states_.size(); ++q) {
    std::vector<Transition> row;
    row.reserve(t.alphabet_.size());
    for (char x : t.alphabet_) {
      const Regex s = t.states_[q];
      RewriteResult rr = mode == Mode::kPosix ? posix_normalize(deriv(s, x))
                                              : pd_normalize(deriv(s, x));
      auto [it, fresh] = index.emplace(rr.target, t.states_.size());
      if (fresh) {
        if (t.states_.size() >= max_states) {
          throw Error(ErrorKind::kStateLimit,
                      "transducer exceeds " + std::to_string(max_states) + " states");
        }
        t.states_.push_back(rr.target);
      }
      Transition tr;
      tr.target = it->second;
      tr.output = Transformer::chain({Transformer::inject(s, x), rr.back});
      tr.used_idemp = rr.used_idemp;
      tr.live_idemp = std::move(rr.live_idemp);
      row.push_back(std::move(tr));
    }
    t.delta_.push_back(std::move(row));
  }
  return t;
}

namespace {

// Transitions taken on w; nullopt once w leaves the transducer alphabet.
std::optional<StateId> walk(const Transducer& t, std::string_view w,
                            std::vector<const Transition*>& path) {
  check_word(w);
  path.reserve(w.size());
  StateId q = t.start();
  for (char x : w) {
    const Transition* tr = t.transition(q, x);
    if (!tr) return std::nullopt;
    path.push_back(tr);
    q = tr->target;
  }
  return q;
}

}  // namespace

RunResult run(const Transducer& t, std::string_view w) {
  std::vector<const Transition*> path;
  RunResult res;
  res.state = walk(t, w, path);
  if (!res.state) return res;
  std::vector<Transformer> steps;
  steps.reserve(path.size());
  for (const Transition* tr : path) steps.push_back(tr->output);
  res.output = Transformer::chain(steps);
  return res;
}

TreeSeq parse_all(const Transducer& t, std::string_view w) {
  RunResult res = run(t, w);
  if (!res.state || !t.is_final(*res.state)) return {};
  return res.output.apply(all_eps(t.state(*res.state)));
}

std::optional<ParseTree> parse_first(const Transducer& t, std::string_view w) {
  std::vector<const Transition*> path;
  std::optional<StateId> q = walk(t, w, path);
  if (!q || !t.is_final(*q)) return std::nullopt;
  ParseTree v = first_eps(t.state(*q));
  for (std::size_t i = path.size(); i-- > 0;) v = path[i]->output.apply_first(v);
  return v;
}

}  // namespace regamb
