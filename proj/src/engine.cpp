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

#include "engine.hpp"

#include <vector>

#include "deriv.hpp"
#include "error.hpp"

namespace regamb {

namespace {

[[noreturn]] void bad_shape(const Regex& r, Symbol x, const ParseTree& v) {
  throw Error(ErrorKind::kShape, "cannot inject '" + std::string(1, x) + "' into " +
                                     to_string(v) + " for " + print_regex(r));
}

}  // namespace

void inject_into(const Regex& r, Symbol x, const ParseTree& v, TreeSeq& out) {
  switch (r.kind()) {
    case RegexKind::kPhi:
    case RegexKind::kEps:
      bad_shape(r, x, v);
    case RegexKind::kSym:
      if (r.symbol() != x || !v.is(TreeKind::kUnit)) bad_shape(r, x, v);
      out.push_back(ParseTree::lit(x));
      return;
    case RegexKind::kStar:
      if (!v.is(TreeKind::kPair) || !v.second().is(TreeKind::kSeq)) bad_shape(r, x, v);
      for (const ParseTree& h : inject(r.body(), x, v.first())) {
        out.push_back(ParseTree::cons(h, v.second()));
      }
      return;
    case RegexKind::kCat: {
      const ParseTree* pair = &v;
      if (r.left().nullable()) {
        if (v.is(TreeKind::kInR)) {
          TreeSeq rights = inject(r.right(), x, v.inner());
          for (const ParseTree& e : all_eps(r.left())) {
            for (const ParseTree& t : rights) out.push_back(ParseTree::pair(e, t));
          }
          return;
        }
        if (!v.is(TreeKind::kInL)) bad_shape(r, x, v);
        pair = &v.inner();
      }
      if (!pair->is(TreeKind::kPair)) bad_shape(r, x, v);
      for (const ParseTree& h : inject(r.left(), x, pair->first())) {
        out.push_back(ParseTree::pair(h, pair->second()));
      }
      return;
    }
    case RegexKind::kAlt:
      if (v.is(TreeKind::kInL)) {
        for (const ParseTree& t : inject(r.left(), x, v.inner())) out.push_back(ParseTree::inl(t));
      } else if (v.is(TreeKind::kInR)) {
        for (const ParseTree& t : inject(r.right(), x, v.inner())) out.push_back(ParseTree::inr(t));
      } else {
        bad_shape(r, x, v);
      }
      return;
  }
}

TreeSeq inject(const Regex& r, Symbol x, const ParseTree& v) {
  TreeSeq out;
  inject_into(r, x, v, out);
  return out;
}

ParseTree inject_first(const Regex& r, Symbol x, const ParseTree& v) {
  switch (r.kind()) {
    case RegexKind::kSym:
      if (r.symbol() != x || !v.is(TreeKind::kUnit)) bad_shape(r, x, v);
      return ParseTree::lit(x);
    case RegexKind::kStar:
      if (!v.is(TreeKind::kPair) || !v.second().is(TreeKind::kSeq)) bad_shape(r, x, v);
      return ParseTree::cons(inject_first(r.body(), x, v.first()), v.second());
    case RegexKind::kCat: {
      const ParseTree* pair = &v;
      if (r.left().nullable()) {
        if (v.is(TreeKind::kInR)) {
          return ParseTree::pair(first_eps(r.left()), inject_first(r.right(), x, v.inner()));
        }
        if (!v.is(TreeKind::kInL)) bad_shape(r, x, v);
        pair = &v.inner();
      }
      if (!pair->is(TreeKind::kPair)) bad_shape(r, x, v);
      return ParseTree::pair(inject_first(r.left(), x, pair->first()), pair->second());
    }
    case RegexKind::kAlt:
      if (v.is(TreeKind::kInL)) return ParseTree::inl(inject_first(r.left(), x, v.inner()));
      if (v.is(TreeKind::kInR)) return ParseTree::inr(inject_first(r.right(), x, v.inner()));
      break;
    default:
      break;
  }
  bad_shape(r, x, v);
}

TreeSeq all_parse(const Regex& r, std::string_view w) {
  check_word(w);
  std::vector<Regex> chain{r};
  chain.reserve(w.size() + 1);
  for (char x : w) chain.push_back(deriv(chain.back(), x));
  TreeSeq trees = all_eps(chain.back());
  for (std::size_t i = w.size(); i-- > 0;) {
    TreeSeq next;
    for (const ParseTree& t : trees) inject_into(chain[i], w[i], t, next);
    trees = std::move(next);
  }
  return trees;
}

}  // namespace regamb
