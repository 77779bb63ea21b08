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

#include "deriv.hpp"

namespace regamb {

Regex deriv(const Regex& r, Symbol x) {
  switch (r.kind()) {
    case RegexKind::kPhi:
    case RegexKind::kEps:
      return Regex::phi();
    case RegexKind::kSym:
      return r.symbol() == x ? Regex::eps() : Regex::phi();
    case RegexKind::kStar:
      return Regex::cat(deriv(r.body(), x), r);
    case RegexKind::kCat: {
      Regex left = Regex::cat(deriv(r.left(), x), r.right());
      if (!r.left().nullable()) return left;
      return Regex::alt(left, deriv(r.right(), x));
    }
    case RegexKind::kAlt:
      return Regex::alt(deriv(r.left(), x), deriv(r.right(), x));
  }
  return Regex::phi();
}

Regex deriv_word(const Regex& r, std::string_view w) {
  check_word(w);
  Regex d = r;
  for (char x : w) d = deriv(d, x);
  return d;
}

bool matches(const Regex& r, std::string_view w) { return deriv_word(r, w).nullable(); }

namespace {

void pderiv_into(const Regex& r, Symbol x, RegexSet& out) {
  switch (r.kind()) {
    case RegexKind::kPhi:
    case RegexKind::kEps:
      return;
    case RegexKind::kSym:
      if (r.symbol() == x) out.push_back(Regex::eps());
      return;
    case RegexKind::kStar:
      for (const Regex& d : pderiv(r.body(), x)) out.push_back(Regex::cat(d, r));
      return;
    case RegexKind::kCat:
      for (const Regex& d : pderiv(r.left(), x)) out.push_back(Regex::cat(d, r.right()));
      if (r.left().nullable()) pderiv_into(r.right(), x, out);
      return;
    case RegexKind::kAlt:
      pderiv_into(r.left(), x, out);
      pderiv_into(r.right(), x, out);
      return;
  }
}

}  // namespace

RegexSet pderiv(const Regex& r, Symbol x) {
  RegexSet out;
  pderiv_into(r, x, out);
  return out;
}

Regex sum_of(const RegexSet& ms) {
  if (ms.empty()) return Regex::phi();
  Regex r = ms[ms.size() - 1];
  for (std::size_t i = ms.size() - 1; i-- > 0;) r = Regex::alt(ms[i], r);
  return r;
}

}  // namespace regamb
