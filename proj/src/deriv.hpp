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

#ifndef REGAMB_DERIV_HPP_
#define REGAMB_DERIV_HPP_

#include <string_view>

#include "syntax.hpp"
#include "util.hpp"

namespace regamb {

using RegexSet = UniqueSeq<Regex, RegexHash>;

// Raw derivative, no simplification.
Regex deriv(const Regex& r, Symbol x);
Regex deriv_word(const Regex& r, std::string_view w);
bool matches(const Regex& r, std::string_view w);

// Antimirov partial derivatives, in order, first occurrence kept.
RegexSet pderiv(const Regex& r, Symbol x);
// Right-nested alternation; # for the empty set.
Regex sum_of(const RegexSet& ms);

}  // namespace regamb

#endif  // REGAMB_DERIV_HPP_
