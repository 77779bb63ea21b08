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

#ifndef REGAMB_ENGINE_HPP_
#define REGAMB_ENGINE_HPP_

#include <string_view>

#include "parse_tree.hpp"
#include "syntax.hpp"

namespace regamb {

// Maps a tree of deriv(r, x) to the trees of r for the word x . flatten(v).
// Throws Error(kShape) if v does not fit deriv(r, x).
TreeSeq inject(const Regex& r, Symbol x, const ParseTree& v);
void inject_into(const Regex& r, Symbol x, const ParseTree& v, TreeSeq& out);
// Head of inject(r, x, v).
ParseTree inject_first(const Regex& r, Symbol x, const ParseTree& v);

TreeSeq all_parse(const Regex& r, std::string_view w);

}  // namespace regamb

#endif  // REGAMB_ENGINE_HPP_
