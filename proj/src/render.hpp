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

#ifndef REGAMB_RENDER_HPP_
#define REGAMB_RENDER_HPP_

#include <string>

#include "ambiguity.hpp"
#include "fst.hpp"
#include "json.hpp"

namespace regamb {

std::string render_trees(const TreeSeq& trees);

std::string report_text(const AmbiguityReport& report);
nlohmann::ordered_json report_to_json(const AmbiguityReport& report);
AmbiguityReport report_from_json(const nlohmann::json& j);

struct DotOptions {
  bool show_sink = false;
  std::size_t label_limit = 80;
};

// POSIX-mode graphs of non-problematic expressions carry the A1-A3 marks.
std::string render_dot(const Transducer& t, const DotOptions& options = {});

}  // namespace regamb

#endif  // REGAMB_RENDER_HPP_
