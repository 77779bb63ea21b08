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

#include "regamb/regamb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "ambiguity.hpp"
#include "engine.hpp"
#include "error.hpp"
#include "fst.hpp"
#include "oracle.hpp"
#include "render.hpp"

struct regamb_regex {
  regamb::Regex value;
};

struct regamb_fst {
  regamb::Transducer value;
};

struct regamb_report {
  regamb::AmbiguityReport value;
};

struct regamb_strings {
  std::vector<std::string> items;
};

namespace {

thread_local std::string last_error;

regamb_status status_of(regamb::ErrorKind k) {
  switch (k) {
    case regamb::ErrorKind::kSyntax:
      return REGAMB_ERR_SYNTAX;
    case regamb::ErrorKind::kSymbol:
      return REGAMB_ERR_SYMBOL;
    case regamb::ErrorKind::kProblematic:
      return REGAMB_ERR_PROBLEMATIC;
    case regamb::ErrorKind::kStateLimit:
      return REGAMB_ERR_STATE_LIMIT;
    case regamb::ErrorKind::kWordTooLong:
      return REGAMB_ERR_WORD_TOO_LONG;
    case regamb::ErrorKind::kInvalidArgument:
      return REGAMB_ERR_INVALID_ARGUMENT;
    default:
      return REGAMB_ERR_INTERNAL;
  }
}

template <typename F>
regamb_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return REGAMB_OK;
  } catch (const regamb::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return REGAMB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return REGAMB_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw regamb::Error(regamb::ErrorKind::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

regamb_strings* tree_strings(const regamb::TreeSeq& trees) {
  auto* out = new regamb_strings;
  for (const regamb::ParseTree& t : trees) out->items.push_back(regamb::to_string(t));
  return out;
}

}  // namespace

extern "C" {

const char* regamb_last_error(void) { return last_error.c_str(); }

const char* regamb_status_name(regamb_status status) {
  switch (status) {
    case REGAMB_OK:
      return "ok";
    case REGAMB_ERR_SYNTAX:
      return "syntax error";
    case REGAMB_ERR_SYMBOL:
      return "symbol outside alphabet";
    case REGAMB_ERR_PROBLEMATIC:
      return "rejected-problematic";
    case REGAMB_ERR_STATE_LIMIT:
      return "state limit exceeded";
    case REGAMB_ERR_WORD_TOO_LONG:
      return "word too long";
    case REGAMB_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case REGAMB_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void regamb_string_free(char* s) { std::free(s); }

regamb_status regamb_regex_parse(const char* text, regamb_regex** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new regamb_regex{regamb::parse_regex(text)};
  });
}

void regamb_regex_free(regamb_regex* r) { delete r; }

regamb_status regamb_regex_print(const regamb_regex* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = dup_string(regamb::print_regex(r->value));
  });
}

regamb_status regamb_regex_problematic_subterm(const regamb_regex* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = nullptr;
    if (auto s = regamb::problematic_subterm(r->value)) *out = dup_string(regamb::print_regex(*s));
  });
}

regamb_status regamb_all_parse(const regamb_regex* r, const char* word, regamb_strings** out) {
  return guarded([&] {
    require(r && word && out, "null argument");
    *out = tree_strings(regamb::all_parse(r->value, word));
  });
}

regamb_status regamb_oracle_enumerate(const regamb_regex* r, const char* word,
                                      size_t max_word_length, regamb_strings** out) {
  return guarded([&] {
    require(r && word && out, "null argument");
    if (std::strlen(word) > max_word_length) {
      throw regamb::Error(regamb::ErrorKind::kWordTooLong,
                          "oracle words are limited to " + std::to_string(max_word_length) +
                              " symbols");
    }
    *out = tree_strings(regamb::oracle::enumerate(r->value, word));
  });
}

regamb_status regamb_fst_build(const regamb_regex* r, regamb_policy policy, size_t max_states,
                               regamb_fst** out) {
  return guarded([&] {
    require(r && out, "null argument");
    require(policy == REGAMB_POSIX || policy == REGAMB_GREEDY, "unknown policy");
    *out = nullptr;
    regamb::Mode mode = policy == REGAMB_POSIX ? regamb::Mode::kPosix : regamb::Mode::kGreedy;
    *out = new regamb_fst{
        regamb::build(r->value, mode, max_states ? max_states : regamb::kDefaultMaxStates)};
  });
}

void regamb_fst_free(regamb_fst* t) { delete t; }

size_t regamb_fst_state_count(const regamb_fst* t) { return t ? t->value.state_count() : 0; }

regamb_status regamb_fst_parse_all(const regamb_fst* t, const char* word, regamb_strings** out) {
  return guarded([&] {
    require(t && word && out, "null argument");
    *out = tree_strings(regamb::parse_all(t->value, word));
  });
}

regamb_status regamb_fst_parse_first(const regamb_fst* t, const char* word, char** out) {
  return guarded([&] {
    require(t && word && out, "null argument");
    *out = nullptr;
    if (auto v = regamb::parse_first(t->value, word)) *out = dup_string(regamb::to_string(*v));
  });
}

regamb_status regamb_fst_dot(const regamb_fst* t, int show_sink, char** out) {
  return guarded([&] {
    require(t && out, "null argument");
    regamb::DotOptions options;
    options.show_sink = show_sink != 0;
    *out = dup_string(regamb::render_dot(t->value, options));
  });
}

regamb_status regamb_analyze(const regamb_regex* r, size_t max_states, regamb_report** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = nullptr;
    *out = new regamb_report{
        regamb::diff_policies(r->value, max_states ? max_states : regamb::kDefaultMaxStates)};
  });
}

void regamb_report_free(regamb_report* report) { delete report; }

regamb_verdict regamb_report_verdict(const regamb_report* report) {
  switch (report->value.verdict) {
    case regamb::Verdict::kAmbiguous:
      return REGAMB_AMBIGUOUS;
    case regamb::Verdict::kRejectedProblematic:
      return REGAMB_REJECTED_PROBLEMATIC;
    default:
      return REGAMB_UNAMBIGUOUS;
  }
}

regamb_status regamb_report_render(const regamb_report* report, regamb_format format,
                                   char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    if (format == REGAMB_JSON) {
      *out = dup_string(regamb::report_to_json(report->value).dump(2) + "\n");
    } else {
      *out = dup_string(regamb::report_text(report->value));
    }
  });
}

size_t regamb_strings_count(const regamb_strings* s) { return s ? s->items.size() : 0; }

const char* regamb_strings_at(const regamb_strings* s, size_t i) {
  if (!s || i >= s->items.size()) return nullptr;
  return s->items[i].c_str();
}

void regamb_strings_free(regamb_strings* s) { delete s; }

}  // extern "C"
