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


#include <string>
#include <vector>

#include "doctest.h"
#include "regamb/regamb.h"

namespace {

regamb_regex* parse(const char* text) {
  regamb_regex* r = nullptr;
  REQUIRE(regamb_regex_parse(text, &r) == REGAMB_OK);
  REQUIRE(r != nullptr);
  return r;
}

std::vector<std::string> take(regamb_strings* s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < regamb_strings_count(s); ++i) out.push_back(regamb_strings_at(s, i));
  regamb_strings_free(s);
  return out;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  regamb_string_free(s);
  return out;
}

TEST_CASE("parse and print") {
  regamb_regex* r = parse(" (x | y)* ");
  char* text = nullptr;
  CHECK(regamb_regex_print(r, &text) == REGAMB_OK);
  CHECK(take(text) == "(x|y)*");
  char* sub = reinterpret_cast<char*>(1);
  CHECK(regamb_regex_problematic_subterm(r, &sub) == REGAMB_OK);
  CHECK(sub == nullptr);
  regamb_regex_free(r);
}

TEST_CASE("errors carry a status and a message") {
  regamb_regex* r = nullptr;
  CHECK(regamb_regex_parse("(x", &r) == REGAMB_ERR_SYNTAX);
  CHECK(r == nullptr);
  CHECK(std::string(regamb_last_error()).find("position") != std::string::npos);
  CHECK(regamb_regex_parse("x+y", &r) == REGAMB_ERR_SYMBOL);
  CHECK(regamb_regex_parse(nullptr, &r) == REGAMB_ERR_INVALID_ARGUMENT);
  CHECK(regamb_regex_parse("x", &r) == REGAMB_OK);
  CHECK(std::string(regamb_last_error()).empty());
  regamb_regex_free(r);
  CHECK(std::string(regamb_status_name(REGAMB_ERR_PROBLEMATIC)) == "rejected-problematic");
}

TEST_CASE("tree listings") {
  regamb_regex* r = parse("(xy|x|y)*");
  regamb_strings* trees = nullptr;
  REQUIRE(regamb_all_parse(r, "xy", &trees) == REGAMB_OK);
  CHECK(take(trees) == std::vector<std::string>{"[L (x,y)]", "[R (L x),R (R y)]"});
  REQUIRE(regamb_oracle_enumerate(r, "xy", 12, &trees) == REGAMB_OK);
  CHECK(take(trees).size() == 2);
  CHECK(regamb_oracle_enumerate(r, "xyxy", 3, &trees) == REGAMB_ERR_WORD_TOO_LONG);
  CHECK(regamb_all_parse(r, "x?", &trees) == REGAMB_ERR_SYMBOL);
  regamb_regex_free(r);
}

TEST_CASE("transducer") {
  regamb_regex* r = parse("(xx*|yx|xyx)*y");
  regamb_fst* posix = nullptr;
  regamb_fst* greedy = nullptr;
  REQUIRE(regamb_fst_build(r, REGAMB_POSIX, 0, &posix) == REGAMB_OK);
  REQUIRE(regamb_fst_build(r, REGAMB_GREEDY, 0, &greedy) == REGAMB_OK);
  CHECK(regamb_fst_state_count(posix) > 1);
  char* tree = nullptr;
  REQUIRE(regamb_fst_parse_first(posix, "xyxy", &tree) == REGAMB_OK);
  CHECK(take(tree) == "([R (R (x,(y,x)))],y)");
  REQUIRE(regamb_fst_parse_first(greedy, "xyxy", &tree) == REGAMB_OK);
  CHECK(take(tree) == "([L (x,[]),R (L (y,x))],y)");
  REQUIRE(regamb_fst_parse_first(posix, "xyx", &tree) == REGAMB_OK);
  CHECK(tree == nullptr);
  regamb_strings* all = nullptr;
  REQUIRE(regamb_fst_parse_all(posix, "xyxy", &all) == REGAMB_OK);
  CHECK(take(all).size() == 2);
  char* dot = nullptr;
  REQUIRE(regamb_fst_dot(posix, 0, &dot) == REGAMB_OK);
  CHECK(take(dot).rfind("digraph", 0) == 0);
  regamb_fst* tiny = nullptr;
  CHECK(regamb_fst_build(r, REGAMB_POSIX, 1, &tiny) == REGAMB_ERR_STATE_LIMIT);
  CHECK(tiny == nullptr);
  CHECK(regamb_fst_build(r, static_cast<regamb_policy>(9), 0, &tiny) ==
        REGAMB_ERR_INVALID_ARGUMENT);
  regamb_fst_free(posix);
  regamb_fst_free(greedy);
  regamb_regex_free(r);
}

TEST_CASE("analysis") {
  regamb_regex* r = parse("(x|xy)(y|~)");
  regamb_report* rep = nullptr;
  REQUIRE(regamb_analyze(r, 0, &rep) == REGAMB_OK);
  CHECK(regamb_report_verdict(rep) == REGAMB_AMBIGUOUS);
  char* text = nullptr;
  REQUIRE(regamb_report_render(rep, REGAMB_TEXT, &text) == REGAMB_OK);
  CHECK(take(text).find("verdict: ambiguous") != std::string::npos);
  REQUIRE(regamb_report_render(rep, REGAMB_JSON, &text) == REGAMB_OK);
  CHECK(take(text).find("\"verdict\": \"ambiguous\"") != std::string::npos);
  regamb_report_free(rep);
  regamb_regex_free(r);

  r = parse("~*");
  REQUIRE(regamb_analyze(r, 0, &rep) == REGAMB_OK);
  CHECK(regamb_report_verdict(rep) == REGAMB_REJECTED_PROBLEMATIC);
  regamb_report_free(rep);
  char* sub = nullptr;
  REQUIRE(regamb_regex_problematic_subterm(r, &sub) == REGAMB_OK);
  CHECK(take(sub) == "~*");
  regamb_regex_free(r);
}

TEST_CASE("null handles") {
  CHECK(regamb_fst_state_count(nullptr) == 0);
  CHECK(regamb_strings_count(nullptr) == 0);
  CHECK(regamb_strings_at(nullptr, 0) == nullptr);
  regamb_regex_free(nullptr);
  regamb_fst_free(nullptr);
  regamb_report_free(nullptr);
  regamb_strings_free(nullptr);
  regamb_string_free(nullptr);
}

}  // namespace
