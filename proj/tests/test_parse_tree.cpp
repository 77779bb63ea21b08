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

#include <algorithm>

#include "doctest.h"
#include "error.hpp"
#include "oracle.hpp"
#include "parse_tree.hpp"
#include "support.hpp"

namespace regamb {
namespace {

using testing::re;
using testing::tree;

TEST_SUITE("parse_tree") {
  TEST_CASE("text form") {
    ParseTree v = ParseTree::pair(ParseTree::seq({ParseTree::inr(ParseTree::inr(ParseTree::pair(
                                      ParseTree::lit('x'),
                                      ParseTree::pair(ParseTree::lit('y'), ParseTree::lit('x')))))}),
                                  ParseTree::lit('y'));
    CHECK(to_string(v) == "([R (R (x,(y,x)))],y)");
    CHECK(to_string(ParseTree::inr(ParseTree::unit())) == "R ()");
    CHECK(to_string(ParseTree::nil()) == "[]");
    CHECK(to_string(TreeSeq{ParseTree::lit('x'), ParseTree::unit()}) == "[x,()]");
  }

  TEST_CASE("text round trip") {
    for (const char* text : {"()", "x", "L", "R", "L x", "R ()", "[]", "[L (x,y)]",
                             "[R (L x),R (R y)]", "([R (R (x,(y,x)))],y)", "(R (x,y),R ())",
                             "L (L (R [x,y]))", "(L,R)", "L L", "R R"}) {
      CAPTURE(text);
      CHECK(to_string(tree(text)) == text);
    }
    CHECK(tree("L") == ParseTree::lit('L'));
    CHECK(tree("L L") == ParseTree::inl(ParseTree::lit('L')));
    CHECK(tree(" ( x , y ) ") == tree("(x,y)"));
    CHECK_THROWS_AS(tree("(x"), Error);
    CHECK_THROWS_AS(tree("[x,"), Error);
    CHECK_THROWS_AS(tree("x y"), Error);
  }

  TEST_CASE("typecheck") {
    Regex r = re("(xx*|yx|xyx)*y");
    CHECK(typecheck(tree("([R (R (x,(y,x)))],y)"), r));
    CHECK(typecheck(tree("([L (x,[]),R (L (y,x))],y)"), r));
    CHECK_FALSE(typecheck(tree("(R (R (x,(y,x))),y)"), r));
    CHECK_FALSE(typecheck(tree("x"), re("y")));
    CHECK_FALSE(typecheck(tree("()"), Regex::phi()));
    CHECK(typecheck(tree("()"), Regex::eps()));
    CHECK(typecheck(tree("[]"), re("x*")));
    CHECK_FALSE(typecheck(tree("L x"), re("x")));
  }

  TEST_CASE("flatten") {
    CHECK(flatten(tree("([R (R (x,(y,x)))],y)")) == "xyxy");
    CHECK(flatten(tree("[R (L x),R (R y)]")) == "xy");
    CHECK(flatten(tree("(R (),[])")).empty());
  }

  TEST_CASE("all_eps") {
    CHECK(to_string(all_eps(re("(#|#)(x|y)*|(#|~)(x|y)*"))) == "[R (R (),[])]");
    CHECK(to_string(all_eps(re("(~|~)(~|x*)"))) == "[(L (),L ()),(L (),R []),(R (),L ()),(R (),R [])]");
    CHECK(all_eps(re("x")).empty());
    CHECK(count_all_eps(re("(~|~)(~|x*)")) == 4);
    CHECK(to_string(first_eps(re("(x|~)|~"))) == "L (R ())");
    CHECK_THROWS_AS(first_eps(re("x")), Error);
  }

  TEST_CASE("count_all_eps saturates") {
    Regex r = re("~|~");
    for (int i = 0; i < 80; ++i) r = Regex::cat(r, re("~|~"));
    CHECK(count_all_eps(r) == static_cast<std::size_t>(-1));
  }

  TEST_CASE("greedy order examples") {
    CHECK(greedy_less(tree("L x"), tree("R x")));
    CHECK(greedy_less(tree("[x]"), tree("[]")));
    CHECK(greedy_less(tree("([x],[])"), tree("([],[x])")));
    CHECK(greedy_less(tree("([L (x,[]),R (L (y,x))],y)"), tree("([R (R (x,(y,x)))],y)")));
    CHECK(greedy_compare(tree("(x,y)"), tree("(x,y)")) == 0);
  }

  TEST_CASE("all_eps agrees with the oracle on the empty word") {
    for (const Regex& r : testing::corpus()) {
      CAPTURE(print_regex(r));
      TreeSeq eps = all_eps(r);
      REQUIRE(testing::same_set(eps, oracle::enumerate(r, "")));
      CHECK(eps.size() == count_all_eps(r));
      if (!eps.empty()) CHECK(first_eps(r) == eps.front());
    }
  }

  TEST_CASE("greedy order is a strict total order on trees of one word") {
    for (const Regex& r : testing::corpus(100)) {
      for (const Word& w : oracle::all_words("xy", 3)) {
        std::vector<ParseTree> ts = oracle::enumerate(r, w).items();
        for (const ParseTree& a : ts) {
          CHECK_FALSE(greedy_less(a, a));
          for (const ParseTree& b : ts) {
            if (a == b) continue;
            CHECK(greedy_less(a, b) != greedy_less(b, a));
            CHECK(greedy_compare(a, b) == -greedy_compare(b, a));
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace regamb
