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

#include "oracle.hpp"

#include <random>

#include "error.hpp"

namespace regamb::oracle {

namespace {

class Splitter {
 public:
  explicit Splitter(std::string_view w) : w_(w) {}

  std::vector<ParseTree> trees(const Regex& r, std::size_t i, std::size_t j) {
    std::vector<ParseTree> out;
    switch (r.kind()) {
      case RegexKind::kPhi:
        break;
      case RegexKind::kEps:
        if (i == j) out.push_back(ParseTree::unit());
        break;
      case RegexKind::kSym:
        if (j == i + 1 && w_[i] == r.symbol()) out.push_back(ParseTree::lit(r.symbol()));
        break;
      case RegexKind::kStar:
        return iterations(r.body(), i, j);
      case RegexKind::kCat:
        for (std::size_t k = i; k <= j; ++k) {
          std::vector<ParseTree> lefts = trees(r.left(), i, k);
          if (lefts.empty()) continue;
          std::vector<ParseTree> rights = trees(r.right(), k, j);
          for (const ParseTree& a : lefts) {
            for (const ParseTree& b : rights) out.push_back(ParseTree::pair(a, b));
          }
        }
        break;
      case RegexKind::kAlt:
        for (const ParseTree& a : trees(r.left(), i, j)) out.push_back(ParseTree::inl(a));
        for (const ParseTree& b : trees(r.right(), i, j)) out.push_back(ParseTree::inr(b));
        break;
    }
    return out;
  }

 private:
  // Each iteration consumes at least one symbol.
  std::vector<ParseTree> iterations(const Regex& body, std::size_t i, std::size_t j) {
    std::vector<ParseTree> out;
    if (i == j) {
      out.push_back(ParseTree::nil());
      return out;
    }
    for (std::size_t k = i + 1; k <= j; ++k) {
      std::vector<ParseTree> heads = trees(body, i, k);
      if (heads.empty()) continue;
      std::vector<ParseTree> tails = iterations(body, k, j);
      for (const ParseTree& h : heads) {
        for (const ParseTree& t : tails) out.push_back(ParseTree::cons(h, t));
      }
    }
    return out;
  }

  std::string_view w_;
};

class Generator {
 public:
  Generator(const std::string& alphabet, std::uint64_t seed) : alphabet_(alphabet), rng_(seed) {}

  Regex expr(std::size_t depth) {
    if (depth <= 1 || pick(10) < 3) return atom();
    switch (pick(3)) {
      case 0:
        return Regex::star(expr(depth - 1));
      case 1:
        return Regex::cat(expr(depth - 1), expr(depth - 1));
      default:
        return Regex::alt(expr(depth - 1), expr(depth - 1));
    }
  }

 private:
  std::uint64_t pick(std::uint64_t n) { return rng_() % n; }

  Regex atom() {
    std::uint64_t k = pick(20);
    if (k < 3 || alphabet_.empty()) return Regex::eps();
    if (k < 5) return Regex::phi();
    return Regex::sym(alphabet_[pick(alphabet_.size())]);
  }

  std::string alphabet_;
  std::mt19937_64 rng_;
};

}  // namespace

TreeSeq enumerate(const Regex& r, std::string_view w) {
  if (auto s = problematic_subterm(r)) {
    throw Error(ErrorKind::kProblematic,
                "expression is problematic: " + print_regex(*s) + " has a nullable body");
  }
  check_word(w);
  TreeSeq out;
  for (const ParseTree& t : Splitter(w).trees(r, 0, w.size())) out.push_back(t);
  return out;
}

std::vector<Regex> gen_corpus(std::size_t max_depth, const std::string& alphabet, std::size_t n,
                              std::uint64_t seed) {
  if (max_depth == 0 || n == 0) {
    throw Error(ErrorKind::kInvalidArgument, "corpus needs a positive depth and size");
  }
  Generator gen(alphabet, seed);
  std::vector<Regex> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(gen.expr(max_depth));
  return out;
}

std::vector<Word> all_words(const std::string& alphabet, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : alphabet) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

}  // namespace regamb::oracle
