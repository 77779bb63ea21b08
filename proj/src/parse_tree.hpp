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

#ifndef REGAMB_PARSE_TREE_HPP_
#define REGAMB_PARSE_TREE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "syntax.hpp"
#include "util.hpp"

namespace regamb {

enum class TreeKind : std::uint8_t { kUnit, kLit, kPair, kInL, kInR, kSeq };

// Immutable parse tree. A Seq is a cons list, so prepending an element
// shares the tail.
class ParseTree {
 public:
  static ParseTree unit();
  static ParseTree lit(Symbol x);
  static ParseTree pair(const ParseTree& first, const ParseTree& second);
  static ParseTree inl(const ParseTree& inner);
  static ParseTree inr(const ParseTree& inner);
  static ParseTree nil();
  static ParseTree cons(const ParseTree& head, const ParseTree& tail);
  static ParseTree seq(const std::vector<ParseTree>& elements);

  ParseTree();  // unit

  TreeKind kind() const noexcept;
  Symbol symbol() const;
  const ParseTree& first() const;   // Pair
  const ParseTree& second() const;  // Pair
  const ParseTree& inner() const;   // InL, InR
  bool is_nil() const noexcept;     // Seq
  const ParseTree& head() const;    // non-empty Seq
  const ParseTree& tail() const;    // non-empty Seq
  std::vector<ParseTree> elements() const;  // Seq

  bool is(TreeKind k) const noexcept { return kind() == k; }
  std::size_t hash() const noexcept;

  friend bool operator==(const ParseTree& a, const ParseTree& b) noexcept;
  friend bool operator!=(const ParseTree& a, const ParseTree& b) noexcept {
    return !(a == b);
  }

  struct Node;  // opaque

 private:
  explicit ParseTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct ParseTreeHash {
  std::size_t operator()(const ParseTree& t) const noexcept { return t.hash(); }
};

using TreeSeq = UniqueSeq<ParseTree, ParseTreeHash>;

// Text notation: () x (t1,t2) L t R t [t1,t2].
std::string to_string(const ParseTree& t);
std::string to_string(const TreeSeq& ts);
std::ostream& operator<<(std::ostream& os, const ParseTree& t);
ParseTree parse_tree_text(std::string_view text);

bool typecheck(const ParseTree& v, const Regex& r);
Word flatten(const ParseTree& v);

TreeSeq all_eps(const Regex& r);
// Head of all_eps(r); r must be nullable.
ParseTree first_eps(const Regex& r);
// |all_eps(r)|, saturating.
std::size_t count_all_eps(const Regex& r);

// Three-way greedy comparison; throws Error(kShape) on incomparable trees.
int greedy_compare(const ParseTree& v1, const ParseTree& v2);
bool greedy_less(const ParseTree& v1, const ParseTree& v2);

}  // namespace regamb

#endif  // REGAMB_PARSE_TREE_HPP_
