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

#ifndef REGAMB_SIMPLIFY_HPP_
#define REGAMB_SIMPLIFY_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "parse_tree.hpp"
#include "syntax.hpp"

namespace regamb {

// A map from the parse trees of a rewritten expression back to the trees of
// the original, kept as a term so it can be printed and compared.
class Transformer {
 public:
  enum class Kind : std::uint8_t {
    kIdentity,
    kChain,
    kIdemp,
    kComm,
    kAssoc,
    kAssocInv,
    kDist,
    kElimPhiLeft,   // # + r => r
    kElimPhiRight,  // r + # => r
    kBottom,        // # . r => #
    kC1,            // r . []
    kC2,            // [] . r
    kC3,            // r + []
    kC4,            // [] + r
    kInject,
  };

  static Transformer identity();
  static Transformer idemp();
  static Transformer comm();
  static Transformer assoc();
  static Transformer assoc_inv();
  static Transformer dist();
  static Transformer elim_phi_left();
  static Transformer elim_phi_right();
  static Transformer bottom();
  static Transformer c1(const Transformer& inner);
  static Transformer c2(const Transformer& inner);
  static Transformer c3(const Transformer& inner);
  static Transformer c4(const Transformer& inner);
  static Transformer inject(const Regex& source, Symbol x);
  // steps[0] is closest to the source: the last step is applied first.
  static Transformer chain(const std::vector<Transformer>& steps);

  Transformer();  // identity

  Kind kind() const noexcept;
  bool is_identity() const noexcept { return kind() == Kind::kIdentity; }
  const Transformer& inner() const;               // C1..C4
  const std::vector<Transformer>& steps() const;  // Chain

  TreeSeq apply(const ParseTree& v) const;
  TreeSeq apply(const TreeSeq& vs) const;
  ParseTree apply_first(const ParseTree& v) const;

  std::string describe() const;

  friend bool operator==(const Transformer& a, const Transformer& b);

 private:
  struct Node;
  explicit Transformer(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

TreeSeq apply_transformer(const Transformer& t, const ParseTree& v);

struct RewriteResult {
  Regex target;
  Transformer back;
  bool used_idemp = false;
  bool used_elim = false;
  // Alternatives removed by Idemp at positions that carry parse trees: every
  // enclosing subterm, and the duplicate itself, has a non-empty language.
  std::vector<Regex> live_idemp;
};

// Assoc and duplicate removal in every non-star context.
RewriteResult canonicalize(const Regex& r);
// canonicalize plus # elimination; the state normalizer of POSIX mode.
RewriteResult posix_normalize(const Regex& r);
// Dist, # elimination and canonicalize, restricted to the contexts a
// derivative rewrites: left of a concatenation, either side of an alternation.
RewriteResult pd_normalize(const Regex& r);

}  // namespace regamb

#endif  // REGAMB_SIMPLIFY_HPP_
