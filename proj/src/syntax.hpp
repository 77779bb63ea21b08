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

#ifndef REGAMB_SYNTAX_HPP_
#define REGAMB_SYNTAX_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace regamb {

using Symbol = char;
using Word = std::string;

// Symbols are ASCII letters and digits.
bool is_alphabet_symbol(char c) noexcept;

// Throws Error(kSymbol) on the first character outside the alphabet.
void check_word(std::string_view w);

enum class RegexKind : std::uint8_t { kPhi, kEps, kSym, kStar, kCat, kAlt };

// Immutable regular expression. Copies share structure.
class Regex {
 public:
  static Regex phi();
  static Regex eps();
  static Regex sym(Symbol x);
  static Regex star(const Regex& body);
  static Regex cat(const Regex& left, const Regex& right);
  static Regex alt(const Regex& left, const Regex& right);

  Regex();  // phi

  RegexKind kind() const noexcept;
  Symbol symbol() const;
  const Regex& body() const;
  const Regex& left() const;
  const Regex& right() const;

  bool nullable() const noexcept;
  bool empty_language() const noexcept;
  std::size_t hash() const noexcept;
  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;

  bool is(RegexKind k) const noexcept { return kind() == k; }

  struct Node;  // opaque

  friend bool operator==(const Regex& a, const Regex& b) noexcept;
  friend bool operator!=(const Regex& a, const Regex& b) noexcept {
    return !(a == b);
  }

 private:
  explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct RegexHash {
  std::size_t operator()(const Regex& r) const noexcept { return r.hash(); }
};

Regex parse_regex(std::string_view text);
std::string print_regex(const Regex& r);
std::ostream& operator<<(std::ostream& os, const Regex& r);

bool nullable(const Regex& r);
bool is_empty_lang(const Regex& r);
bool is_problematic(const Regex& r);

// The first subterm s* (in preorder) with nullable s.
std::optional<Regex> problematic_subterm(const Regex& r);

// Sorted, distinct symbols occurring in r.
std::string symbols_of(const Regex& r);

}  // namespace regamb

#endif  // REGAMB_SYNTAX_HPP_
