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

#include "syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

#include "error.hpp"
#include "util.hpp"

namespace regamb {

struct Regex::Node {
  RegexKind kind;
  Symbol sym = 0;
  Regex a;
  Regex b;
  bool nullable = false;
  bool empty = false;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::size_t depth = 1;

  // Only the leaves are built without children; Regex() itself needs a leaf.
  explicit Node(RegexKind k, Symbol x = 0) : kind(k), sym(x), a(nullptr_tag()), b(nullptr_tag()) {
    nullable = k == RegexKind::kEps;
    empty = k == RegexKind::kPhi;
    hash = mix_hash(static_cast<std::size_t>(k) + 1, static_cast<unsigned char>(x));
  }
  Node(RegexKind k, Regex l, Regex r) : kind(k), a(std::move(l)), b(std::move(r)) {
    switch (k) {
      case RegexKind::kStar:
        nullable = true;
        empty = false;
        break;
      case RegexKind::kCat:
        nullable = a.nullable() && b.nullable();
        empty = a.empty_language() || b.empty_language();
        break;
      case RegexKind::kAlt:
        nullable = a.nullable() || b.nullable();
        empty = a.empty_language() && b.empty_language();
        break;
      default:
        break;
    }
    hash = mix_hash(mix_hash(static_cast<std::size_t>(k) + 1, a.hash()),
                    k == RegexKind::kStar ? 0 : b.hash());
    size = 1 + a.size() + (k == RegexKind::kStar ? 0 : b.size());
    depth = 1 + std::max(a.depth(), k == RegexKind::kStar ? 0 : b.depth());
  }

  static Regex nullptr_tag() { return Regex(std::shared_ptr<const Node>()); }
};

namespace {

const std::shared_ptr<const Regex::Node>& leaf(RegexKind k) {
  static const std::shared_ptr<const Regex::Node> phi =
      std::make_shared<const Regex::Node>(RegexKind::kPhi);
  static const std::shared_ptr<const Regex::Node> eps =
      std::make_shared<const Regex::Node>(RegexKind::kEps);
  return k == RegexKind::kPhi ? phi : eps;
}

}  // namespace

Regex::Regex() : node_(leaf(RegexKind::kPhi)) {}

Regex Regex::phi() { return Regex(leaf(RegexKind::kPhi)); }
Regex Regex::eps() { return Regex(leaf(RegexKind::kEps)); }

Regex Regex::sym(Symbol x) {
  if (!is_alphabet_symbol(x)) {
    throw Error(ErrorKind::kSymbol, std::string("symbol '") + x + "' is outside the alphabet");
  }
  static const std::array<std::shared_ptr<const Node>, 128> table = [] {
    std::array<std::shared_ptr<const Node>, 128> t;
    for (int c = 0; c < 128; ++c) {
      if (is_alphabet_symbol(static_cast<char>(c))) {
        t[c] = std::make_shared<const Node>(RegexKind::kSym, static_cast<char>(c));
      }
    }
    return t;
  }();
  return Regex(table[static_cast<unsigned char>(x)]);
}

Regex Regex::star(const Regex& body) {
  return Regex(std::make_shared<const Node>(RegexKind::kStar, body, Node::nullptr_tag()));
}
Regex Regex::cat(const Regex& left, const Regex& right) {
  return Regex(std::make_shared<const Node>(RegexKind::kCat, left, right));
}
Regex Regex::alt(const Regex& left, const Regex& right) {
  return Regex(std::make_shared<const Node>(RegexKind::kAlt, left, right));
}

RegexKind Regex::kind() const noexcept { return node_->kind; }
Symbol Regex::symbol() const { return node_->sym; }
const Regex& Regex::body() const { return node_->a; }
const Regex& Regex::left() const { return node_->a; }
const Regex& Regex::right() const { return node_->b; }
bool Regex::nullable() const noexcept { return node_->nullable; }
bool Regex::empty_language() const noexcept { return node_->empty; }
std::size_t Regex::hash() const noexcept { return node_ ? node_->hash : 0; }
std::size_t Regex::size() const noexcept { return node_ ? node_->size : 0; }
std::size_t Regex::depth() const noexcept { return node_ ? node_->depth : 0; }

bool operator==(const Regex& a, const Regex& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const Regex::Node& x = *a.node_;
  const Regex::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case RegexKind::kPhi:
    case RegexKind::kEps:
      return true;
    case RegexKind::kSym:
      return x.sym == y.sym;
    case RegexKind::kStar:
      return x.a == y.a;
    case RegexKind::kCat:
    case RegexKind::kAlt:
      return x.a == y.a && x.b == y.b;
  }
  return false;
}

bool is_alphabet_symbol(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

void check_word(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!is_alphabet_symbol(w[i])) {
      throw Error(ErrorKind::kSymbol, "word symbol '" + std::string(1, w[i]) +
                                          "' at position " + std::to_string(i) +
                                          " is outside the alphabet");
    }
  }
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Regex parse() {
    Regex r = alternation();
    skip_space();
    if (pos_ < text_.size()) unexpected();
    return r;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int peek() {
    skip_space();
    return pos_ < text_.size() ? static_cast<unsigned char>(text_[pos_]) : -1;
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) throw SyntaxError(ErrorKind::kSyntax, pos_, "unexpected end of input");
    char c = text_[pos_];
    if (!is_alphabet_symbol(c) && std::string_view("()|*~#").find(c) == std::string_view::npos) {
      throw SyntaxError(ErrorKind::kSymbol, pos_,
                        std::string("unknown symbol '") + c + "' outside the alphabet");
    }
    throw SyntaxError(ErrorKind::kSyntax, pos_, std::string("unexpected '") + c + "'");
  }

  static bool starts_atom(int c) {
    return c == '(' || c == '~' || c == '#' || (c >= 0 && is_alphabet_symbol(static_cast<char>(c)));
  }

  Regex alternation() {
    std::vector<Regex> parts{concatenation()};
    while (peek() == '|') {
      ++pos_;
      parts.push_back(concatenation());
    }
    Regex r = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) r = Regex::alt(parts[i], r);
    return r;
  }

  Regex concatenation() {
    std::vector<Regex> parts;
    while (starts_atom(peek())) parts.push_back(postfix());
    if (parts.empty()) unexpected();
    Regex r = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) r = Regex::cat(parts[i], r);
    return r;
  }

  Regex postfix() {
    Regex r = atom();
    while (peek() == '*') {
      ++pos_;
      r = Regex::star(r);
    }
    return r;
  }

  Regex atom() {
    int c = peek();
    if (c == '(') {
      ++pos_;
      Regex r = alternation();
      if (peek() != ')') unexpected();
      ++pos_;
      return r;
    }
    ++pos_;
    if (c == '~') return Regex::eps();
    if (c == '#') return Regex::phi();
    return Regex::sym(static_cast<char>(c));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kAlt:
      return 0;
    case RegexKind::kCat:
      return 1;
    case RegexKind::kStar:
      return 2;
    default:
      return 3;
  }
}

void print(const Regex& r, std::string& out) {
  auto child = [&out](const Regex& c, int min_prec) {
    if (precedence(c) < min_prec) {
      out += '(';
      print(c, out);
      out += ')';
    } else {
      print(c, out);
    }
  };
  switch (r.kind()) {
    case RegexKind::kPhi:
      out += '#';
      break;
    case RegexKind::kEps:
      out += '~';
      break;
    case RegexKind::kSym:
      out += r.symbol();
      break;
    case RegexKind::kStar:
      child(r.body(), 2);
      out += '*';
      break;
    case RegexKind::kCat:
      child(r.left(), 2);
      child(r.right(), 1);
      break;
    case RegexKind::kAlt:
      child(r.left(), 1);
      out += '|';
      child(r.right(), 0);
      break;
  }
}

void collect_symbols(const Regex& r, std::array<bool, 128>& seen) {
  switch (r.kind()) {
    case RegexKind::kSym:
      seen[static_cast<unsigned char>(r.symbol())] = true;
      break;
    case RegexKind::kStar:
      collect_symbols(r.body(), seen);
      break;
    case RegexKind::kCat:
    case RegexKind::kAlt:
      collect_symbols(r.left(), seen);
      collect_symbols(r.right(), seen);
      break;
    default:
      break;
  }
}

}  // namespace

Regex parse_regex(std::string_view text) { return Parser(text).parse(); }

std::string print_regex(const Regex& r) {
  std::string out;
  print(r, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Regex& r) { return os << print_regex(r); }

bool nullable(const Regex& r) { return r.nullable(); }
bool is_empty_lang(const Regex& r) { return r.empty_language(); }
bool is_problematic(const Regex& r) { return problematic_subterm(r).has_value(); }

std::optional<Regex> problematic_subterm(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kStar:
      if (r.body().nullable()) return r;
      return problematic_subterm(r.body());
    case RegexKind::kCat:
    case RegexKind::kAlt:
      if (auto s = problematic_subterm(r.left())) return s;
      return problematic_subterm(r.right());
    default:
      return std::nullopt;
  }
}

std::string symbols_of(const Regex& r) {
  std::array<bool, 128> seen{};
  collect_symbols(r, seen);
  std::string out;
  for (int c = 0; c < 128; ++c) {
    if (seen[c]) out += static_cast<char>(c);
  }
  return out;
}

}  // namespace regamb
