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

#include "parse_tree.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <utility>

#include "error.hpp"

namespace regamb {

struct ParseTree::Node {
  TreeKind kind;
  Symbol sym = 0;
  bool nil = false;
  std::size_t hash = 0;
  ParseTree a;
  // Released iteratively in ~Node so long Seq spines do not recurse.
  mutable ParseTree b;

  Node(TreeKind k, Symbol x, bool is_nil)
      : kind(k), sym(x), nil(is_nil), a(null_tree()), b(null_tree()) {
    hash = mix_hash(static_cast<std::size_t>(k) * 2 + (is_nil ? 1 : 0) + 1,
                    static_cast<unsigned char>(x));
  }
  Node(TreeKind k, ParseTree x, ParseTree y) : kind(k), a(std::move(x)), b(std::move(y)) {
    hash = mix_hash(mix_hash(static_cast<std::size_t>(k) * 2 + 1, a.hash()), b.hash());
  }
  ~Node() {
    std::shared_ptr<const Node> next = std::move(b.node_);
    while (next && next.use_count() == 1) {
      std::shared_ptr<const Node> after = std::move(next->b.node_);
      next = std::move(after);
    }
  }

  static ParseTree null_tree() { return ParseTree(std::shared_ptr<const Node>()); }
};

namespace {

const std::shared_ptr<const ParseTree::Node>& unit_node() {
  static const auto n = std::make_shared<const ParseTree::Node>(TreeKind::kUnit, 0, false);
  return n;
}

const std::shared_ptr<const ParseTree::Node>& nil_node() {
  static const auto n = std::make_shared<const ParseTree::Node>(TreeKind::kSeq, 0, true);
  return n;
}

[[noreturn]] void shape(const std::string& what) { throw Error(ErrorKind::kShape, what); }

}  // namespace

ParseTree::ParseTree() : node_(unit_node()) {}

ParseTree ParseTree::unit() { return ParseTree(unit_node()); }

ParseTree ParseTree::lit(Symbol x) {
  if (!is_alphabet_symbol(x)) {
    throw Error(ErrorKind::kSymbol, std::string("symbol '") + x + "' is outside the alphabet");
  }
  static const std::array<std::shared_ptr<const Node>, 128> table = [] {
    std::array<std::shared_ptr<const Node>, 128> t;
    for (int c = 0; c < 128; ++c) {
      if (is_alphabet_symbol(static_cast<char>(c))) {
        t[c] = std::make_shared<const Node>(TreeKind::kLit, static_cast<char>(c), false);
      }
    }
    return t;
  }();
  return ParseTree(table[static_cast<unsigned char>(x)]);
}

ParseTree ParseTree::pair(const ParseTree& first, const ParseTree& second) {
  return ParseTree(std::make_shared<const Node>(TreeKind::kPair, first, second));
}
ParseTree ParseTree::inl(const ParseTree& inner) {
  return ParseTree(std::make_shared<const Node>(TreeKind::kInL, inner, Node::null_tree()));
}
ParseTree ParseTree::inr(const ParseTree& inner) {
  return ParseTree(std::make_shared<const Node>(TreeKind::kInR, inner, Node::null_tree()));
}
ParseTree ParseTree::nil() { return ParseTree(nil_node()); }
ParseTree ParseTree::cons(const ParseTree& head, const ParseTree& tail) {
  if (!tail.is(TreeKind::kSeq)) shape("cons onto a non-sequence");
  return ParseTree(std::make_shared<const Node>(TreeKind::kSeq, head, tail));
}
ParseTree ParseTree::seq(const std::vector<ParseTree>& elements) {
  ParseTree t = nil();
  for (auto it = elements.rbegin(); it != elements.rend(); ++it) t = cons(*it, t);
  return t;
}

TreeKind ParseTree::kind() const noexcept { return node_->kind; }
Symbol ParseTree::symbol() const { return node_->sym; }
const ParseTree& ParseTree::first() const { return node_->a; }
const ParseTree& ParseTree::second() const { return node_->b; }
const ParseTree& ParseTree::inner() const { return node_->a; }
bool ParseTree::is_nil() const noexcept { return node_->nil; }
const ParseTree& ParseTree::head() const { return node_->a; }
const ParseTree& ParseTree::tail() const { return node_->b; }
std::size_t ParseTree::hash() const noexcept { return node_ ? node_->hash : 0; }

std::vector<ParseTree> ParseTree::elements() const {
  std::vector<ParseTree> out;
  for (const Node* n = node_.get(); !n->nil; n = n->b.node_.get()) out.push_back(n->a);
  return out;
}

bool operator==(const ParseTree& a, const ParseTree& b) noexcept {
  const ParseTree::Node* x = a.node_.get();
  const ParseTree::Node* y = b.node_.get();
  // Walks Seq spines in a loop; recursion only into heads and other children.
  while (true) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->hash != y->hash || x->kind != y->kind || x->nil != y->nil || x->sym != y->sym) {
      return false;
    }
    switch (x->kind) {
      case TreeKind::kUnit:
      case TreeKind::kLit:
        return true;
      case TreeKind::kInL:
      case TreeKind::kInR:
        x = x->a.node_.get();
        y = y->a.node_.get();
        continue;
      case TreeKind::kPair:
      case TreeKind::kSeq:
        if (x->nil) return true;
        if (!(x->a == y->a)) return false;
        x = x->b.node_.get();
        y = y->b.node_.get();
        continue;
    }
    return false;
  }
}

namespace {

void write(const ParseTree& t, std::string& out) {
  switch (t.kind()) {
    case TreeKind::kUnit:
      out += "()";
      return;
    case TreeKind::kLit:
      out += t.symbol();
      return;
    case TreeKind::kPair:
      out += '(';
      write(t.first(), out);
      out += ',';
      write(t.second(), out);
      out += ')';
      return;
    case TreeKind::kInL:
    case TreeKind::kInR: {
      out += t.is(TreeKind::kInL) ? "L " : "R ";
      const ParseTree& in = t.inner();
      bool wrap = in.is(TreeKind::kInL) || in.is(TreeKind::kInR);
      if (wrap) out += '(';
      write(in, out);
      if (wrap) out += ')';
      return;
    }
    case TreeKind::kSeq: {
      out += '[';
      bool sep = false;
      for (const ParseTree* s = &t; !s->is_nil(); s = &s->tail()) {
        if (sep) out += ',';
        write(s->head(), out);
        sep = true;
      }
      out += ']';
      return;
    }
  }
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  ParseTree parse() {
    ParseTree t = tree();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw SyntaxError(ErrorKind::kSyntax, pos_, "parse tree: " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ParseTree tree() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    // "L t" has a space after the tag; a bare L is the symbol.
    if ((c == 'L' || c == 'R') && pos_ + 1 < text_.size() && text_[pos_ + 1] == ' ') {
      pos_ += 2;
      ParseTree in = tree();
      return c == 'L' ? ParseTree::inl(in) : ParseTree::inr(in);
    }
    if (c == '(') {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return ParseTree::unit();
      }
      ParseTree first = tree();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
        return first;
      }
      expect(',');
      ParseTree second = tree();
      expect(')');
      return ParseTree::pair(first, second);
    }
    if (c == '[') {
      ++pos_;
      std::vector<ParseTree> items;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ']') {
        ++pos_;
        return ParseTree::nil();
      }
      items.push_back(tree());
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        items.push_back(tree());
        skip_space();
      }
      expect(']');
      return ParseTree::seq(items);
    }
    if (is_alphabet_symbol(c)) {
      ++pos_;
      return ParseTree::lit(c);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void flatten_into(const ParseTree& v, Word& out) {
  switch (v.kind()) {
    case TreeKind::kUnit:
      return;
    case TreeKind::kLit:
      out += v.symbol();
      return;
    case TreeKind::kPair:
      flatten_into(v.first(), out);
      flatten_into(v.second(), out);
      return;
    case TreeKind::kInL:
    case TreeKind::kInR:
      flatten_into(v.inner(), out);
      return;
    case TreeKind::kSeq:
      for (const ParseTree* s = &v; !s->is_nil(); s = &s->tail()) flatten_into(s->head(), out);
      return;
  }
}

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                         : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > std::numeric_limits<std::size_t>::max() / b ? std::numeric_limits<std::size_t>::max()
                                                         : a * b;
}

}  // namespace

std::string to_string(const ParseTree& t) {
  std::string out;
  write(t, out);
  return out;
}

std::string to_string(const TreeSeq& ts) {
  std::string out = "[";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ',';
    write(ts[i], out);
  }
  return out + "]";
}

std::ostream& operator<<(std::ostream& os, const ParseTree& t) { return os << to_string(t); }

ParseTree parse_tree_text(std::string_view text) { return TreeParser(text).parse(); }

bool typecheck(const ParseTree& v, const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kPhi:
      return false;
    case RegexKind::kEps:
      return v.is(TreeKind::kUnit);
    case RegexKind::kSym:
      return v.is(TreeKind::kLit) && v.symbol() == r.symbol();
    case RegexKind::kStar:
      if (!v.is(TreeKind::kSeq)) return false;
      for (const ParseTree* s = &v; !s->is_nil(); s = &s->tail()) {
        if (!typecheck(s->head(), r.body())) return false;
      }
      return true;
    case RegexKind::kCat:
      return v.is(TreeKind::kPair) && typecheck(v.first(), r.left()) &&
             typecheck(v.second(), r.right());
    case RegexKind::kAlt:
      if (v.is(TreeKind::kInL)) return typecheck(v.inner(), r.left());
      if (v.is(TreeKind::kInR)) return typecheck(v.inner(), r.right());
      return false;
  }
  return false;
}

Word flatten(const ParseTree& v) {
  Word out;
  flatten_into(v, out);
  return out;
}

TreeSeq all_eps(const Regex& r) {
  TreeSeq out;
  switch (r.kind()) {
    case RegexKind::kPhi:
    case RegexKind::kSym:
      break;
    case RegexKind::kEps:
      out.push_back(ParseTree::unit());
      break;
    case RegexKind::kStar:
      out.push_back(ParseTree::nil());
      break;
    case RegexKind::kCat: {
      if (!r.nullable()) break;
      TreeSeq lefts = all_eps(r.left());
      TreeSeq rights = all_eps(r.right());
      for (const ParseTree& a : lefts) {
        for (const ParseTree& b : rights) out.push_back(ParseTree::pair(a, b));
      }
      break;
    }
    case RegexKind::kAlt:
      for (const ParseTree& a : all_eps(r.left())) out.push_back(ParseTree::inl(a));
      for (const ParseTree& b : all_eps(r.right())) out.push_back(ParseTree::inr(b));
      break;
  }
  return out;
}

ParseTree first_eps(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kEps:
      return ParseTree::unit();
    case RegexKind::kStar:
      return ParseTree::nil();
    case RegexKind::kCat:
      if (r.nullable()) return ParseTree::pair(first_eps(r.left()), first_eps(r.right()));
      break;
    case RegexKind::kAlt:
      if (r.left().nullable()) return ParseTree::inl(first_eps(r.left()));
      if (r.right().nullable()) return ParseTree::inr(first_eps(r.right()));
      break;
    default:
      break;
  }
  throw Error(ErrorKind::kShape, "no empty parse tree for " + print_regex(r));
}

std::size_t count_all_eps(const Regex& r) {
  switch (r.kind()) {
    case RegexKind::kEps:
    case RegexKind::kStar:
      return 1;
    case RegexKind::kCat:
      return sat_mul(count_all_eps(r.left()), count_all_eps(r.right()));
    case RegexKind::kAlt:
      return sat_add(count_all_eps(r.left()), count_all_eps(r.right()));
    default:
      return 0;
  }
}

int greedy_compare(const ParseTree& v1, const ParseTree& v2) {
  auto mismatch = [&]() -> int {
    throw Error(ErrorKind::kShape,
                "trees " + to_string(v1) + " and " + to_string(v2) + " are not comparable");
  };
  const ParseTree* a = &v1;
  const ParseTree* b = &v2;
  while (true) {
    TreeKind ka = a->kind();
    TreeKind kb = b->kind();
    if ((ka == TreeKind::kInL || ka == TreeKind::kInR) &&
        (kb == TreeKind::kInL || kb == TreeKind::kInR)) {
      if (ka != kb) return ka == TreeKind::kInL ? -1 : 1;
      a = &a->inner();
      b = &b->inner();
      continue;
    }
    if (ka != kb) return mismatch();
    switch (ka) {
      case TreeKind::kUnit:
        return 0;
      case TreeKind::kLit:
        if (a->symbol() != b->symbol()) return mismatch();
        return 0;
      case TreeKind::kPair: {
        int c = greedy_compare(a->first(), b->first());
        if (c != 0) return c;
        a = &a->second();
        b = &b->second();
        continue;
      }
      case TreeKind::kSeq: {
        if (a->is_nil() || b->is_nil()) {
          if (a->is_nil() && b->is_nil()) return 0;
          return a->is_nil() ? 1 : -1;
        }
        int c = greedy_compare(a->head(), b->head());
        if (c != 0) return c;
        a = &a->tail();
        b = &b->tail();
        continue;
      }
      default:
        return mismatch();
    }
  }
}

bool greedy_less(const ParseTree& v1, const ParseTree& v2) {
  return greedy_compare(v1, v2) < 0;
}

}  // namespace regamb
