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

#include "simplify.hpp"

#include <optional>
#include <unordered_map>
#include <utility>

#include "engine.hpp"
#include "error.hpp"

namespace regamb {

struct Transformer::Node {
  Kind kind;
  std::vector<Transformer> parts;  // the inner transformer of C1..C4, or chain steps
  Regex source;                    // kInject
  Symbol symbol = 0;               // kInject
};

namespace {

const char* kind_name(Transformer::Kind k) {
  switch (k) {
    case Transformer::Kind::kIdentity:
      return "id";
    case Transformer::Kind::kChain:
      return "chain";
    case Transformer::Kind::kIdemp:
      return "Idemp";
    case Transformer::Kind::kComm:
      return "Comm";
    case Transformer::Kind::kAssoc:
      return "Assoc";
    case Transformer::Kind::kAssocInv:
      return "AssocInv";
    case Transformer::Kind::kDist:
      return "Dist";
    case Transformer::Kind::kElimPhiLeft:
      return "ElimPhi1";
    case Transformer::Kind::kElimPhiRight:
      return "ElimPhi1r";
    case Transformer::Kind::kBottom:
      return "ElimPhi2";
    case Transformer::Kind::kC1:
      return "C1";
    case Transformer::Kind::kC2:
      return "C2";
    case Transformer::Kind::kC3:
      return "C3";
    case Transformer::Kind::kC4:
      return "C4";
    case Transformer::Kind::kInject:
      return "inj";
  }
  return "?";
}

[[noreturn]] void no_fit(Transformer::Kind k, const ParseTree& v) {
  throw Error(ErrorKind::kShape,
              std::string(kind_name(k)) + " transformer cannot take " + to_string(v));
}


// Transformers with exactly one output tree.
ParseTree single(Transformer::Kind k, const ParseTree& v) {
  using K = Transformer::Kind;
  switch (k) {
    case K::kComm:
      if (v.is(TreeKind::kInL)) return ParseTree::inr(v.inner());
      if (v.is(TreeKind::kInR)) return ParseTree::inl(v.inner());
      break;
    case K::kAssoc:
      // a+(b+c) back to (a+b)+c
      if (v.is(TreeKind::kInL)) return ParseTree::inl(ParseTree::inl(v.inner()));
      if (v.is(TreeKind::kInR) && v.inner().is(TreeKind::kInL)) {
        return ParseTree::inl(ParseTree::inr(v.inner().inner()));
      }
      if (v.is(TreeKind::kInR) && v.inner().is(TreeKind::kInR)) return ParseTree::inr(v.inner().inner());
      break;
    case K::kAssocInv:
      // (a+b)+c back to a+(b+c)
      if (v.is(TreeKind::kInR)) return ParseTree::inr(ParseTree::inr(v.inner()));
      if (v.is(TreeKind::kInL) && v.inner().is(TreeKind::kInL)) return ParseTree::inl(v.inner().inner());
      if (v.is(TreeKind::kInL) && v.inner().is(TreeKind::kInR)) {
        return ParseTree::inr(ParseTree::inl(v.inner().inner()));
      }
      break;
    case K::kDist:
      // r.t + s.t back to (r+s).t
      if ((v.is(TreeKind::kInL) || v.is(TreeKind::kInR)) && v.inner().is(TreeKind::kPair)) {
        const ParseTree& p = v.inner();
        ParseTree head = v.is(TreeKind::kInL) ? ParseTree::inl(p.first()) : ParseTree::inr(p.first());
        return ParseTree::pair(head, p.second());
      }
      break;
    case K::kElimPhiLeft:
      return ParseTree::inr(v);
    case K::kElimPhiRight:
      return ParseTree::inl(v);
    default:
      break;
  }
  no_fit(k, v);
}

}  // namespace

Transformer::Transformer() : Transformer(identity()) {}

Transformer Transformer::identity() {
  static const auto n = std::make_shared<const Node>(Node{Kind::kIdentity, {}, Regex(), 0});
  return Transformer(n);
}

#define REGAMB_PRIMITIVE(fn, k)                                                     \
  Transformer Transformer::fn() {                                                   \
    static const auto n = std::make_shared<const Node>(Node{Kind::k, {}, Regex(), 0}); \
    return Transformer(n);                                                          \
  }
REGAMB_PRIMITIVE(idemp, kIdemp)
REGAMB_PRIMITIVE(comm, kComm)
REGAMB_PRIMITIVE(assoc, kAssoc)
REGAMB_PRIMITIVE(assoc_inv, kAssocInv)
REGAMB_PRIMITIVE(dist, kDist)
REGAMB_PRIMITIVE(elim_phi_left, kElimPhiLeft)
REGAMB_PRIMITIVE(elim_phi_right, kElimPhiRight)
REGAMB_PRIMITIVE(bottom, kBottom)
#undef REGAMB_PRIMITIVE

Transformer Transformer::c1(const Transformer& t) {
  if (t.is_identity()) return t;
  return Transformer(std::make_shared<const Node>(Node{Kind::kC1, {t}, Regex(), 0}));
}
Transformer Transformer::c2(const Transformer& t) {
  if (t.is_identity()) return t;
  return Transformer(std::make_shared<const Node>(Node{Kind::kC2, {t}, Regex(), 0}));
}
Transformer Transformer::c3(const Transformer& t) {
  if (t.is_identity()) return t;
  return Transformer(std::make_shared<const Node>(Node{Kind::kC3, {t}, Regex(), 0}));
}
Transformer Transformer::c4(const Transformer& t) {
  if (t.is_identity()) return t;
  return Transformer(std::make_shared<const Node>(Node{Kind::kC4, {t}, Regex(), 0}));
}

Transformer Transformer::inject(const Regex& source, Symbol x) {
  return Transformer(std::make_shared<const Node>(Node{Kind::kInject, {}, source, x}));
}

Transformer Transformer::chain(const std::vector<Transformer>& steps) {
  std::vector<Transformer> flat;
  for (const Transformer& t : steps) {
    if (t.kind() == Kind::kChain) {
      flat.insert(flat.end(), t.node_->parts.begin(), t.node_->parts.end());
    } else if (!t.is_identity()) {
      flat.push_back(t);
    }
  }
  if (flat.empty()) return identity();
  if (flat.size() == 1) return flat.front();
  return Transformer(std::make_shared<const Node>(Node{Kind::kChain, std::move(flat), Regex(), 0}));
}

Transformer::Kind Transformer::kind() const noexcept { return node_->kind; }
const Transformer& Transformer::inner() const { return node_->parts.front(); }
const std::vector<Transformer>& Transformer::steps() const { return node_->parts; }

namespace {

void apply_into(const Transformer& t, const ParseTree& v, TreeSeq& out);

void apply_chain(const std::vector<Transformer>& steps, TreeSeq cur, TreeSeq& out) {
  for (std::size_t i = steps.size(); i-- > 0;) {
    TreeSeq next;
    for (const ParseTree& u : cur) apply_into(steps[i], u, next);
    cur = std::move(next);
  }
  for (const ParseTree& u : cur) out.push_back(u);
}

void apply_into(const Transformer& t, const ParseTree& v, TreeSeq& out) {
  using K = Transformer::Kind;
  K k = t.kind();
  switch (k) {
    case K::kIdentity:
      out.push_back(v);
      return;
    case K::kChain:
      apply_chain(t.steps(), TreeSeq{v}, out);
      return;
    case K::kIdemp:
      out.push_back(ParseTree::inl(v));
      out.push_back(ParseTree::inr(v));
      return;
    case K::kComm:
    case K::kAssoc:
    case K::kAssocInv:
    case K::kDist:
    case K::kElimPhiLeft:
    case K::kElimPhiRight:
      out.push_back(single(k, v));
      return;
    case K::kBottom:
      throw Error(ErrorKind::kUndefined, "the # . r transformer was applied to " + to_string(v));
    case K::kC1:
      if (!v.is(TreeKind::kPair)) no_fit(k, v);
      for (const ParseTree& u : t.inner().apply(v.second())) {
        out.push_back(ParseTree::pair(v.first(), u));
      }
      return;
    case K::kC2:
      if (!v.is(TreeKind::kPair)) no_fit(k, v);
      for (const ParseTree& u : t.inner().apply(v.first())) {
        out.push_back(ParseTree::pair(u, v.second()));
      }
      return;
    case K::kC3:
      if (v.is(TreeKind::kInL)) {
        out.push_back(v);
      } else if (v.is(TreeKind::kInR)) {
        for (const ParseTree& u : t.inner().apply(v.inner())) out.push_back(ParseTree::inr(u));
      } else {
        no_fit(k, v);
      }
      return;
    case K::kC4:
      if (v.is(TreeKind::kInR)) {
        out.push_back(v);
      } else if (v.is(TreeKind::kInL)) {
        for (const ParseTree& u : t.inner().apply(v.inner())) out.push_back(ParseTree::inl(u));
      } else {
        no_fit(k, v);
      }
      return;
    case K::kInject:
      for (const ParseTree& u : t.apply(v)) out.push_back(u);
      return;
  }
}

}  // namespace

TreeSeq Transformer::apply(const ParseTree& v) const {
  TreeSeq out;
  if (kind() == Kind::kInject) {
    inject_into(node_->source, node_->symbol, v, out);
  } else {
    apply_into(*this, v, out);
  }
  return out;
}

TreeSeq Transformer::apply(const TreeSeq& vs) const {
  TreeSeq out;
  if (kind() == Kind::kChain) {
    apply_chain(steps(), vs, out);
  } else {
    for (const ParseTree& v : vs) {
      for (const ParseTree& u : apply(v)) out.push_back(u);
    }
  }
  return out;
}

ParseTree Transformer::apply_first(const ParseTree& v) const {
  switch (kind()) {
    case Kind::kIdentity:
      return v;
    case Kind::kChain: {
      ParseTree cur = v;
      const std::vector<Transformer>& s = steps();
      for (std::size_t i = s.size(); i-- > 0;) cur = s[i].apply_first(cur);
      return cur;
    }
    case Kind::kIdemp:
      return ParseTree::inl(v);
    case Kind::kComm:
    case Kind::kAssoc:
    case Kind::kAssocInv:
    case Kind::kDist:
    case Kind::kElimPhiLeft:
    case Kind::kElimPhiRight:
      return single(kind(), v);
    case Kind::kInject:
      return inject_first(node_->source, node_->symbol, v);
    case Kind::kC1:
      if (!v.is(TreeKind::kPair)) no_fit(kind(), v);
      return ParseTree::pair(v.first(), inner().apply_first(v.second()));
    case Kind::kC2:
      if (!v.is(TreeKind::kPair)) no_fit(kind(), v);
      return ParseTree::pair(inner().apply_first(v.first()), v.second());
    case Kind::kC3:
      if (v.is(TreeKind::kInR)) return ParseTree::inr(inner().apply_first(v.inner()));
      if (!v.is(TreeKind::kInL)) no_fit(kind(), v);
      return v;
    case Kind::kC4:
      if (v.is(TreeKind::kInL)) return ParseTree::inl(inner().apply_first(v.inner()));
      if (!v.is(TreeKind::kInR)) no_fit(kind(), v);
      return v;
    default: {
      TreeSeq out = apply(v);
      if (out.empty()) no_fit(kind(), v);
      return out.front();
    }
  }
}

std::string Transformer::describe() const {
  switch (kind()) {
    case Kind::kChain: {
      std::string out;
      for (const Transformer& t : steps()) {
        if (!out.empty()) out += " . ";
        out += t.describe();
      }
      return out;
    }
    case Kind::kC1:
    case Kind::kC2:
    case Kind::kC3:
    case Kind::kC4:
      return std::string(kind_name(kind())) + "(" + inner().describe() + ")";
    case Kind::kInject:
      return std::string("inj[") + node_->symbol + "]";
    default:
      return kind_name(kind());
  }
}

bool operator==(const Transformer& a, const Transformer& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.node_->parts == b.node_->parts &&
         a.node_->source == b.node_->source && a.node_->symbol == b.node_->symbol;
}

TreeSeq apply_transformer(const Transformer& t, const ParseTree& v) { return t.apply(v); }

namespace {

enum class Dir : std::uint8_t { kCatLeft, kCatRight, kAltLeft, kAltRight };
using Path = std::vector<Dir>;

struct Options {
  bool full_contexts;
  bool eliminate_phi;
  bool distribute;
};

const Regex& child(const Regex& r, Dir d) {
  return (d == Dir::kCatLeft || d == Dir::kAltLeft) ? r.left() : r.right();
}

Regex subterm(const Regex& r, const Path& p) {
  Regex cur = r;
  for (Dir d : p) cur = child(cur, d);
  return cur;
}

Regex replace(const Regex& r, const Path& p, std::size_t i, const Regex& sub) {
  if (i == p.size()) return sub;
  switch (p[i]) {
    case Dir::kCatLeft:
      return Regex::cat(replace(r.left(), p, i + 1, sub), r.right());
    case Dir::kCatRight:
      return Regex::cat(r.left(), replace(r.right(), p, i + 1, sub));
    case Dir::kAltLeft:
      return Regex::alt(replace(r.left(), p, i + 1, sub), r.right());
    case Dir::kAltRight:
      return Regex::alt(r.left(), replace(r.right(), p, i + 1, sub));
  }
  return r;
}

Transformer wrap(const Path& p, Transformer t) {
  for (std::size_t i = p.size(); i-- > 0;) {
    switch (p[i]) {
      case Dir::kCatLeft:
        t = Transformer::c2(t);
        break;
      case Dir::kCatRight:
        t = Transformer::c1(t);
        break;
      case Dir::kAltLeft:
        t = Transformer::c4(t);
        break;
      case Dir::kAltRight:
        t = Transformer::c3(t);
        break;
    }
  }
  return t;
}

Path extend(Path p, Dir d, std::size_t n = 1) {
  p.insert(p.end(), n, d);
  return p;
}

// The alternatives of a right-nested chain.
std::vector<Regex> chain_elements(const Regex& r) {
  std::vector<Regex> out;
  Regex cur = r;
  while (cur.is(RegexKind::kAlt)) {
    out.push_back(cur.left());
    cur = cur.right();
  }
  out.push_back(cur);
  return out;
}

class Rewriter {
 public:
  Rewriter(const Regex& r, Options opt) : cur_(r), opt_(opt) {}

  RewriteResult run() {
    bool changed = true;
    while (changed) {
      changed = false;
      if (opt_.eliminate_phi || opt_.distribute) {
        while (elim_step()) changed = true;
      }
      while (assoc_step()) changed = true;
      while (dedupe_step()) changed = true;
    }
    result_.target = cur_;
    result_.back = Transformer::chain(backs_);
    return std::move(result_);
  }

 private:
  void record(const Path& p, const Regex& sub, const Transformer& local) {
    cur_ = replace(cur_, p, 0, sub);
    backs_.push_back(wrap(p, local));
  }

  // First position in preorder, over the permitted contexts, where pred holds.
  template <typename Pred>
  std::optional<Path> find(Pred&& pred) {
    Path p;
    if (search(cur_, p, pred)) return p;
    return std::nullopt;
  }

  template <typename Pred>
  bool search(const Regex& r, Path& p, Pred& pred) {
    if (pred(r)) return true;
    if (r.is(RegexKind::kCat)) {
      p.push_back(Dir::kCatLeft);
      if (search(r.left(), p, pred)) return true;
      p.back() = Dir::kCatRight;
      if (opt_.full_contexts && search(r.right(), p, pred)) return true;
      p.pop_back();
    } else if (r.is(RegexKind::kAlt)) {
      p.push_back(Dir::kAltLeft);
      if (search(r.left(), p, pred)) return true;
      p.back() = Dir::kAltRight;
      if (search(r.right(), p, pred)) return true;
      p.pop_back();
    }
    return false;
  }

  bool elim_step() {
    auto redex = [this](const Regex& r) {
      if (r.is(RegexKind::kCat)) {
        return (opt_.distribute && r.left().is(RegexKind::kAlt)) ||
               (opt_.eliminate_phi && r.left().is(RegexKind::kPhi));
      }
      if (r.is(RegexKind::kAlt)) {
        return opt_.eliminate_phi &&
               (r.left().is(RegexKind::kPhi) || r.right().is(RegexKind::kPhi));
      }
      return false;
    };
    std::optional<Path> p = find(redex);
    if (!p) return false;
    Regex r = subterm(cur_, *p);
    if (r.is(RegexKind::kCat) && r.left().is(RegexKind::kPhi)) {
      record(*p, Regex::phi(), Transformer::bottom());
      result_.used_elim = true;
    } else if (r.is(RegexKind::kCat)) {
      const Regex& s = r.left();
      record(*p, Regex::alt(Regex::cat(s.left(), r.right()), Regex::cat(s.right(), r.right())),
             Transformer::dist());
    } else if (r.left().is(RegexKind::kPhi)) {
      record(*p, r.right(), Transformer::elim_phi_left());
      result_.used_elim = true;
    } else {
      record(*p, r.left(), Transformer::elim_phi_right());
      result_.used_elim = true;
    }
    return true;
  }

  bool assoc_step() {
    auto redex = [](const Regex& r) {
      return r.is(RegexKind::kAlt) && r.left().is(RegexKind::kAlt);
    };
    std::optional<Path> p = find(redex);
    if (!p) return false;
    Regex r = subterm(cur_, *p);
    record(*p, Regex::alt(r.left().left(), Regex::alt(r.left().right(), r.right())),
           Transformer::assoc());
    return true;
  }

  bool dedupe_step() {
    std::size_t first = 0, dup = 0;
    auto redex = [&first, &dup](const Regex& r) {
      if (!r.is(RegexKind::kAlt)) return false;
      std::vector<Regex> elems = chain_elements(r);
      std::unordered_map<Regex, std::size_t, RegexHash> seen;
      for (std::size_t j = 0; j < elems.size(); ++j) {
        auto [it, fresh] = seen.emplace(elems[j], j);
        if (!fresh) {
          first = it->second;
          dup = j;
          return true;
        }
      }
      return false;
    };
    std::optional<Path> p = find(redex);
    if (!p) return false;
    remove_duplicate(*p, first, dup);
    return true;
  }

  bool live(const Path& p, const Regex& element) const {
    Regex cur = cur_;
    for (Dir d : p) {
      if (cur.empty_language()) return false;
      cur = child(cur, d);
    }
    return !cur.empty_language() && !element.empty_language();
  }

  // Moves alternative j next to its earlier copy i by adjacent swaps, then
  // merges the two with Idemp.
  void remove_duplicate(const Path& top, std::size_t i, std::size_t j) {
    std::vector<Regex> elems = chain_elements(subterm(cur_, top));
    const std::size_t m = elems.size();
    if (live(top, elems[i])) result_.live_idemp.push_back(elems[i]);
    result_.used_idemp = true;
    for (std::size_t k = j; k > i + 1; --k) {
      Path at = extend(top, Dir::kAltRight, k - 1);
      const Regex a = elems[k - 1];
      const Regex b = elems[k];
      if (k == m - 1) {
        record(at, Regex::alt(b, a), Transformer::comm());
      } else {
        Regex rest = subterm(cur_, extend(at, Dir::kAltRight, 2));
        record(at, Regex::alt(Regex::alt(a, b), rest), Transformer::assoc_inv());
        record(extend(at, Dir::kAltLeft), Regex::alt(b, a), Transformer::comm());
        record(at, Regex::alt(b, Regex::alt(a, rest)), Transformer::assoc());
      }
      std::swap(elems[k - 1], elems[k]);
    }
    Path at = extend(top, Dir::kAltRight, i);
    if (i + 1 == m - 1) {
      record(at, elems[i], Transformer::idemp());
    } else {
      Regex rest = subterm(cur_, extend(at, Dir::kAltRight, 2));
      record(at, Regex::alt(Regex::alt(elems[i], elems[i + 1]), rest), Transformer::assoc_inv());
      record(extend(at, Dir::kAltLeft), elems[i], Transformer::idemp());
    }
  }

  Regex cur_;
  Options opt_;
  std::vector<Transformer> backs_;
  RewriteResult result_;
};

}  // namespace

RewriteResult canonicalize(const Regex& r) {
  return Rewriter(r, Options{true, false, false}).run();
}

RewriteResult posix_normalize(const Regex& r) {
  return Rewriter(r, Options{true, true, false}).run();
}

RewriteResult pd_normalize(const Regex& r) {
  return Rewriter(r, Options{false, true, true}).run();
}

}  // namespace regamb
