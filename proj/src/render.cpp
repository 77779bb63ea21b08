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

#include "render.hpp"

#include <map>
#include <set>
#include <sstream>

#include "error.hpp"

namespace regamb {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string plural(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

ordered_json hit_to_json(const CriterionHit& h) {
  ordered_json j;
  j["kind"] = criterion_name(h.kind);
  j["state"] = h.state;
  j["symbol"] = h.symbol ? ordered_json(std::string(1, *h.symbol)) : ordered_json(nullptr);
  j["target"] = h.target ? ordered_json(*h.target) : ordered_json(nullptr);
  j["state_label"] = h.state_label;
  j["detail"] = h.detail;
  return j;
}

Criterion criterion_from(const std::string& s) {
  if (s == "A1") return Criterion::kA1;
  if (s == "A2") return Criterion::kA2;
  if (s == "A3") return Criterion::kA3;
  throw Error(ErrorKind::kInvalidArgument, "unknown criterion " + s);
}

Verdict verdict_from(const std::string& s) {
  if (s == "ambiguous") return Verdict::kAmbiguous;
  if (s == "unambiguous") return Verdict::kUnambiguous;
  if (s == "rejected-problematic") return Verdict::kRejectedProblematic;
  throw Error(ErrorKind::kInvalidArgument, "unknown verdict " + s);
}

CriterionHit hit_from_json(const json& j) {
  CriterionHit h;
  h.kind = criterion_from(j.at("kind").get<std::string>());
  h.state = j.at("state").get<StateId>();
  if (!j.at("symbol").is_null()) {
    std::string s = j.at("symbol").get<std::string>();
    if (s.size() != 1) throw Error(ErrorKind::kInvalidArgument, "symbol must be one character");
    h.symbol = s[0];
  }
  if (!j.at("target").is_null()) h.target = j.at("target").get<StateId>();
  h.state_label = j.at("state_label").get<std::string>();
  h.detail = j.at("detail").get<std::string>();
  return h;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string render_trees(const TreeSeq& trees) {
  std::string out = plural(trees.size(), "parse tree") + "\n";
  for (const ParseTree& t : trees) out += to_string(t) + "\n";
  return out;
}

std::string report_text(const AmbiguityReport& report) {
  std::ostringstream os;
  os << "regex: " << report.regex << "\n";
  os << "verdict: " << verdict_name(report.verdict) << "\n";
  if (report.problematic_subterm) {
    os << "problematic subterm: " << *report.problematic_subterm
       << " (star over a nullable expression)\n";
    return os.str();
  }
  os << "hits: " << report.hits.size() << "\n";
  for (const CriterionHit& h : report.hits) {
    os << "  " << criterion_name(h.kind) << " state " << h.state;
    if (h.symbol) os << " symbol " << *h.symbol << " -> state " << *h.target;
    os << "\n    state: " << h.state_label << "\n    detail: " << h.detail << "\n";
  }
  os << "counter-examples: " << report.counter_examples.size() << "\n";
  for (const CounterExample& ce : report.counter_examples) {
    os << "  word \"" << ce.word << "\" prefix \"" << ce.prefix << "\" ("
       << criterion_name(ce.criterion.kind) << " at state " << ce.criterion.state << ")\n";
    os << "    trees: " << ce.trees.size() << "\n";
    for (const ParseTree& t : ce.trees) os << "      " << to_string(t) << "\n";
    os << "    posix: " << to_string(ce.posix) << "\n";
    os << "    greedy: " << to_string(ce.greedy) << "\n";
    os << "    policies differ: " << (ce.policies_differ() ? "yes" : "no") << "\n";
  }
  os << "posix/greedy differences: " << report.posix_greedy_diff.size() << "\n";
  for (const PolicyDiff& d : report.posix_greedy_diff) {
    os << "  \"" << d.word << "\" posix " << to_string(d.posix) << " greedy "
       << to_string(d.greedy) << "\n";
  }
  return os.str();
}

ordered_json report_to_json(const AmbiguityReport& report) {
  ordered_json j;
  j["regex"] = report.regex;
  j["verdict"] = verdict_name(report.verdict);
  j["problematic_subterm"] =
      report.problematic_subterm ? ordered_json(*report.problematic_subterm) : ordered_json(nullptr);
  j["hits"] = ordered_json::array();
  for (const CriterionHit& h : report.hits) j["hits"].push_back(hit_to_json(h));
  j["counter_examples"] = ordered_json::array();
  for (const CounterExample& ce : report.counter_examples) {
    ordered_json c;
    c["word"] = ce.word;
    c["prefix"] = ce.prefix;
    c["trees"] = ordered_json::array();
    for (const ParseTree& t : ce.trees) c["trees"].push_back(to_string(t));
    c["posix"] = to_string(ce.posix);
    c["greedy"] = to_string(ce.greedy);
    c["criterion"] = hit_to_json(ce.criterion);
    c["policies_differ"] = ce.policies_differ();
    j["counter_examples"].push_back(std::move(c));
  }
  j["posix_greedy_diff"] = ordered_json::array();
  for (const PolicyDiff& d : report.posix_greedy_diff) {
    j["posix_greedy_diff"].push_back(
        {{"word", d.word}, {"posix", to_string(d.posix)}, {"greedy", to_string(d.greedy)}});
  }
  return j;
}

AmbiguityReport report_from_json(const json& j) {
  AmbiguityReport r;
  r.regex = j.at("regex").get<std::string>();
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  if (!j.at("problematic_subterm").is_null()) {
    r.problematic_subterm = j.at("problematic_subterm").get<std::string>();
  }
  for (const json& h : j.at("hits")) r.hits.push_back(hit_from_json(h));
  for (const json& c : j.at("counter_examples")) {
    CounterExample ce;
    ce.word = c.at("word").get<std::string>();
    ce.prefix = c.at("prefix").get<std::string>();
    for (const json& t : c.at("trees")) ce.trees.push_back(parse_tree_text(t.get<std::string>()));
    ce.posix = parse_tree_text(c.at("posix").get<std::string>());
    ce.greedy = parse_tree_text(c.at("greedy").get<std::string>());
    ce.criterion = hit_from_json(c.at("criterion"));
    r.counter_examples.push_back(std::move(ce));
  }
  for (const json& d : j.at("posix_greedy_diff")) {
    r.posix_greedy_diff.push_back({d.at("word").get<std::string>(),
                                   parse_tree_text(d.at("posix").get<std::string>()),
                                   parse_tree_text(d.at("greedy").get<std::string>())});
  }
  return r;
}

std::string render_dot(const Transducer& t, const DotOptions& options) {
  std::set<StateId> grey;
  std::map<std::pair<StateId, Symbol>, std::set<std::string>> marks;
  if (t.mode() == Mode::kPosix && !is_problematic(t.source())) {
    for (const CriterionHit& h : detect(t)) {
      if (h.kind == Criterion::kA1) {
        grey.insert(h.state);
      } else {
        marks[{h.state, *h.symbol}].insert(criterion_name(h.kind));
      }
    }
  }
  auto shown = [&](StateId q) {
    return options.show_sink || q == t.start() || !t.state(q).empty_language();
  };

  std::ostringstream os;
  os << "digraph fst {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle, fontname=\"monospace\"];\n";
  os << "  start [shape=point, label=\"\"];\n";
  os << "  start -> 0;\n";
  for (StateId q = 0; q < t.state_count(); ++q) {
    if (!shown(q)) continue;
    std::string full = print_regex(t.state(q));
    std::string label = full;
    if (label.size() > options.label_limit) label = label.substr(0, options.label_limit) + "...";
    os << "  " << q << " [label=\"" << q << ": " << dot_escape(label) << "\", tooltip=\""
       << dot_escape(full) << "\"";
    if (t.is_final(q)) os << ", shape=doublecircle";
    if (grey.count(q)) os << ", style=filled, fillcolor=grey";
    os << "];\n";
  }
  for (StateId q = 0; q < t.state_count(); ++q) {
    if (!shown(q)) continue;
    for (char x : t.alphabet()) {
      const Transition* tr = t.transition(q, x);
      if (!shown(tr->target)) continue;
      std::string label(1, x);
      auto it = marks.find({q, x});
      if (it != marks.end()) {
        std::string kinds;
        for (const std::string& k : it->second) kinds += (kinds.empty() ? "" : ",") + k;
        label += " / " + kinds;
      }
      os << "  " << q << " -> " << tr->target << " [label=\"" << label << "\", tooltip=\""
         << dot_escape(tr->output.describe()) << "\"";
      if (it != marks.end()) os << ", style=dotted";
      os << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace regamb
