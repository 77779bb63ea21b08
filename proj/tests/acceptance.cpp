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


// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// non-zero if any criterion fails. argv[1] is the path of the regamb CLI.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ambiguity.hpp"
#include "cli_run.hpp"
#include "deriv.hpp"
#include "engine.hpp"
#include "fst.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "simplify.hpp"
#include "support.hpp"

namespace regamb {
namespace {

using testing::CliResult;
using testing::re;

constexpr std::size_t kCompleteLen = 5;
constexpr std::size_t kWitnessLen = 6;

std::string cli_path;

CliResult cli(const std::vector<std::string>& args) { return testing::run_cli(cli_path, args); }

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

// Collects failure notes; the first few are printed under the verdict line.
struct Check {
  std::vector<std::string> notes;
  std::size_t failures = 0;
  void expect(bool ok, const std::string& note) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(note);
  }
  bool ok() const { return failures == 0; }
};

bool report(int id, const std::string& title, const Check& c, const std::string& info = "") {
  std::printf("%s %d: %s%s%s\n", c.ok() ? "PASS" : "FAIL", id, title.c_str(),
              info.empty() ? "" : " | ", info.c_str());
  for (const std::string& n : c.notes) std::printf("    %s\n", n.c_str());
  if (c.failures > c.notes.size()) {
    std::printf("    ... %zu more\n", c.failures - c.notes.size());
  }
  std::fflush(stdout);
  return c.ok();
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool criterion1() {
  Check c;
  CliResult r = cli({"trees", "(xy|x|y)*", "xy"});
  std::vector<std::string> got = testing::lines(r.out);
  c.expect(r.status == 0, "exit status " + std::to_string(r.status));
  c.expect(got.size() == 3 && got[0] == "2 parse trees", "output: " + r.out);
  if (got.size() == 3) {
    std::vector<std::string> trees{got[1], got[2]};
    std::vector<std::string> sorted = trees;
    std::sort(sorted.begin(), sorted.end());
    c.expect(sorted == testing::sorted_strings(oracle::enumerate(re("(xy|x|y)*"), "xy")),
             "trees differ from the oracle");
    c.expect(trees[0] == "[L (x,y)]", "head is " + trees[0]);
    c.expect(trees[0] == to_string(*parse_first(build(re("(xy|x|y)*"), Mode::kPosix), "xy")),
             "head is not the POSIX tree");
  }
  c.expect(r.seconds < 1.0, "runtime " + fixed(r.seconds) + " s");
  return report(1, "trees of (xy|x|y)* on xy", c, "runtime " + fixed(r.seconds) + " s");
}

bool criterion2() {
  Check c;
  Regex d1 = deriv(re("(x|y)*"), 'x');
  Regex d2 = deriv(d1, 'y');
  c.expect(print_regex(d1) == "(~|#)(x|y)*", "first derivative " + print_regex(d1));
  c.expect(print_regex(d2) == "(#|#)(x|y)*|(#|~)(x|y)*", "second derivative " + print_regex(d2));
  c.expect(to_string(all_eps(d2)) == "[R (R (),[])]", "all_eps " + to_string(all_eps(d2)));
  return report(2, "derivative chain of (x|y)*", c);
}

bool criterion3() {
  Check c;
  CliResult r = cli({"--format", "json", "ambig", "(x|xy)(y|~)"});
  c.expect(r.status == 1, "ambig exit status " + std::to_string(r.status));
  try {
    nlohmann::json j = nlohmann::json::parse(r.out);
    c.expect(j["verdict"] == "ambiguous", "verdict " + j["verdict"].dump());
    bool a1 = false;
    for (const auto& h : j["hits"]) a1 |= h["kind"] == "A1";
    c.expect(a1, "no A1 hit");
    bool found = false;
    for (const auto& ce : j["counter_examples"]) {
      found |= ce["word"] == "xy" && ce["trees"].size() == 2;
    }
    c.expect(found, "no counter-example xy with 2 trees");
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad json: ") + e.what());
  }
  CliResult d = cli({"dot", "(x|xy)(y|~)"});
  c.expect(d.status == 0, "dot exit status " + std::to_string(d.status));
  std::size_t grey = 0, grey_final = 0, dotted = 0;
  for (const std::string& line : testing::lines(d.out)) {
    bool filled = line.find("fillcolor=grey") != std::string::npos;
    grey += filled;
    grey_final += filled && line.find("doublecircle") != std::string::npos;
    dotted += line.find("style=dotted") != std::string::npos;
  }
  c.expect(grey == 1 && grey_final == 1,
           "grey nodes " + std::to_string(grey) + ", grey final " + std::to_string(grey_final));
  c.expect(dotted == 0, "dotted edges " + std::to_string(dotted));
  return report(3, "ambiguity of (x|xy)(y|~) and its DOT graph", c);
}

bool criterion4() {
  Check c;
  const std::string r = "(xx*|yx|xyx)*y";
  CliResult a = cli({"--format", "json", "ambig", r});
  double worst = a.seconds;
  c.expect(a.status == 1, "ambig exit status " + std::to_string(a.status));
  try {
    nlohmann::json j = nlohmann::json::parse(a.out);
    c.expect(j["verdict"] == "ambiguous", "verdict " + j["verdict"].dump());
    std::size_t a1 = 0, a2 = 0, a3 = 0;
    for (const auto& h : j["hits"]) {
      a1 += h["kind"] == "A1";
      a2 += h["kind"] == "A2";
      a3 += h["kind"] == "A3";
    }
    c.expect(a2 >= 1 && a3 >= 1 && a1 == 0,
             "hits A1=" + std::to_string(a1) + " A2=" + std::to_string(a2) +
                 " A3=" + std::to_string(a3));
    bool found = false;
    for (const auto& ce : j["counter_examples"]) {
      found |= ce["word"] == "xyxy" && ce["prefix"] == "xy" && ce["trees"].size() >= 2;
    }
    c.expect(found, "no counter-example xyxy with prefix xy");
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad json: ") + e.what());
  }
  CliResult p = cli({"match", r, "xyxy"});
  CliResult g = cli({"--policy", "greedy", "match", r, "xyxy"});
  worst = std::max({worst, p.seconds, g.seconds});
  std::string posix = testing::lines(p.out).empty() ? "" : testing::lines(p.out).front();
  std::string greedy = testing::lines(g.out).empty() ? "" : testing::lines(g.out).front();
  // The star component of a tree is a list; this is the well-typed form of
  // the POSIX tree (R (R (x,(y,x))),y).
  c.expect(posix == "([R (R (x,(y,x)))],y)", "POSIX tree " + posix);
  c.expect(greedy != posix, "greedy tree equals the POSIX tree");
  try {
    c.expect(flatten(parse_tree_text(greedy)) == "xyxy", "greedy tree flattens wrongly");
    c.expect(typecheck(parse_tree_text(greedy), re(r.c_str())), "greedy tree is ill-typed");
    c.expect(typecheck(parse_tree_text(posix), re(r.c_str())), "POSIX tree is ill-typed");
  } catch (const std::exception& e) {
    c.expect(false, std::string("bad tree: ") + e.what());
  }
  c.expect(worst < 1.0, "runtime " + fixed(worst) + " s");
  return report(4, "ambiguity of (xx*|yx|xyx)*y and its first trees", c,
                "POSIX " + posix + ", greedy " + greedy + ", runtime " + fixed(worst) + " s");
}

struct CorpusRun {
  std::vector<Regex> exprs;
  std::vector<Word> words;
  double seconds = 0;
};

bool criterion5(const CorpusRun& run, double& elapsed) {
  Check c;
  auto begin = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (const Regex& r : run.exprs) {
    Transducer t = build(r, Mode::kPosix);
    for (const Word& w : run.words) {
      ++pairs;
      TreeSeq expected = oracle::enumerate(r, w);
      std::string where = print_regex(r) + " on \"" + w + "\"";
      c.expect(testing::same_set(all_parse(r, w), expected), "all_parse differs: " + where);
      c.expect(testing::same_set(parse_all(t, w), expected), "parse_all differs: " + where);
    }
  }
  elapsed = seconds_since(begin);
  return report(5, "oracle, all_parse and POSIX transducer agree", c,
                std::to_string(run.exprs.size()) + " expressions, " + std::to_string(pairs) +
                    " (r,w) pairs, " + fixed(elapsed) + " s");
}

bool criterion6(const CorpusRun& run) {
  Check c;
  std::size_t trees = 0;
  for (const Regex& r : run.exprs) {
    Transducer posix = build(r, Mode::kPosix);
    Transducer greedy = build(r, Mode::kGreedy);
    for (const Word& w : run.words) {
      std::string where = print_regex(r) + " on \"" + w + "\"";
      std::vector<ParseTree> produced;
      for (const TreeSeq& ts : {oracle::enumerate(r, w), all_parse(r, w), parse_all(posix, w),
                                parse_all(greedy, w)}) {
        produced.insert(produced.end(), ts.begin(), ts.end());
      }
      if (auto v = parse_first(posix, w)) produced.push_back(*v);
      if (auto v = parse_first(greedy, w)) produced.push_back(*v);
      for (const ParseTree& v : produced) {
        ++trees;
        c.expect(typecheck(v, r), "ill-typed " + to_string(v) + ": " + where);
        c.expect(flatten(v) == w, "wrong flattening " + to_string(v) + ": " + where);
      }
    }
  }
  return report(6, "every produced tree typechecks and flattens to its word", c,
                std::to_string(trees) + " trees checked");
}

bool criterion7(const CorpusRun& run) {
  Check c;
  std::vector<Word> words = oracle::all_words("xy", kWitnessLen);
  std::size_t ambiguous = 0, excluded = 0;
  for (const Regex& r : run.exprs) {
    AmbiguityReport rep = diff_policies(r);
    bool verdict = rep.verdict == Verdict::kAmbiguous;
    std::optional<Word> witness;
    for (const Word& w : words) {
      if (oracle::enumerate(r, w).size() >= 2) {
        witness = w;
        break;
      }
    }
    ambiguous += verdict;
    if (verdict && !witness) {
      bool beyond = !rep.counter_examples.empty() &&
                    rep.counter_examples.front().word.size() > kWitnessLen;
      if (beyond) {
        ++excluded;
        std::printf("    excluded: %s, shortest counter-example \"%s\"\n",
                    print_regex(r).c_str(), rep.counter_examples.front().word.c_str());
        continue;
      }
    }
    c.expect(verdict == witness.has_value(),
             print_regex(r) + ": verdict " + verdict_name(rep.verdict) + ", oracle witness " +
                 (witness ? "\"" + *witness + "\"" : std::string("none")));
  }
  return report(7, "criteria verdict matches the oracle witness search", c,
                std::to_string(ambiguous) + " ambiguous, " +
                    std::to_string(run.exprs.size() - ambiguous) + " unambiguous, " +
                    std::to_string(excluded) + " excluded");
}

bool criterion8(const CorpusRun& run) {
  Check c;
  std::size_t checked = 0;
  for (const Regex& r : run.exprs) {
    Transducer t = build(r, Mode::kGreedy);
    for (const Word& w : run.words) {
      TreeSeq all = oracle::enumerate(r, w);
      std::optional<ParseTree> first = parse_first(t, w);
      if (all.empty()) {
        c.expect(!first, print_regex(r) + " on \"" + w + "\": tree for a non-match");
        continue;
      }
      ++checked;
      ParseTree best = *std::min_element(all.begin(), all.end(), greedy_less);
      c.expect(first && *first == best,
               print_regex(r) + " on \"" + w + "\": got " + (first ? to_string(*first) : "none") +
                   ", expected " + to_string(best));
    }
  }
  return report(8, "greedy transducer returns the greedy-least tree", c,
                std::to_string(checked) + " matching pairs");
}

bool criterion9(const CorpusRun& run) {
  Check c;
  std::size_t checked = 0;
  for (const Regex& r : run.exprs) {
    for (Symbol x : std::string("xy")) {
      ++checked;
      Regex got = pd_normalize(deriv(r, x)).target;
      Regex want = sum_of(pderiv(r, x));
      c.expect(got == want, print_regex(r) + " by " + x + ": " + print_regex(got) + " vs " +
                                print_regex(want));
    }
  }
  return report(9, "normalized derivatives equal summed partial derivatives", c,
                std::to_string(checked) + " (r,x) pairs");
}

// Median of 11 timed runs after one warm-up run.
double median_time(const Transducer& t, const Word& w) {
  if (!parse_first(t, w)) return -1;
  std::vector<double> times;
  for (int i = 0; i < 11; ++i) {
    auto begin = std::chrono::steady_clock::now();
    std::optional<ParseTree> v = parse_first(t, w);
    times.push_back(seconds_since(begin));
    if (!v) return -1;
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

bool criterion10() {
  Check c;
  Transducer t = build(re("(x|y)*"), Mode::kPosix);
  std::vector<double> times;
  for (std::size_t n : {1000, 10000, 100000}) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w += i % 3 == 0 ? 'y' : 'x';
    times.push_back(median_time(t, w));
    c.expect(times.back() >= 0, "no match on length " + std::to_string(n));
  }
  c.expect(times[2] < 100 * times[0],
           "t(1e5) = " + fixed(times[2]) + " s, t(1e3) = " + fixed(times[0]) + " s");
  return report(10, "parse_first on (x|y)* scales linearly", c,
                "t(1e3)=" + fixed(times[0]) + " s, t(1e4)=" + fixed(times[1]) +
                    " s, t(1e5)=" + fixed(times[2]) + " s, ns/symbol " +
                    fixed(times[0] * 1e6) + " " + fixed(times[1] * 1e5) + " " +
                    fixed(times[2] * 1e4) + ", ratio " + fixed(times[2] / times[0]));
}

bool criterion11() {
  Check c;
  CliResult r = cli({"ambig", "~*"});
  c.expect(r.status == 2, "exit status " + std::to_string(r.status));
  c.expect(r.err.find("rejected-problematic") != std::string::npos, "stderr: " + r.err);
  c.expect(r.err.find("~*") != std::string::npos, "subterm not named: " + r.err);
  c.expect(r.out.find("verdict: rejected-problematic") != std::string::npos, "stdout: " + r.out);
  return report(11, "~* is rejected as problematic", c);
}

}  // namespace
}  // namespace regamb

int main(int argc, char** argv) {
  using namespace regamb;
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance PATH_TO_REGAMB_CLI\n");
    return 2;
  }
  cli_path = argv[1];

  CorpusRun run;
  run.exprs = testing::corpus(500);
  run.words = oracle::all_words("xy", kCompleteLen);

  auto suite_begin = std::chrono::steady_clock::now();
  std::vector<bool> results;
  results.push_back(criterion1());
  results.push_back(criterion2());
  results.push_back(criterion3());
  results.push_back(criterion4());
  double corpus_seconds = 0;
  results.push_back(criterion5(run, corpus_seconds));
  results.push_back(criterion6(run));
  results.push_back(criterion7(run));
  results.push_back(criterion8(run));
  results.push_back(criterion9(run));
  results.push_back(criterion10());
  results.push_back(criterion11());
  double total = seconds_since(suite_begin);

  std::size_t passed = std::count(results.begin(), results.end(), true);
  std::printf("%zu/%zu criteria passed in %.1f s\n", passed, results.size(), total);
  if (total >= 300) std::printf("FAIL: suite exceeded 5 minutes\n");
  return passed == results.size() && total < 300 ? 0 : 1;
}
