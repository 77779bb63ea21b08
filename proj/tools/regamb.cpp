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

// regamb: parse trees, matching and ambiguity diagnosis for regular
// expressions.
//
//   regamb trees REGEX WORD
//   regamb match REGEX WORD [--policy posix|greedy]
//   regamb ambig REGEX [--format text|json]
//   regamb dot REGEX [--policy posix|greedy] [--show-sink]
//   regamb oracle REGEX WORD
//
// Exit status: 0 success or unambiguous, 1 no match or ambiguous, 2 error.

#include <cstdio>
#include <map>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "regamb/regamb.h"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;
constexpr size_t kOracleWordLimit = 12;

struct Options {
  std::string regex;
  std::string word;
  regamb_policy policy = REGAMB_POSIX;
  regamb_format format = REGAMB_TEXT;
  size_t max_states = 10000;
  bool show_sink = false;
};

int fail(regamb_status s) {
  std::fprintf(stderr, "regamb: %s: %s\n", regamb_status_name(s), regamb_last_error());
  return kError;
}

struct RegexDeleter {
  void operator()(regamb_regex* r) const { regamb_regex_free(r); }
};
struct FstDeleter {
  void operator()(regamb_fst* t) const { regamb_fst_free(t); }
};
struct ReportDeleter {
  void operator()(regamb_report* r) const { regamb_report_free(r); }
};
struct StringsDeleter {
  void operator()(regamb_strings* s) const { regamb_strings_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { regamb_string_free(s); }
};

using RegexPtr = std::unique_ptr<regamb_regex, RegexDeleter>;
using StringsPtr = std::unique_ptr<regamb_strings, StringsDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

regamb_status parse(const std::string& text, RegexPtr& out) {
  regamb_regex* r = nullptr;
  regamb_status s = regamb_regex_parse(text.c_str(), &r);
  out.reset(r);
  return s;
}

int print_trees(regamb_strings* raw) {
  StringsPtr trees(raw);
  size_t n = regamb_strings_count(trees.get());
  std::printf("%zu parse tree%s\n", n, n == 1 ? "" : "s");
  for (size_t i = 0; i < n; ++i) std::printf("%s\n", regamb_strings_at(trees.get(), i));
  return n ? kOk : kNegative;
}

int cmd_trees(const Options& o) {
  RegexPtr r;
  if (regamb_status s = parse(o.regex, r)) return fail(s);
  char* sub = nullptr;
  if (regamb_status s = regamb_regex_problematic_subterm(r.get(), &sub)) return fail(s);
  StringPtr offending(sub);
  if (offending) {
    std::fprintf(stderr,
                 "warning: %s is a star over a nullable expression; the tree list may be "
                 "incomplete\n",
                 offending.get());
  }
  regamb_strings* trees = nullptr;
  if (regamb_status s = regamb_all_parse(r.get(), o.word.c_str(), &trees)) return fail(s);
  return print_trees(trees);
}

int cmd_match(const Options& o) {
  RegexPtr r;
  if (regamb_status s = parse(o.regex, r)) return fail(s);
  regamb_fst* raw = nullptr;
  if (regamb_status s = regamb_fst_build(r.get(), o.policy, o.max_states, &raw)) return fail(s);
  std::unique_ptr<regamb_fst, FstDeleter> t(raw);
  char* tree = nullptr;
  if (regamb_status s = regamb_fst_parse_first(t.get(), o.word.c_str(), &tree)) return fail(s);
  StringPtr first(tree);
  if (!first) {
    std::printf("no match\n");
    return kNegative;
  }
  std::printf("%s\n", first.get());
  return kOk;
}

int cmd_ambig(const Options& o) {
  RegexPtr r;
  if (regamb_status s = parse(o.regex, r)) return fail(s);
  regamb_report* raw = nullptr;
  if (regamb_status s = regamb_analyze(r.get(), o.max_states, &raw)) return fail(s);
  std::unique_ptr<regamb_report, ReportDeleter> report(raw);
  char* text = nullptr;
  if (regamb_status s = regamb_report_render(report.get(), o.format, &text)) return fail(s);
  StringPtr out(text);
  std::fputs(out.get(), stdout);
  switch (regamb_report_verdict(report.get())) {
    case REGAMB_UNAMBIGUOUS:
      return kOk;
    case REGAMB_AMBIGUOUS:
      return kNegative;
    case REGAMB_REJECTED_PROBLEMATIC: {
      char* sub = nullptr;
      regamb_regex_problematic_subterm(r.get(), &sub);
      StringPtr offending(sub);
      std::fprintf(stderr, "regamb: rejected-problematic: %s is a star over a nullable expression\n",
                   offending ? offending.get() : "?");
      return kError;
    }
  }
  return kError;
}

int cmd_dot(const Options& o) {
  RegexPtr r;
  if (regamb_status s = parse(o.regex, r)) return fail(s);
  regamb_fst* raw = nullptr;
  if (regamb_status s = regamb_fst_build(r.get(), o.policy, o.max_states, &raw)) return fail(s);
  std::unique_ptr<regamb_fst, FstDeleter> t(raw);
  char* dot = nullptr;
  if (regamb_status s = regamb_fst_dot(t.get(), o.show_sink ? 1 : 0, &dot)) return fail(s);
  StringPtr out(dot);
  std::fputs(out.get(), stdout);
  return kOk;
}

int cmd_oracle(const Options& o) {
  RegexPtr r;
  if (regamb_status s = parse(o.regex, r)) return fail(s);
  regamb_strings* trees = nullptr;
  if (regamb_status s = regamb_oracle_enumerate(r.get(), o.word.c_str(), kOracleWordLimit, &trees)) {
    return fail(s);
  }
  return print_trees(trees);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parse trees and ambiguity diagnosis for regular expressions"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  const std::map<std::string, regamb_policy> policies{{"posix", REGAMB_POSIX},
                                                      {"greedy", REGAMB_GREEDY}};
  const std::map<std::string, regamb_format> formats{{"text", REGAMB_TEXT}, {"json", REGAMB_JSON}};
  app.add_option("--policy", o.policy, "Disambiguation policy: posix or greedy")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  app.add_option("--format", o.format, "Report format: text or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--max-states", o.max_states, "Transducer state limit")
      ->check(CLI::PositiveNumber);
  app.add_flag("--show-sink", o.show_sink, "Keep empty-language states in DOT output");

  auto with_word = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("regex", o.regex, "Regular expression")->required();
    sub->add_option("word", o.word, "Input word (may be empty)")->required();
    return sub;
  };
  auto regex_only = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("regex", o.regex, "Regular expression")->required();
    return sub;
  };
  CLI::App* trees = with_word("trees", "List all parse trees of WORD in priority order");
  CLI::App* match = with_word("match", "Print the first parse tree under the policy");
  CLI::App* ambig = regex_only("ambig", "Diagnose ambiguity and list counter-examples");
  CLI::App* dot = regex_only("dot", "Emit the transducer as a DOT graph");
  CLI::App* oracle = with_word("oracle", "Enumerate parse trees by brute force (|WORD| <= 12)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  if (*trees) return cmd_trees(o);
  if (*match) return cmd_match(o);
  if (*ambig) return cmd_ambig(o);
  if (*dot) return cmd_dot(o);
  if (*oracle) return cmd_oracle(o);
  return kError;
}
