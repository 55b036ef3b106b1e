#include "ccsp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <stdexcept>
#include <vector>

#include "ccsp/campaign.hpp"
#include "ccsp/enumerate.hpp"
#include "ccsp/generator.hpp"
#include "ccsp/equivalence.hpp"
#include "ccsp/lts.hpp"
#include "ccsp/parser.hpp"
#include "ccsp/warehouse.hpp"

namespace ccsp::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string term;
  std::string kind = "std";
  std::string semantics = "denotational";
  std::string format = "text";
  std::size_t state_cap = kDefaultStateCap;

  std::uint64_t seed = 0;
  std::size_t cases = 100;
  int max_depth = 4;
  std::string alphabet = "a,b";
  std::string kinds = "both";
  bool lemmas = false;
  std::size_t lemma_cases = 500;
  bool verbose = false;

  std::size_t max_ops = 2;
  bool check = false;
  bool count = false;

  std::string example;
};

TermKind term_kind(const std::string& name) { return name == "comp" ? TermKind::Compensable : TermKind::Standard; }

const char* kind_label(TermKind k) { return k == TermKind::Standard ? "std" : "comp"; }

bool machine(const Options& o) { return o.format == "machine"; }

json to_json(const Trace& t) { return trace_tokens(t); }
json to_json(const TracePair& p) { return json::array({trace_tokens(p.forward), trace_tokens(p.compensation)}); }

template <typename Set>
json set_json(const Set& set) {
  json out = json::array();
  for (const auto& x : set) out.push_back(to_json(x));
  return out;
}

std::string to_text(const Trace& t) { return format_trace(t); }
std::string to_text(const TracePair& p) { return format_trace_pair(p); }

template <typename Set>
void print_set(std::ostream& out, const Set& set, const char* indent = "") {
  for (const auto& x : set) out << indent << to_text(x) << '\n';
}

void print_lines(std::ostream& out, const char* title, const std::vector<std::string>& lines) {
  if (lines.empty()) return;
  out << "  " << title << ":\n";
  for (const auto& l : lines) out << "    " << l << '\n';
}

int cmd_traces(const Options& o, std::ostream& out) {
  auto term = parse_term(o.term, term_kind(o.kind));
  Checker checker(o.state_cap);
  bool want_den = o.semantics != "operational";
  bool want_op = o.semantics != "denotational";
  return std::visit(
      [&](const auto& t) {
        using Set = std::decay_t<decltype(checker.denotation().traces(t))>;
        Set den = want_den ? checker.denotation().traces(t) : Set{};
        Set op = want_op ? checker.explorer().derived_traces(t) : Set{};
        auto emit = [&](const char* name, const Set& set) {
          if (machine(o)) {
            json rec{{"command", "traces"}, {"term", pretty_print(t)}, {"kind", o.kind},
                     {"semantics", name},   {"traces", set_json(set)}};
            out << rec.dump() << '\n';
          } else if (want_den && want_op) {
            out << name << " (" << set.size() << "):\n";
            print_set(out, set, "  ");
          } else {
            print_set(out, set);
          }
        };
        if (want_den) emit("denotational", den);
        if (want_op) emit("operational", op);
        if (want_den && want_op && !(den == op)) {
          if (!machine(o)) out << "semantics differ\n";
          return kExitFailure;
        }
        return kExitOk;
      },
      term);
}

int cmd_check(const Options& o, std::ostream& out) {
  auto term = parse_term(o.term, term_kind(o.kind));
  Checker checker(o.state_cap);
  return std::visit(
      [&](const auto& t) {
        auto v = checker.check(t);
        bool healthy = is_healthy(v.denotational) && is_healthy(v.operational);
        if (machine(o)) {
          json rec{{"command", "check"},
                   {"term", pretty_print(t)},
                   {"kind", o.kind},
                   {"verdict", status_name(v.status)},
                   {"healthy", healthy},
                   {"operational", set_json(v.operational)},
                   {"denotational", set_json(v.denotational)},
                   {"only_operational", set_json(v.only_operational)},
                   {"only_denotational", set_json(v.only_denotational)}};
          out << rec.dump() << '\n';
        } else {
          out << "term: " << pretty_print(t) << '\n';
          out << "verdict: " << status_name(v.status) << '\n';
          out << "operational: " << v.operational.size() << " traces\n";
          out << "denotational: " << v.denotational.size() << " traces\n";
          out << "healthy: " << (healthy ? "yes" : "no") << '\n';
          if (!v.only_operational.empty()) {
            out << "only operational:\n";
            print_set(out, v.only_operational, "  ");
          }
          if (!v.only_denotational.empty()) {
            out << "only denotational:\n";
            print_set(out, v.only_denotational, "  ");
          }
        }
        return v.equal() && healthy ? kExitOk : kExitFailure;
      },
      term);
}

int cmd_lts(const Options& o, std::ostream& out) {
  auto term = parse_term(o.term, term_kind(o.kind));
  out << to_dot(build_lts(term, o.state_cap));
  return kExitOk;
}

json case_json(const CaseRecord& r) {
  return json{{"index", r.index},
              {"kind", kind_label(r.kind)},
              {"term", r.term},
              {"verdict", r.cap_hit ? std::string("CapExceeded") : std::string(status_name(r.status))},
              {"healthy", r.healthy},
              {"traces", r.traces},
              {"only_operational", r.only_operational},
              {"only_denotational", r.only_denotational}};
}

CaseCallback case_printer(const Options& o, std::ostream& out) {
  return [&o, &out](const CaseRecord& r) {
    if (machine(o)) {
      out << case_json(r).dump() << '\n';
    } else if (o.verbose || !r.ok()) {
      out << r.line() << '\n';
      print_lines(out, "only operational", r.only_operational);
      print_lines(out, "only denotational", r.only_denotational);
    }
  };
}

void print_summary(const Options& o, std::ostream& out, const CampaignSummary& s) {
  if (machine(o)) {
    json rec{{"summary", "equivalence"},        {"cases", s.cases},         {"standard", s.standard_cases},
             {"compensable", s.compensable_cases}, {"equal", s.equal}, {"mismatches", s.mismatches},
             {"unhealthy", s.unhealthy},    {"cap_hits", s.cap_hits}};
    out << rec.dump() << '\n';
    return;
  }
  out << "equivalence: " << s.equal << '/' << s.cases << " Equal (std " << s.standard_cases << ", comp "
      << s.compensable_cases << "), mismatches " << s.mismatches << ", unhealthy " << s.unhealthy
      << ", cap hits " << s.cap_hits << '\n';
}

bool run_lemmas(const Options& o, std::ostream& out, const Alphabet& alphabet, const CampaignOptions& opts) {
  bool ok = true;
  for (int lemma = 1; lemma <= 7; ++lemma) {
    auto s = run_lemma_suite(lemma, o.seed, o.lemma_cases, o.max_depth, alphabet, opts);
    ok = ok && s.ok();
    if (machine(o)) {
      json rec{{"summary", "lemma"},           {"lemma", lemma},
               {"cases", s.cases},             {"equal", s.equal},
               {"cap_hits", s.cap_hits},       {"cond_success", s.cond_success},
               {"cond_failure", s.cond_failure}, {"forward_throw", s.forward_throw}};
      if (s.first_failure) {
        rec["first_failure"] = {{"operands", s.first_failure->operands},
                                {"only_lhs", s.first_failure->only_lhs},
                                {"only_rhs", s.first_failure->only_rhs}};
      }
      out << rec.dump() << '\n';
      continue;
    }
    out << "lemma " << lemma << ": " << s.equal << '/' << s.cases << " Equal, cap hits " << s.cap_hits
        << ", cond success " << s.cond_success << ", cond failure " << s.cond_failure << ", forward throw "
        << s.forward_throw << '\n';
    if (s.first_failure) {
      out << "  first failure: " << s.first_failure->operands << '\n';
      print_lines(out, "only lhs", s.first_failure->only_lhs);
      print_lines(out, "only rhs", s.first_failure->only_rhs);
    }
  }
  return ok;
}

int cmd_prop(const Options& o, std::ostream& out) {
  auto alphabet = parse_alphabet(o.alphabet);
  CampaignOptions opts;
  opts.state_cap = o.state_cap;
  KindSelection kinds = o.kinds == "std"    ? KindSelection::Standard
                        : o.kinds == "comp" ? KindSelection::Compensable
                                            : KindSelection::Both;
  // Fail on bad generator settings before printing anything.
  GenConfig probe;
  probe.max_depth = o.max_depth;
  probe.alphabet = alphabet;
  validate(probe);

  auto summary = run_random(o.seed, o.cases, o.max_depth, alphabet, kinds, opts, case_printer(o, out));
  print_summary(o, out, summary);
  bool ok = summary.ok();
  if (o.lemmas) ok = run_lemmas(o, out, alphabet, opts) && ok;
  return ok ? kExitOk : kExitFailure;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  auto alphabet = parse_alphabet(o.alphabet);
  auto kind = term_kind(o.kind);
  if (o.check) {
    CampaignOptions opts;
    opts.state_cap = o.state_cap;
    auto summary = run_enumeration(o.max_ops, alphabet, kind, opts, case_printer(o, out));
    print_summary(o, out, summary);
    return summary.ok() ? kExitOk : kExitFailure;
  }
  std::size_t n = 0;
  for_each_term(o.max_ops, alphabet, kind, [&](const AnyTerm& t) {
    ++n;
    if (!o.count) out << pretty_print(t) << '\n';
  });
  if (o.count) out << n << '\n';
  return kExitOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  auto report = warehouse_example();
  if (machine(o)) {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexample", c.detail}});
    }
    json rec{{"command", "example"},
             {"term", pretty_print(report.term)},
             {"semantics_agree", report.semantics_agree},
             {"traces", set_json(report.traces)},
             {"checks", checks}};
    out << rec.dump() << '\n';
  } else {
    out << "term: " << pretty_print(report.term) << '\n';
    out << "traces (" << report.traces.size() << "):\n";
    print_set(out, report.traces, "  ");
    out << "semantics agree: " << (report.semantics_agree ? "yes" : "no") << '\n';
    char tag = 'a';
    for (const auto& c : report.checks) {
      out << '(' << tag++ << ") " << c.name << ": " << (c.passed ? "PASS" : "FAIL") << '\n';
      if (!c.passed) out << "    counterexample: " << c.detail << '\n';
    }
  }
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Trace semantics toolkit for compensating CSP", "ccsp"};
  app.require_subcommand(1, 1);

  auto add_kind = [&](CLI::App* cmd) {
    cmd->add_option("--kind", o.kind, "Term kind")->check(CLI::IsMember({"std", "comp"}))->capture_default_str();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--state-cap", o.state_cap, "Maximum explored states per query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* traces = app.add_subcommand("traces", "Print the trace set of a term");
  traces->add_option("term", o.term, "Term text")->required();
  add_kind(traces);
  traces->add_option("--semantics", o.semantics, "Which semantics to evaluate")
      ->check(CLI::IsMember({"denotational", "operational", "both"}))
      ->capture_default_str();
  add_format(traces);
  add_cap(traces);

  auto* check = app.add_subcommand("check", "Compare both semantics on a term");
  check->add_option("term", o.term, "Term text")->required();
  add_kind(check);
  add_format(check);
  add_cap(check);

  auto* lts = app.add_subcommand("lts", "Write the transition system of a term as dot");
  lts->add_option("term", o.term, "Term text")->required();
  add_kind(lts);
  add_cap(lts);

  auto* prop = app.add_subcommand("prop", "Check both semantics on generated terms");
  prop->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  prop->add_option("--cases", o.cases, "Number of generated terms")->capture_default_str();
  prop->add_option("--max-depth", o.max_depth, "Maximum term depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  prop->add_option("--alphabet", o.alphabet, "Comma separated event names")->capture_default_str();
  prop->add_option("--kind", o.kinds, "Term kinds to generate")
      ->check(CLI::IsMember({"std", "comp", "both"}))
      ->capture_default_str();
  prop->add_flag("--lemmas", o.lemmas, "Also run the seven lemma suites");
  prop->add_option("--lemma-cases", o.lemma_cases, "Operand tuples per lemma")->capture_default_str();
  prop->add_flag("--verbose", o.verbose, "Print every case");
  add_format(prop);
  add_cap(prop);

  auto* enumerate = app.add_subcommand("enumerate", "List or check every term up to an operator count");
  enumerate->add_option("--max-ops", o.max_ops, "Maximum operator nodes")->capture_default_str();
  enumerate->add_option("--alphabet", o.alphabet, "Comma separated event names")->capture_default_str();
  add_kind(enumerate);
  enumerate->add_flag("--check", o.check, "Compare both semantics on every term");
  enumerate->add_flag("--count", o.count, "Print only the number of terms");
  enumerate->add_flag("--verbose", o.verbose, "Print every case when checking");
  add_format(enumerate);
  add_cap(enumerate);

  auto* example = app.add_subcommand("example", "Run a bundled example");
  example->add_option("name", o.example, "Example name")->required()->check(CLI::IsMember({"warehouse"}));
  add_format(example);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (traces->parsed()) return cmd_traces(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (lts->parsed()) return cmd_lts(o, out);
    if (prop->parsed()) return cmd_prop(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    return cmd_example(o, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const StateCapExceeded& e) {
    err << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ccsp::cli
