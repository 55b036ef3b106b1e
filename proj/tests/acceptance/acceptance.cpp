// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ccsp/campaign.hpp"
#include "ccsp/cli.hpp"
#include "ccsp/enumerate.hpp"
#include "ccsp/parser.hpp"

namespace {

using namespace ccsp;
using Clock = std::chrono::steady_clock;

constexpr double kTimeLimitSeconds = 300.0;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << std::endl;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const CampaignSummary& s, double secs = -1) {
  std::ostringstream out;
  out << s.equal << '/' << s.cases << " Equal, mismatches " << s.mismatches << ", unhealthy " << s.unhealthy
      << ", cap hits " << s.cap_hits;
  if (secs >= 0) out << ", " << std::fixed << std::setprecision(1) << secs << " s";
  if (s.first_failure) out << ", first failure: " << s.first_failure->line();
  return out.str();
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

CampaignSummary exhaustive(std::size_t max_ops, TermKind kind, const std::string& name) {
  auto start = Clock::now();
  auto s = run_enumeration(max_ops, parse_alphabet("a,b"), kind);
  double secs = seconds_since(start);
  report(s.equal == s.cases && s.cases > 0 && s.cap_hits == 0 && secs < kTimeLimitSeconds, name, describe(s, secs));
  return s;
}

CampaignSummary randomized() {
  std::vector<std::string> args{"prop",   "--seed", "42",   "--cases", "2000", "--max-depth",
                                "5",      "--kind", "both", "--verbose"};
  auto first = cli_run(args);
  auto second = cli_run(args);
  auto s = run_random(42, 2000, 5, parse_alphabet("a,b"), KindSelection::Both);
  bool summary_line = first.out.find("equivalence: 2000/2000 Equal") != std::string::npos;
  bool deterministic = first.out == second.out;
  report(first.code == 0 && summary_line && deterministic && s.equal == 2000,
         "randomized (seed 42, 2000 cases, depth 5, both kinds)",
         describe(s) +
             (deterministic ? ", transcript identical across reruns" : ", transcript differs across reruns"));
  return s;
}

void lemma_suites() {
  bool ok = true;
  std::size_t cases = 0;
  std::size_t equal = 0;
  std::size_t cap_hits = 0;
  std::ostringstream detail;
  for (int lemma = 1; lemma <= 7; ++lemma) {
    auto s = run_lemma_suite(lemma, 42, 500, 5, parse_alphabet("a,b"));
    ok = ok && s.ok() && s.cases == 500;
    cases += s.cases;
    equal += s.equal;
    cap_hits += s.cap_hits;
    if (lemma == 3) {
      ok = ok && s.cond_success > 0 && s.cond_failure > 0;
      detail << ", lemma 3 cond success " << s.cond_success << " and cond failure " << s.cond_failure;
    }
    if (lemma == 6) {
      ok = ok && s.forward_throw > 0;
      detail << ", lemma 6 forward-throw operands " << s.forward_throw;
    }
    if (s.first_failure) detail << ", lemma " << lemma << " fails on " << s.first_failure->operands;
  }
  report(ok, "lemma suites 1-7 (500 tuples each)",
         std::to_string(equal) + "/" + std::to_string(cases) + " Equal, cap hits " + std::to_string(cap_hits) +
             detail.str());
}

void pinned_values() {
  std::ifstream in(std::string(CCSP_GOLDEN_DIR) + "/trace_sets.tsv");
  std::size_t rows = 0;
  std::vector<std::string> wrong;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    ++rows;
    std::istringstream fields(line);
    std::string kind, term, set;
    std::getline(fields, kind, '\t');
    std::getline(fields, term, '\t');
    std::getline(fields, set);
    std::string want;
    std::istringstream members(set);
    for (std::string m; members >> m;) want += m + "\n";
    auto den = cli_run({"traces", term, "--kind", kind, "--semantics", "denotational"});
    auto op = cli_run({"traces", term, "--kind", kind, "--semantics", "operational"});
    if (den.code != 0 || op.code != 0 || den.out != want || op.out != want) wrong.push_back(term);
  }
  std::string detail = std::to_string(rows - wrong.size()) + "/" + std::to_string(rows) + " golden trace sets match";
  for (const auto& w : wrong) detail += ", wrong: " + w;
  report(rows > 0 && wrong.empty(), "pinned values", detail);
}

void warehouse() {
  auto r = cli_run({"example", "warehouse"});
  bool all_pass = r.out.find("FAIL") == std::string::npos && r.out.find("(c)") != std::string::npos;
  report(r.code == 0 && all_pass, "warehouse example", "exit code " + std::to_string(r.code));
}

Trace mutant_seq(const Trace& p, const Trace& q) {
  if (p.terminal != Terminal::Throw) return p;
  Trace out{p.events, q.terminal};
  out.events.insert(out.events.end(), q.events.begin(), q.events.end());
  return out;
}

void mutation() {
  TraceOperators ops;
  ops.seq = &mutant_seq;
  Checker mutant(kDefaultStateCap, ops);
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::string example;
  for_each_term(2, parse_alphabet("a,b"), TermKind::Standard, [&](const AnyTerm& t) {
    ++cases;
    if (!mutant.check(std::get<StdTerm>(t)).equal()) {
      if (mismatches++ == 0) example = pretty_print(t);
    }
  });
  report(mismatches > 0, "mutation sensitivity",
         std::to_string(mismatches) + "/" + std::to_string(cases) + " terms Mismatch under the flipped seq condition" +
             (example.empty() ? "" : ", e.g. " + example));
}

}  // namespace

int main() {
  auto standard = exhaustive(3, TermKind::Standard, "exhaustive standard (max ops 3, alphabet a,b)");
  auto compensable = exhaustive(2, TermKind::Compensable, "exhaustive compensable (max ops 2, alphabet a,b)");
  auto random = randomized();
  lemma_suites();

  std::size_t unhealthy = standard.unhealthy + compensable.unhealthy + random.unhealthy;
  std::size_t checked = standard.cases + compensable.cases + random.cases;
  report(unhealthy == 0 && checked > 0, "healthiness",
         std::to_string(checked - unhealthy) + "/" + std::to_string(checked) + " terms healthy");

  pinned_values();
  warehouse();
  mutation();

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
