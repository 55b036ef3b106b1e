#include "ccsp/campaign.hpp"

#include "ccsp/enumerate.hpp"
#include "ccsp/generator.hpp"

namespace ccsp {

namespace {

constexpr std::size_t kMemoLimit = 400000;

template <typename Set>
std::vector<std::string> serialize(const Set& set) {
  std::vector<std::string> out;
  for (const auto& x : set) {
    if constexpr (std::is_same_v<Set, TraceSet>) {
      out.push_back(format_trace(x));
    } else {
      out.push_back(format_trace_pair(x));
    }
  }
  return out;
}

void tally(CampaignSummary& summary, const CaseRecord& record) {
  ++summary.cases;
  ++(record.kind == TermKind::Standard ? summary.standard_cases : summary.compensable_cases);
  if (record.cap_hit) {
    ++summary.cap_hits;
  } else if (record.status == Status::Equal) {
    ++summary.equal;
  } else {
    ++summary.mismatches;
  }
  if (!record.cap_hit && !record.healthy) ++summary.unhealthy;
  if (!record.ok() && !summary.first_failure) summary.first_failure = record;
}

}  // namespace

std::string CaseRecord::line() const {
  std::string out = std::to_string(index);
  out += kind == TermKind::Standard ? " std " : " comp ";
  out += cap_hit ? "CapExceeded" : std::string(status_name(status));
  out += ' ';
  out += std::to_string(traces);
  if (!healthy) out += " unhealthy";
  out += ' ';
  out += term;
  return out;
}

CaseRecord check_case(Checker& checker, const AnyTerm& term, std::size_t index) {
  CaseRecord record;
  record.index = index;
  record.term = pretty_print(term);
  record.kind = std::holds_alternative<StdTerm>(term) ? TermKind::Standard : TermKind::Compensable;
  checker.trim(kMemoLimit);
  try {
    std::visit(
        [&](const auto& t) {
          auto verdict = checker.check(t);
          record.status = verdict.status;
          record.traces = verdict.denotational.size();
          record.healthy = is_healthy(verdict.operational) && is_healthy(verdict.denotational);
          record.only_operational = serialize(verdict.only_operational);
          record.only_denotational = serialize(verdict.only_denotational);
        },
        term);
  } catch (const StateCapExceeded&) {
    record.cap_hit = true;
    checker.explorer().clear();
  }
  return record;
}

CampaignSummary run_enumeration(std::size_t max_ops, const Alphabet& alphabet, TermKind kind,
                                const CampaignOptions& options, const CaseCallback& on_case) {
  Checker checker(options.state_cap, options.operators);
  CampaignSummary summary;
  std::size_t index = 0;
  for_each_term(max_ops, alphabet, kind, [&](const AnyTerm& term) {
    auto record = check_case(checker, term, index++);
    tally(summary, record);
    if (on_case) on_case(record);
  });
  return summary;
}

CampaignSummary run_random(std::uint64_t seed, std::size_t cases, int max_depth, const Alphabet& alphabet,
                           KindSelection kinds, const CampaignOptions& options, const CaseCallback& on_case) {
  Checker checker(options.state_cap, options.operators);
  CampaignSummary summary;
  for (std::size_t i = 0; i < cases; ++i) {
    GenConfig cfg;
    cfg.seed = derive_seed(seed, i);
    cfg.max_depth = max_depth;
    cfg.alphabet = alphabet;
    switch (kinds) {
      case KindSelection::Standard: cfg.kind = TermKind::Standard; break;
      case KindSelection::Compensable: cfg.kind = TermKind::Compensable; break;
      case KindSelection::Both: cfg.kind = i % 2 == 0 ? TermKind::Standard : TermKind::Compensable; break;
    }
    auto record = check_case(checker, gen_term(cfg), i);
    tally(summary, record);
    if (on_case) on_case(record);
  }
  return summary;
}

std::vector<AnyTerm> lemma_operands(int lemma, std::uint64_t seed, std::size_t index, int max_depth,
                                    const Alphabet& alphabet) {
  std::vector<AnyTerm> operands;
  auto signature = lemma_signature(lemma);
  std::uint64_t lemma_seed = derive_seed(seed, static_cast<std::uint64_t>(lemma));
  for (std::size_t i = 0; i < signature.size(); ++i) {
    GenConfig cfg;
    cfg.seed = derive_seed(lemma_seed, index * signature.size() + i);
    cfg.max_depth = std::max(1, max_depth - 1);
    cfg.alphabet = alphabet;
    cfg.kind = signature[i];
    operands.push_back(gen_term(cfg));
  }
  return operands;
}

LemmaSuiteSummary run_lemma_suite(int lemma, std::uint64_t seed, std::size_t cases, int max_depth,
                                  const Alphabet& alphabet, const CampaignOptions& options) {
  Checker checker(options.state_cap, options.operators);
  LemmaSuiteSummary summary;
  summary.lemma = lemma;
  for (std::size_t i = 0; i < cases; ++i) {
    auto operands = lemma_operands(lemma, seed, i, max_depth, alphabet);
    checker.trim(kMemoLimit);
    ++summary.cases;
    try {
      auto report = checker.check_lemma(lemma, operands);
      if (report.equal()) {
        ++summary.equal;
      } else if (!summary.first_failure) {
        summary.first_failure = report;
      }
      summary.cond_success += report.coverage.cond_success;
      summary.cond_failure += report.coverage.cond_failure;
      summary.forward_throw += report.coverage.forward_throw;
    } catch (const StateCapExceeded&) {
      ++summary.cap_hits;
      checker.explorer().clear();
    }
  }
  return summary;
}

}  // namespace ccsp
