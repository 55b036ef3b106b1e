#include "ccsp/equivalence.hpp"

#include <stdexcept>

namespace ccsp {

std::string_view status_name(Status s) noexcept { return s == Status::Equal ? "Equal" : "Mismatch"; }

namespace {

template <typename Set>
Verdict<Set> compare(Set operational, Set denotational, std::string term) {
  Verdict<Set> v;
  v.only_operational = set_difference(operational, denotational);
  v.only_denotational = set_difference(denotational, operational);
  v.status = v.only_operational.empty() && v.only_denotational.empty() ? Status::Equal : Status::Mismatch;
  v.operational = std::move(operational);
  v.denotational = std::move(denotational);
  v.term = std::move(term);
  return v;
}

std::string format(const Trace& t) { return format_trace(t); }
std::string format(const TracePair& t) { return format_trace_pair(t); }
std::string format(const ForwardRun& r) { return format_forward_run(r); }

template <typename T>
void finish(LemmaReport& report, const CanonicalSet<T>& lhs, const CanonicalSet<T>& rhs) {
  report.lhs_size = lhs.size();
  report.rhs_size = rhs.size();
  for (const auto& x : set_difference(lhs, rhs)) report.only_lhs.push_back(format(x));
  for (const auto& x : set_difference(rhs, lhs)) report.only_rhs.push_back(format(x));
  report.status = report.only_lhs.empty() && report.only_rhs.empty() ? Status::Equal : Status::Mismatch;
}

std::string describe_operands(std::span<const AnyTerm> operands) {
  std::string out = "(";
  for (std::size_t i = 0; i < operands.size(); ++i) {
    if (i) out += ", ";
    out += pretty_print(operands[i]);
  }
  return out + ")";
}

}  // namespace

std::vector<TermKind> lemma_signature(int lemma) {
  using enum TermKind;
  switch (lemma) {
    case 1:
    case 2:
    case 6:
      return {Standard, Standard};
    case 3:
    case 5:
      return {Compensable, Compensable};
    case 4:
      return {Compensable, Standard};
    case 7:
      return {Compensable};
    default:
      throw std::invalid_argument("no lemma " + std::to_string(lemma) + "; lemmas are numbered 1 to 7");
  }
}

StandardVerdict Checker::check(const StdTerm& p) {
  auto operational = explorer_.derived_traces(p);
  return compare(std::move(operational), denotation_.traces(p), pretty_print(p));
}

CompensableVerdict Checker::check(const CompTerm& pp) {
  if (pp.kind() == CompKind::Aux) throw std::invalid_argument("the auxiliary construct is not a user term");
  auto operational = explorer_.derived_traces(pp);
  return compare(std::move(operational), denotation_.traces(pp), pretty_print(pp));
}

void Checker::trim(std::size_t limit) {
  if (explorer_.memo_size() > limit) explorer_.clear();
  if (denotation_.memo_size() > limit) denotation_.clear();
}

LemmaReport Checker::check_lemma(int id, std::span<const AnyTerm> operands) {
  auto signature = lemma_signature(id);
  if (operands.size() != signature.size()) {
    throw std::invalid_argument("lemma " + std::to_string(id) + " takes " + std::to_string(signature.size()) +
                                " operand(s)");
  }
  for (std::size_t i = 0; i < signature.size(); ++i) {
    bool is_std = std::holds_alternative<StdTerm>(operands[i]);
    if (is_std != (signature[i] == TermKind::Standard)) {
      throw std::invalid_argument("lemma " + std::to_string(id) + " operand " + std::to_string(i + 1) + " must be " +
                                  (signature[i] == TermKind::Standard ? "standard" : "compensable"));
    }
  }
  auto std_at = [&](std::size_t i) -> const StdTerm& { return std::get<StdTerm>(operands[i]); };
  auto comp_at = [&](std::size_t i) -> const CompTerm& { return std::get<CompTerm>(operands[i]); };
  const auto& ops = denotation_.operators();

  LemmaReport report;
  report.lemma = id;
  report.operands = describe_operands(operands);

  switch (id) {
    case 1:
    case 2: {
      const auto& p = std_at(0);
      const auto& q = std_at(1);
      auto lhs = explorer_.derived_traces(id == 1 ? StdTerm::seq(p, q) : StdTerm::par(p, q));
      auto dp = explorer_.derived_traces(p);
      auto dq = explorer_.derived_traces(q);
      std::vector<Trace> rhs;
      for (const auto& a : dp) {
        for (const auto& b : dq) {
          if (id == 1) {
            rhs.push_back(ops.seq(a, b));
          } else {
            auto merged = ops.par(a, b);
            rhs.insert(rhs.end(), merged.begin(), merged.end());
          }
        }
      }
      finish(report, lhs, TraceSet(std::move(rhs)));
      break;
    }
    case 3: {
      const auto& pp = comp_at(0);
      const auto& qq = comp_at(1);
      auto lhs = explorer_.derived_forward(CompTerm::seq(pp, qq));
      auto fp = explorer_.derived_forward(pp);
      auto fq = explorer_.derived_forward(qq);
      std::vector<ForwardRun> rhs;
      for (const auto& [p, stored_p] : fp) {
        bool success = p.terminal == Terminal::Tick;
        (success ? report.coverage.cond_success : report.coverage.cond_failure) = true;
        if (p.terminal == Terminal::Throw) report.coverage.forward_throw = true;
        for (const auto& [q, stored_q] : fq) {
          rhs.push_back(ForwardRun{ops.seq(p, q), success ? StdTerm::seq(stored_q, stored_p) : stored_p});
        }
      }
      finish(report, lhs, ForwardSet(std::move(rhs)));
      break;
    }
    case 4: {
      const auto& qq = comp_at(0);
      const auto& p = std_at(1);
      auto lhs = explorer_.derived_forward(CompTerm::aux(qq, p));
      std::vector<ForwardRun> rhs;
      for (const auto& [t, stored_q] : explorer_.derived_forward(qq)) {
        rhs.push_back(ForwardRun{t, StdTerm::seq(stored_q, p)});
      }
      finish(report, lhs, ForwardSet(std::move(rhs)));
      break;
    }
    case 5: {
      const auto& pp = comp_at(0);
      const auto& qq = comp_at(1);
      auto lhs = explorer_.derived_forward(CompTerm::par(pp, qq));
      auto fp = explorer_.derived_forward(pp);
      auto fq = explorer_.derived_forward(qq);
      std::vector<ForwardRun> rhs;
      for (const auto& [p, stored_p] : fp) {
        for (const auto& [q, stored_q] : fq) {
          for (const auto& t : ops.par(p, q)) rhs.push_back(ForwardRun{t, StdTerm::par(stored_p, stored_q)});
        }
      }
      finish(report, lhs, ForwardSet(std::move(rhs)));
      break;
    }
    case 6: {
      const auto& p = std_at(0);
      const auto& q = std_at(1);
      auto lhs = explorer_.derived_traces(CompTerm::pair(p, q));
      auto dp = explorer_.derived_traces(p);
      auto dq = explorer_.derived_traces(q);
      std::vector<TracePair> rhs;
      for (const auto& a : dp) {
        if (a.terminal == Terminal::Throw) report.coverage.forward_throw = true;
        (a.terminal == Terminal::Tick ? report.coverage.cond_success : report.coverage.cond_failure) = true;
        for (const auto& b : dq) rhs.push_back(ops.pair(a, b));
      }
      finish(report, lhs, TracePairSet(std::move(rhs)));
      break;
    }
    case 7: {
      const auto& pp = comp_at(0);
      auto lhs = explorer_.derived_traces(StdTerm::block(pp));
      std::vector<Trace> rhs;
      for (const auto& [p, p_comp] : explorer_.derived_traces(pp)) {
        if (p.terminal == Terminal::Throw) report.coverage.forward_throw = true;
        if (auto t = ops.block(p, p_comp)) rhs.push_back(std::move(*t));
      }
      finish(report, lhs, TraceSet(std::move(rhs)));
      break;
    }
  }
  return report;
}

StandardVerdict check_standard(const StdTerm& p, std::size_t state_cap) { return Checker(state_cap).check(p); }

CompensableVerdict check_compensable(const CompTerm& pp, std::size_t state_cap) {
  return Checker(state_cap).check(pp);
}

LemmaReport check_lemma(int id, std::span<const AnyTerm> operands) { return Checker().check_lemma(id, operands); }

}  // namespace ccsp
