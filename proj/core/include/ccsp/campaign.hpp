#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccsp/denotational.hpp"
#include "ccsp/equivalence.hpp"
#include "ccsp/operational.hpp"
#include "ccsp/syntax.hpp"

namespace ccsp {

struct CampaignOptions {
  std::size_t state_cap = kDefaultStateCap;
  TraceOperators operators;
};

/// One checked term. `cap_hit` means exploration was abandoned.
struct CaseRecord {
  std::size_t index = 0;
  TermKind kind = TermKind::Standard;
  std::string term;
  Status status = Status::Equal;
  bool healthy = true;
  bool cap_hit = false;
  std::size_t traces = 0;
  std::vector<std::string> only_operational;
  std::vector<std::string> only_denotational;

  bool ok() const noexcept { return status == Status::Equal && healthy && !cap_hit; }
  /// Single deterministic line, e.g. `17 std Equal 3 a ; THROW`.
  std::string line() const;
};

struct CampaignSummary {
  std::size_t cases = 0;
  std::size_t standard_cases = 0;
  std::size_t compensable_cases = 0;
  std::size_t equal = 0;
  std::size_t mismatches = 0;
  std::size_t unhealthy = 0;
  std::size_t cap_hits = 0;
  std::optional<CaseRecord> first_failure;

  bool ok() const noexcept { return mismatches == 0 && unhealthy == 0 && cap_hits == 0; }
};

using CaseCallback = std::function<void(const CaseRecord&)>;

/// Checks one term and fills a record; state-cap overruns are recorded, not thrown.
CaseRecord check_case(Checker& checker, const AnyTerm& term, std::size_t index);

/// Equivalence check over every term with at most `max_ops` operator nodes.
CampaignSummary run_enumeration(std::size_t max_ops, const Alphabet& alphabet, TermKind kind,
                                const CampaignOptions& options = {}, const CaseCallback& on_case = {});

/// Which kinds a randomized campaign draws. With both, even cases are
/// standard and odd cases compensable.
enum class KindSelection { Standard, Compensable, Both };

/// Equivalence check over `cases` generated terms; case i uses derive_seed(seed, i).
CampaignSummary run_random(std::uint64_t seed, std::size_t cases, int max_depth, const Alphabet& alphabet,
                           KindSelection kinds, const CampaignOptions& options = {},
                           const CaseCallback& on_case = {});

struct LemmaSuiteSummary {
  int lemma = 0;
  std::size_t cases = 0;
  std::size_t equal = 0;
  std::size_t cap_hits = 0;
  std::size_t cond_success = 0;
  std::size_t cond_failure = 0;
  std::size_t forward_throw = 0;
  std::optional<LemmaReport> first_failure;

  bool ok() const noexcept { return equal == cases && cap_hits == 0; }
};

/// Operands generated at depth max(1, max_depth - 1) so each composite term
/// stays within max_depth.
std::vector<AnyTerm> lemma_operands(int lemma, std::uint64_t seed, std::size_t index, int max_depth,
                                    const Alphabet& alphabet);

LemmaSuiteSummary run_lemma_suite(int lemma, std::uint64_t seed, std::size_t cases, int max_depth,
                                  const Alphabet& alphabet, const CampaignOptions& options = {});

}  // namespace ccsp
