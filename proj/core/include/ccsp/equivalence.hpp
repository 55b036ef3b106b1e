#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ccsp/denotational.hpp"
#include "ccsp/operational.hpp"
#include "ccsp/syntax.hpp"

namespace ccsp {

enum class Status { Equal, Mismatch };

std::string_view status_name(Status s) noexcept;

/// Outcome of comparing the derived (operational) and the denotational
/// semantics of one term. Equal exactly when both differences are empty.
template <typename Set>
struct Verdict {
  Status status = Status::Equal;
  Set operational;
  Set denotational;
  Set only_operational;
  Set only_denotational;
  std::string term;

  bool equal() const noexcept { return status == Status::Equal; }
};

using StandardVerdict = Verdict<TraceSet>;
using CompensableVerdict = Verdict<TracePairSet>;

/// Which side conditions a lemma instance exercised.
struct LemmaCoverage {
  bool cond_success = false;   // a left forward run ended with success
  bool cond_failure = false;   // a left forward run ended otherwise
  bool forward_throw = false;  // a forward trace ended with a throw
};

/// Left side evaluated with operational runs, right side with the
/// quantified trace-level formula. Differences are serialized members.
struct LemmaReport {
  int lemma = 0;
  Status status = Status::Equal;
  std::string operands;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;
  std::vector<std::string> only_lhs;
  std::vector<std::string> only_rhs;
  LemmaCoverage coverage;

  bool equal() const noexcept { return status == Status::Equal; }
};

/// Operand kinds each lemma takes, e.g. {Compensable, Standard} for lemma 4.
std::vector<TermKind> lemma_signature(int lemma);

/// Holds one explorer and one denotation so memoised results are shared
/// across checks. Not thread-safe; use one checker per worker.
class Checker {
 public:
  explicit Checker(std::size_t state_cap = kDefaultStateCap, TraceOperators ops = {})
      : explorer_(state_cap), denotation_(ops) {}

  StandardVerdict check(const StdTerm& p);
  CompensableVerdict check(const CompTerm& pp);

  /// Throws std::invalid_argument when `id` is not 1..7 or the operand kinds
  /// do not match lemma_signature(id).
  LemmaReport check_lemma(int id, std::span<const AnyTerm> operands);

  bool healthy(const StdTerm& p) { return is_healthy(denotation_.traces(p)); }
  bool healthy(const CompTerm& pp) { return is_healthy(denotation_.traces(pp)); }

  Explorer& explorer() noexcept { return explorer_; }
  Denotation& denotation() noexcept { return denotation_; }

  /// Drops memoised results once they grow past `limit` entries.
  void trim(std::size_t limit);

 private:
  Explorer explorer_;
  Denotation denotation_;
};

StandardVerdict check_standard(const StdTerm& p, std::size_t state_cap = kDefaultStateCap);
CompensableVerdict check_compensable(const CompTerm& pp, std::size_t state_cap = kDefaultStateCap);
LemmaReport check_lemma(int id, std::span<const AnyTerm> operands);

}  // namespace ccsp
