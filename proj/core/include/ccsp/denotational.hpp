#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ccsp/syntax.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

/// `p ; q`: q follows p only when p ends with success, otherwise just p.
Trace seq_traces(const Trace& p, const Trace& q);

/// All shuffles of `s` and `u` that keep each argument's internal order,
/// duplicate-free and sorted.
std::vector<std::vector<Event>> interleave_events(std::span<const Event> s, std::span<const Event> u);

/// Every shuffle of the event parts closed by the synchronised terminal.
TraceSet par_traces(const Trace& p, const Trace& q);

/// Like seq_traces, but control passes to q on a throw instead of success.
Trace interrupt_traces(const Trace& p, const Trace& q);

/// Traces of a compensation pair: the compensation is kept only when the
/// forward trace succeeds; otherwise it is the empty success `<*>`.
TracePair pair_traces(const Trace& p, const Trace& q);

/// Trace of a transaction block given a forward/compensation pair. A
/// successful forward trace stands alone, a throwing one is followed by its
/// compensation and a yielding one contributes nothing.
std::optional<Trace> block_traces(const Trace& p, const Trace& compensation);

/// Trace-level operators used by Denotation. Swappable so tests can run the
/// semantics with a deliberately broken operator.
struct TraceOperators {
  Trace (*seq)(const Trace&, const Trace&) = &seq_traces;
  TraceSet (*par)(const Trace&, const Trace&) = &par_traces;
  Trace (*interrupt)(const Trace&, const Trace&) = &interrupt_traces;
  TracePair (*pair)(const Trace&, const Trace&) = &pair_traces;
  std::optional<Trace> (*block)(const Trace&, const Trace&) = &block_traces;
};

/// Compositional trace semantics with per-subterm memoisation.
class Denotation {
 public:
  explicit Denotation(TraceOperators ops = {}) : ops_(ops) {}

  /// Throws std::invalid_argument on Null.
  const TraceSet& traces(const StdTerm& p);
  /// Throws std::invalid_argument on an auxiliary node, whose denotation is
  /// not defined.
  const TracePairSet& traces(const CompTerm& pp);

  const TraceOperators& operators() const noexcept { return ops_; }
  std::size_t memo_size() const noexcept { return std_memo_.size() + comp_memo_.size(); }
  void clear();

 private:
  TraceSet compute(const StdTerm& p);
  TracePairSet compute(const CompTerm& pp);

  TraceOperators ops_;
  std::unordered_map<StdTerm, TraceSet> std_memo_;
  std::unordered_map<CompTerm, TracePairSet> comp_memo_;
};

TraceSet traces_standard(const StdTerm& p);
TracePairSet traces_compensable(const CompTerm& pp);

/// Some trace ends with success or a throw.
bool is_healthy(const TraceSet& traces);
/// Some pair has a forward trace ending with success or a throw.
bool is_healthy(const TracePairSet& traces);

bool check_healthiness(const StdTerm& p);
bool check_healthiness(const CompTerm& pp);
bool check_healthiness(const AnyTerm& t);

}  // namespace ccsp
