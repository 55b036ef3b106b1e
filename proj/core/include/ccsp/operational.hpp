#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ccsp/syntax.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

/// Transition label: a normal event or a terminal event.
class Label {
 public:
  static Label normal(Event e) { return Label(std::move(e)); }
  static Label terminal(Terminal t) { return Label(t); }

  bool is_terminal() const noexcept { return std::holds_alternative<Terminal>(value_); }
  const Event& event() const { return std::get<Event>(value_); }
  Terminal terminal() const { return std::get<Terminal>(value_); }

  /// Event name, or the terminal glyph (`*`, `?`, `!`).
  std::string text() const;

  friend bool operator==(const Label&, const Label&) = default;
  // Normal labels sort before terminal ones.
  friend std::strong_ordering operator<=>(const Label&, const Label&) = default;

 private:
  explicit Label(Event e) : value_(std::move(e)) {}
  explicit Label(Terminal t) : value_(t) {}

  std::variant<Event, Terminal> value_;
};

/// A terminal step always leads to Null.
struct StandardStep {
  Label label;
  StdTerm successor;

  friend bool operator==(const StandardStep&, const StandardStep&) = default;
};

/// Normal steps lead to a compensable term, terminal steps to the stored
/// compensation (a standard term).
struct CompensableStep {
  Label label;
  std::variant<CompTerm, StdTerm> successor;

  const CompTerm& next() const { return std::get<CompTerm>(successor); }
  const StdTerm& compensation() const { return std::get<StdTerm>(successor); }

  friend bool operator==(const CompensableStep&, const CompensableStep&) = default;
};

/// Steps licensed by the transition rules, duplicate-free, ordered by label
/// then by the printed successor. Throws std::invalid_argument for Null.
std::vector<StandardStep> step_standard(const StdTerm& p);
std::vector<CompensableStep> step_compensable(const CompTerm& pp);

namespace detail {
// Unordered and possibly repeated; used on exploration paths.
std::vector<StandardStep> raw_steps(const StdTerm& p);
std::vector<CompensableStep> raw_steps(const CompTerm& pp);
}  // namespace detail

/// Thrown when exploring a term visits more states than allowed.
class StateCapExceeded : public std::runtime_error {
 public:
  explicit StateCapExceeded(std::size_t cap);
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

/// A complete forward run: its trace and the compensation left behind.
struct ForwardRun {
  Trace trace;
  StdTerm compensation;

  friend bool operator==(const ForwardRun&, const ForwardRun&) = default;
  friend std::strong_ordering operator<=>(const ForwardRun& a, const ForwardRun& b) {
    if (auto c = a.trace <=> b.trace; c != 0) return c;
    return a.compensation <=> b.compensation;
  }
};

using ForwardSet = CanonicalSet<ForwardRun>;

std::string format_forward_run(const ForwardRun& r);

/// Does `p` reach Null by consuming exactly the events of `t` and then its
/// terminal? Direct search over steps, no memoisation.
bool run_lifted(const StdTerm& p, const Trace& t);

/// Derived-trace computation by exhaustive exploration of the transition
/// system. Results are memoised per reachable state, so one explorer can be
/// reused across many queries; call clear() to drop the memo.
class Explorer {
 public:
  explicit Explorer(std::size_t state_cap = kDefaultStateCap) : state_cap_(state_cap) {}

  TraceSet derived_traces(const StdTerm& p);
  ForwardSet derived_forward(const CompTerm& pp);
  TracePairSet derived_traces(const CompTerm& pp);

  std::size_t state_cap() const noexcept { return state_cap_; }
  std::size_t memo_size() const noexcept { return std_memo_.size() + comp_memo_.size(); }
  void clear();

 private:
  const TraceSet& explore(const StdTerm& p);
  const ForwardSet& explore(const CompTerm& pp);
  void begin_query();
  void count_state();

  std::size_t state_cap_;
  std::size_t visited_ = 0;
  std::unordered_map<StdTerm, TraceSet> std_memo_;
  std::unordered_map<CompTerm, ForwardSet> comp_memo_;
};

TraceSet derived_traces_standard(const StdTerm& p, std::size_t state_cap = kDefaultStateCap);
ForwardSet derived_forward(const CompTerm& pp, std::size_t state_cap = kDefaultStateCap);
TracePairSet derived_traces_compensable(const CompTerm& pp, std::size_t state_cap = kDefaultStateCap);

}  // namespace ccsp
