#include "ccsp/operational.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace ccsp {

std::string Label::text() const {
  if (is_terminal()) return std::string(1, terminal_glyph(terminal()));
  return event().name();
}

StateCapExceeded::StateCapExceeded(std::size_t cap)
    : std::runtime_error("state cap of " + std::to_string(cap) + " states exceeded"), cap_(cap) {}

std::string format_forward_run(const ForwardRun& r) {
  return "(" + format_trace(r.trace) + ", " + pretty_print(r.compensation) + ")";
}

namespace detail {

namespace {

StandardStep terminal_step(Terminal w) { return {Label::terminal(w), StdTerm::null()}; }

// Sequential composition and the interrupt handler differ only in which
// terminal of the left operand hands control to the right operand.
void seq_like_steps(const StdTerm& p, Terminal handoff, StdTerm (*rebuild)(StdTerm, StdTerm),
                    std::vector<StandardStep>& out) {
  std::optional<std::vector<StandardStep>> right;
  for (auto& s : raw_steps(p.lhs())) {
    if (!s.label.is_terminal()) {
      out.push_back({std::move(s.label), rebuild(std::move(s.successor), p.rhs())});
    } else if (s.label.terminal() == handoff) {
      if (!right) right = raw_steps(p.rhs());
      out.insert(out.end(), right->begin(), right->end());
    } else {
      out.push_back(terminal_step(s.label.terminal()));
    }
  }
}

void par_steps(const StdTerm& p, std::vector<StandardStep>& out) {
  auto left = raw_steps(p.lhs());
  auto right = raw_steps(p.rhs());
  for (auto& s : left) {
    if (!s.label.is_terminal()) out.push_back({s.label, StdTerm::par(s.successor, p.rhs())});
  }
  for (auto& s : right) {
    if (!s.label.is_terminal()) out.push_back({s.label, StdTerm::par(p.lhs(), s.successor)});
  }
  for (const auto& s : left) {
    if (!s.label.is_terminal()) continue;
    for (const auto& u : right) {
      if (!u.label.is_terminal()) continue;
      for (auto w : sync_terminals(s.label.terminal(), u.label.terminal())) out.push_back(terminal_step(w));
    }
  }
}

void block_steps(const StdTerm& p, std::vector<StandardStep>& out) {
  for (auto& s : raw_steps(p.body())) {
    if (!s.label.is_terminal()) {
      out.push_back({std::move(s.label), StdTerm::block(s.next())});
      continue;
    }
    switch (s.label.terminal()) {
      case Terminal::Tick:
        // Success completes the block; the stored compensation is discarded.
        out.push_back(terminal_step(Terminal::Tick));
        break;
      case Terminal::Throw: {
        // The throw is hidden and the stored compensation runs in its place.
        auto comp = raw_steps(s.compensation());
        out.insert(out.end(), comp.begin(), comp.end());
        break;
      }
      case Terminal::Yield:
        // A forward run that yields has no block transition.
        break;
    }
  }
}

}  // namespace

std::vector<StandardStep> raw_steps(const StdTerm& p) {
  std::vector<StandardStep> out;
  switch (p.kind()) {
    case StdKind::Atom:
      out.push_back({Label::normal(p.event()), StdTerm::skip()});
      break;
    case StdKind::Skip:
      out.push_back(terminal_step(Terminal::Tick));
      break;
    case StdKind::Throw:
      out.push_back(terminal_step(Terminal::Throw));
      break;
    case StdKind::Yield:
      // Willing to yield, and equally ready to terminate.
      out.push_back(terminal_step(Terminal::Yield));
      out.push_back(terminal_step(Terminal::Tick));
      break;
    case StdKind::Seq:
      seq_like_steps(p, Terminal::Tick, &StdTerm::seq, out);
      break;
    case StdKind::Interrupt:
      seq_like_steps(p, Terminal::Throw, &StdTerm::interrupt, out);
      break;
    case StdKind::Choice: {
      out = raw_steps(p.lhs());
      auto right = raw_steps(p.rhs());
      out.insert(out.end(), right.begin(), right.end());
      break;
    }
    case StdKind::Par:
      par_steps(p, out);
      break;
    case StdKind::Block:
      block_steps(p, out);
      break;
    case StdKind::Null:
      throw std::invalid_argument("the null process has no transitions");
  }
  return out;
}

namespace {

CompensableStep comp_terminal(Terminal w, StdTerm compensation) {
  return {Label::terminal(w), std::move(compensation)};
}

void pair_steps(const CompTerm& pp, std::vector<CompensableStep>& out) {
  for (auto& s : raw_steps(pp.forward())) {
    if (!s.label.is_terminal()) {
      out.push_back({std::move(s.label), CompTerm::pair(std::move(s.successor), pp.compensation())});
    } else if (s.label.terminal() == Terminal::Tick) {
      out.push_back(comp_terminal(Terminal::Tick, pp.compensation()));
    } else {
      out.push_back(comp_terminal(s.label.terminal(), StdTerm::skip()));
    }
  }
}

// Steps of `running` once a predecessor has stored `stored`: normal steps
// stay inside the auxiliary state and termination puts the new compensation
// in front of the stored one.
void after_store_steps(const CompTerm& running, const StdTerm& stored, std::vector<CompensableStep>& out) {
  for (auto& u : raw_steps(running)) {
    if (!u.label.is_terminal()) {
      out.push_back({std::move(u.label), CompTerm::aux(u.next(), stored)});
    } else {
      out.push_back(comp_terminal(u.label.terminal(), StdTerm::seq(u.compensation(), stored)));
    }
  }
}

void cseq_steps(const CompTerm& pp, std::vector<CompensableStep>& out) {
  for (auto& s : raw_steps(pp.lhs())) {
    if (!s.label.is_terminal()) {
      out.push_back({std::move(s.label), CompTerm::seq(s.next(), pp.rhs())});
    } else if (s.label.terminal() == Terminal::Tick) {
      after_store_steps(pp.rhs(), s.compensation(), out);
    } else {
      out.push_back(comp_terminal(s.label.terminal(), s.compensation()));
    }
  }
}

void cpar_steps(const CompTerm& pp, std::vector<CompensableStep>& out) {
  auto left = raw_steps(pp.lhs());
  auto right = raw_steps(pp.rhs());
  for (auto& s : left) {
    if (!s.label.is_terminal()) out.push_back({s.label, CompTerm::par(s.next(), pp.rhs())});
  }
  for (auto& s : right) {
    if (!s.label.is_terminal()) out.push_back({s.label, CompTerm::par(pp.lhs(), s.next())});
  }
  for (const auto& s : left) {
    if (!s.label.is_terminal()) continue;
    for (const auto& u : right) {
      if (!u.label.is_terminal()) continue;
      for (auto w : sync_terminals(s.label.terminal(), u.label.terminal())) {
        out.push_back(comp_terminal(w, StdTerm::par(s.compensation(), u.compensation())));
      }
    }
  }
}

}  // namespace

std::vector<CompensableStep> raw_steps(const CompTerm& pp) {
  std::vector<CompensableStep> out;
  switch (pp.kind()) {
    case CompKind::Pair:
      pair_steps(pp, out);
      break;
    case CompKind::Seq:
      cseq_steps(pp, out);
      break;
    case CompKind::Aux:
      after_store_steps(pp.running(), pp.stored(), out);
      break;
    case CompKind::Par:
      cpar_steps(pp, out);
      break;
    case CompKind::Choice: {
      out = raw_steps(pp.lhs());
      auto right = raw_steps(pp.rhs());
      out.insert(out.end(), right.begin(), right.end());
      break;
    }
  }
  return out;
}

}  // namespace detail

namespace {

template <typename Step, typename PrintSuccessor>
std::vector<Step> canonical_steps(std::vector<Step> raw, PrintSuccessor print) {
  std::vector<std::pair<std::string, Step>> keyed;
  keyed.reserve(raw.size());
  for (auto& s : raw) keyed.emplace_back(print(s), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (auto c = a.second.label <=> b.second.label; c != 0) return c < 0;
    return a.first < b.first;
  });
  std::vector<Step> out;
  for (auto& [key, s] : keyed) {
    if (out.empty() || !(out.back() == s)) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<StandardStep> step_standard(const StdTerm& p) {
  return canonical_steps(detail::raw_steps(p), [](const StandardStep& s) { return pretty_print(s.successor); });
}

std::vector<CompensableStep> step_compensable(const CompTerm& pp) {
  return canonical_steps(detail::raw_steps(pp), [](const CompensableStep& s) {
    return std::visit([](const auto& t) { return pretty_print(t); }, s.successor);
  });
}

bool run_lifted(const StdTerm& p, const Trace& t) {
  // Walk the trace one event at a time over the current frontier of states.
  std::vector<StdTerm> frontier{p};
  for (const auto& e : t.events) {
    std::vector<StdTerm> next;
    for (const auto& state : frontier) {
      for (auto& s : detail::raw_steps(state)) {
        if (!s.label.is_terminal() && s.label.event() == e) next.push_back(std::move(s.successor));
      }
    }
    if (next.empty()) return false;
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
  }
  for (const auto& state : frontier) {
    for (const auto& s : detail::raw_steps(state)) {
      if (s.label.is_terminal() && s.label.terminal() == t.terminal) return true;
    }
  }
  return false;
}

// --- Explorer ----------------------------------------------------------------

namespace {

constexpr std::size_t kMemoFlushThreshold = 1u << 20;

Trace prepend(const Event& e, const Trace& t) {
  Trace out;
  out.terminal = t.terminal;
  out.events.reserve(t.events.size() + 1);
  out.events.push_back(e);
  out.events.insert(out.events.end(), t.events.begin(), t.events.end());
  return out;
}

}  // namespace

void Explorer::clear() {
  std_memo_.clear();
  comp_memo_.clear();
}

void Explorer::begin_query() {
  if (memo_size() > kMemoFlushThreshold) clear();
  visited_ = 0;
}

void Explorer::count_state() {
  if (++visited_ > state_cap_) throw StateCapExceeded(state_cap_);
}

const TraceSet& Explorer::explore(const StdTerm& p) {
  if (auto it = std_memo_.find(p); it != std_memo_.end()) return it->second;
  count_state();
  std::vector<Trace> out;
  for (const auto& s : detail::raw_steps(p)) {
    if (s.label.is_terminal()) {
      assert(s.successor.is_null());
      out.push_back(Trace{{}, s.label.terminal()});
      continue;
    }
    assert(s.successor.weight() < p.weight());
    for (const auto& t : explore(s.successor)) out.push_back(prepend(s.label.event(), t));
  }
  return std_memo_.emplace(p, TraceSet(std::move(out))).first->second;
}

const ForwardSet& Explorer::explore(const CompTerm& pp) {
  if (auto it = comp_memo_.find(pp); it != comp_memo_.end()) return it->second;
  count_state();
  std::vector<ForwardRun> out;
  for (const auto& s : detail::raw_steps(pp)) {
    if (s.label.is_terminal()) {
      assert(s.compensation().weight() < pp.weight());
      out.push_back(ForwardRun{Trace{{}, s.label.terminal()}, s.compensation()});
      continue;
    }
    assert(s.next().weight() < pp.weight());
    for (const auto& run : explore(s.next())) {
      out.push_back(ForwardRun{prepend(s.label.event(), run.trace), run.compensation});
    }
  }
  return comp_memo_.emplace(pp, ForwardSet(std::move(out))).first->second;
}

TraceSet Explorer::derived_traces(const StdTerm& p) {
  if (p.is_null()) throw std::invalid_argument("derived traces of the null process are undefined");
  begin_query();
  return explore(p);
}

ForwardSet Explorer::derived_forward(const CompTerm& pp) {
  begin_query();
  return explore(pp);
}

TracePairSet Explorer::derived_traces(const CompTerm& pp) {
  begin_query();
  std::vector<TracePair> out;
  for (const auto& run : explore(pp)) {
    for (const auto& t : explore(run.compensation)) out.push_back(TracePair{run.trace, t});
  }
  return TracePairSet(std::move(out));
}

TraceSet derived_traces_standard(const StdTerm& p, std::size_t state_cap) {
  return Explorer(state_cap).derived_traces(p);
}

ForwardSet derived_forward(const CompTerm& pp, std::size_t state_cap) {
  return Explorer(state_cap).derived_forward(pp);
}

TracePairSet derived_traces_compensable(const CompTerm& pp, std::size_t state_cap) {
  return Explorer(state_cap).derived_traces(pp);
}

}  // namespace ccsp
