#include "ccsp/denotational.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsp {

namespace {

Trace concat(const Trace& p, const Trace& q) {
  Trace out;
  out.events.reserve(p.events.size() + q.events.size());
  out.events = p.events;
  out.events.insert(out.events.end(), q.events.begin(), q.events.end());
  out.terminal = q.terminal;
  return out;
}

void shuffle(std::span<const Event> s, std::span<const Event> u, std::vector<Event>& prefix,
             std::vector<std::vector<Event>>& out) {
  if (s.empty() && u.empty()) {
    out.push_back(prefix);
    return;
  }
  if (!s.empty()) {
    prefix.push_back(s.front());
    shuffle(s.subspan(1), u, prefix, out);
    prefix.pop_back();
  }
  if (!u.empty()) {
    prefix.push_back(u.front());
    shuffle(s, u.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Trace seq_traces(const Trace& p, const Trace& q) {
  if (p.terminal == Terminal::Tick) return concat(p, q);
  return p;
}

Trace interrupt_traces(const Trace& p, const Trace& q) {
  if (p.terminal == Terminal::Throw) return concat(p, q);
  return p;
}

std::vector<std::vector<Event>> interleave_events(std::span<const Event> s, std::span<const Event> u) {
  std::vector<std::vector<Event>> out;
  std::vector<Event> prefix;
  prefix.reserve(s.size() + u.size());
  shuffle(s, u, prefix, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TraceSet par_traces(const Trace& p, const Trace& q) {
  std::vector<Trace> out;
  auto terminals = sync_terminals(p.terminal, q.terminal);
  for (auto& events : interleave_events(p.events, q.events)) {
    for (auto w : terminals) out.push_back(Trace{events, w});
  }
  return TraceSet(std::move(out));
}

TracePair pair_traces(const Trace& p, const Trace& q) {
  if (p.terminal == Terminal::Tick) return TracePair{p, q};
  return TracePair{p, Trace{{}, Terminal::Tick}};
}

std::optional<Trace> block_traces(const Trace& p, const Trace& compensation) {
  switch (p.terminal) {
    case Terminal::Tick:
      return p;
    case Terminal::Throw:
      return concat(p, compensation);
    case Terminal::Yield:
      return std::nullopt;
  }
  return std::nullopt;
}

// --- Denotation ----------------------------------------------------------------

void Denotation::clear() {
  std_memo_.clear();
  comp_memo_.clear();
}

const TraceSet& Denotation::traces(const StdTerm& p) {
  if (auto it = std_memo_.find(p); it != std_memo_.end()) return it->second;
  auto value = compute(p);
  return std_memo_.emplace(p, std::move(value)).first->second;
}

const TracePairSet& Denotation::traces(const CompTerm& pp) {
  if (auto it = comp_memo_.find(pp); it != comp_memo_.end()) return it->second;
  auto value = compute(pp);
  return comp_memo_.emplace(pp, std::move(value)).first->second;
}

TraceSet Denotation::compute(const StdTerm& p) {
  std::vector<Trace> out;
  switch (p.kind()) {
    case StdKind::Atom:
      out.push_back(Trace{{p.event()}, Terminal::Tick});
      break;
    case StdKind::Skip:
      out.push_back(Trace{{}, Terminal::Tick});
      break;
    case StdKind::Throw:
      out.push_back(Trace{{}, Terminal::Throw});
      break;
    case StdKind::Yield:
      out.push_back(Trace{{}, Terminal::Yield});
      out.push_back(Trace{{}, Terminal::Tick});
      break;
    case StdKind::Seq:
    case StdKind::Interrupt: {
      auto op = p.kind() == StdKind::Seq ? ops_.seq : ops_.interrupt;
      const auto& left = traces(p.lhs());
      const auto& right = traces(p.rhs());
      for (const auto& a : left) {
        for (const auto& b : right) out.push_back(op(a, b));
      }
      break;
    }
    case StdKind::Choice: {
      const auto& left = traces(p.lhs());
      const auto& right = traces(p.rhs());
      out.assign(left.begin(), left.end());
      out.insert(out.end(), right.begin(), right.end());
      break;
    }
    case StdKind::Par: {
      const auto& left = traces(p.lhs());
      const auto& right = traces(p.rhs());
      for (const auto& a : left) {
        for (const auto& b : right) {
          auto merged = ops_.par(a, b);
          out.insert(out.end(), merged.begin(), merged.end());
        }
      }
      break;
    }
    case StdKind::Block:
      for (const auto& tp : traces(p.body())) {
        if (auto t = ops_.block(tp.forward, tp.compensation)) out.push_back(std::move(*t));
      }
      break;
    case StdKind::Null:
      throw std::invalid_argument("the null process has no trace semantics");
  }
  return TraceSet(std::move(out));
}

TracePairSet Denotation::compute(const CompTerm& pp) {
  std::vector<TracePair> out;
  switch (pp.kind()) {
    case CompKind::Pair: {
      const auto& fwd = traces(pp.forward());
      const auto& comp = traces(pp.compensation());
      for (const auto& p : fwd) {
        for (const auto& q : comp) out.push_back(ops_.pair(p, q));
      }
      break;
    }
    case CompKind::Seq: {
      // Compensations of completed steps accumulate in reverse order.
      const auto& left = traces(pp.lhs());
      const auto& right = traces(pp.rhs());
      for (const auto& [p, p_comp] : left) {
        if (p.terminal != Terminal::Tick) {
          out.push_back(TracePair{p, p_comp});
          continue;
        }
        for (const auto& [q, q_comp] : right) {
          out.push_back(TracePair{ops_.seq(p, q), ops_.seq(q_comp, p_comp)});
        }
      }
      break;
    }
    case CompKind::Choice: {
      const auto& left = traces(pp.lhs());
      const auto& right = traces(pp.rhs());
      out.assign(left.begin(), left.end());
      out.insert(out.end(), right.begin(), right.end());
      break;
    }
    case CompKind::Par: {
      const auto& left = traces(pp.lhs());
      const auto& right = traces(pp.rhs());
      for (const auto& [p, p_comp] : left) {
        for (const auto& [q, q_comp] : right) {
          auto forward = ops_.par(p, q);
          auto backward = ops_.par(p_comp, q_comp);
          for (const auto& f : forward) {
            for (const auto& b : backward) out.push_back(TracePair{f, b});
          }
        }
      }
      break;
    }
    case CompKind::Aux:
      throw std::invalid_argument("the auxiliary construct has no trace semantics");
  }
  return TracePairSet(std::move(out));
}

TraceSet traces_standard(const StdTerm& p) { return Denotation().traces(p); }

TracePairSet traces_compensable(const CompTerm& pp) { return Denotation().traces(pp); }

bool is_healthy(const TraceSet& traces) {
  return std::any_of(traces.begin(), traces.end(),
                     [](const Trace& t) { return t.terminal == Terminal::Tick || t.terminal == Terminal::Throw; });
}

bool is_healthy(const TracePairSet& traces) {
  return std::any_of(traces.begin(), traces.end(), [](const TracePair& t) {
    return t.forward.terminal == Terminal::Tick || t.forward.terminal == Terminal::Throw;
  });
}

bool check_healthiness(const StdTerm& p) { return is_healthy(traces_standard(p)); }
bool check_healthiness(const CompTerm& pp) { return is_healthy(traces_compensable(pp)); }
bool check_healthiness(const AnyTerm& t) {
  return std::visit([](const auto& x) { return check_healthiness(x); }, t);
}

}  // namespace ccsp
