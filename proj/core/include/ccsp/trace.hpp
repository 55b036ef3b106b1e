#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ccsp {

/// A normal observable action. Names are identifiers: a letter, then letters,
/// digits or underscores, then any number of trailing primes (`a''`).
/// The reserved process keywords are never event names.
class Event {
 public:
  explicit Event(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Event&, const Event&) = default;
  friend std::strong_ordering operator<=>(const Event&, const Event&) = default;

 private:
  std::string name_;
};

bool is_reserved_word(std::string_view word) noexcept;
bool is_valid_event_name(std::string_view name) noexcept;

using Alphabet = std::vector<Event>;

/// Parses a comma separated list such as "a,b,c" into a sorted, duplicate-free
/// alphabet. Throws std::invalid_argument on a malformed name.
Alphabet parse_alphabet(std::string_view list);

/// Terminal events. The enumerator order is the synchronisation order
/// Tick < Yield < Throw.
enum class Terminal : std::uint8_t { Tick, Yield, Throw };

/// Synchronisation of the terminals of two parallel branches: the join in
/// Tick < Yield < Throw, so a throw on one side overrides a yield on the
/// other. Set-valued to match its use as `w in w1 & w2`; always a singleton.
std::vector<Terminal> sync_terminals(Terminal a, Terminal b);

/// `*` for success, `?` for yield, `!` for throw.
char terminal_glyph(Terminal t) noexcept;
std::optional<Terminal> terminal_from_glyph(char c) noexcept;

/// A finite sequence of events closed by exactly one terminal.
struct Trace {
  std::vector<Event> events;
  Terminal terminal = Terminal::Tick;

  friend bool operator==(const Trace&, const Trace&) = default;
  // Canonical order: shorter first, then lexicographic with the terminal last.
  friend std::strong_ordering operator<=>(const Trace& a, const Trace& b);
};

Trace make_trace(std::initializer_list<std::string_view> events, Terminal terminal);

/// Forward behaviour paired with the behaviour of its compensation.
struct TracePair {
  Trace forward;
  Trace compensation;

  friend bool operator==(const TracePair&, const TracePair&) = default;
  friend std::strong_ordering operator<=>(const TracePair&, const TracePair&) = default;
};

/// Finite set kept as a sorted, duplicate-free vector so that equality and
/// iteration order are canonical.
template <typename T>
class CanonicalSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  CanonicalSet() = default;
  CanonicalSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit CanonicalSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::vector<T>& items() const noexcept { return items_; }

  bool contains(const T& item) const {
    return std::binary_search(items_.begin(), items_.end(), item);
  }

  friend bool operator==(const CanonicalSet&, const CanonicalSet&) = default;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

/// Members of `a` that are not in `b`, in canonical order.
template <typename T>
CanonicalSet<T> set_difference(const CanonicalSet<T>& a, const CanonicalSet<T>& b) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return CanonicalSet<T>(std::move(out));
}

using TraceSet = CanonicalSet<Trace>;
using TracePairSet = CanonicalSet<TracePair>;

// Serialization: `<a,b,*>` for traces and `(<a,*>,<b,*>)` for pairs.
std::string format_trace(const Trace& t);
std::string format_trace_pair(const TracePair& p);
Trace parse_trace(std::string_view text);
TracePair parse_trace_pair(std::string_view text);

/// Machine form: the events followed by the terminal glyph, one token each.
std::vector<std::string> trace_tokens(const Trace& t);
Trace trace_from_tokens(std::span<const std::string> tokens);

}  // namespace ccsp
