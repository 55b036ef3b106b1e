#include "ccsp/trace.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace ccsp {

namespace {

constexpr std::array<std::string_view, 6> kReservedWords = {"SKIP",  "THROW",  "YIELD",
                                                            "SKIPP", "THROWW", "YIELDD"};

bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool is_reserved_word(std::string_view word) noexcept {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) != kReservedWords.end();
}

bool is_valid_event_name(std::string_view name) noexcept {
  if (name.empty() || !is_alpha(name.front())) return false;
  std::size_t i = 1;
  while (i < name.size() && (is_alnum(name[i]) || name[i] == '_')) ++i;
  while (i < name.size() && name[i] == '\'') ++i;
  return i == name.size() && !is_reserved_word(name);
}

Event::Event(std::string name) : name_(std::move(name)) {
  if (!is_valid_event_name(name_)) {
    throw std::invalid_argument("invalid event name '" + name_ + "'");
  }
}

Alphabet parse_alphabet(std::string_view list) {
  Alphabet out;
  while (true) {
    auto comma = list.find(',');
    auto item = trim(list.substr(0, comma));
    out.emplace_back(std::string(item));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Terminal> sync_terminals(Terminal a, Terminal b) { return {std::max(a, b)}; }

char terminal_glyph(Terminal t) noexcept {
  switch (t) {
    case Terminal::Tick:
      return '*';
    case Terminal::Yield:
      return '?';
    case Terminal::Throw:
      return '!';
  }
  return '*';
}

std::optional<Terminal> terminal_from_glyph(char c) noexcept {
  switch (c) {
    case '*':
      return Terminal::Tick;
    case '?':
      return Terminal::Yield;
    case '!':
      return Terminal::Throw;
    default:
      return std::nullopt;
  }
}

std::strong_ordering operator<=>(const Trace& a, const Trace& b) {
  if (auto c = a.events.size() <=> b.events.size(); c != 0) return c;
  if (auto c = a.events <=> b.events; c != 0) return c;
  return a.terminal <=> b.terminal;
}

Trace make_trace(std::initializer_list<std::string_view> events, Terminal terminal) {
  Trace t;
  t.terminal = terminal;
  t.events.reserve(events.size());
  for (auto e : events) t.events.emplace_back(std::string(e));
  return t;
}

std::string format_trace(const Trace& t) {
  std::string out = "<";
  for (const auto& e : t.events) {
    out += e.name();
    out += ',';
  }
  out += terminal_glyph(t.terminal);
  out += '>';
  return out;
}

std::string format_trace_pair(const TracePair& p) {
  return "(" + format_trace(p.forward) + "," + format_trace(p.compensation) + ")";
}

std::vector<std::string> trace_tokens(const Trace& t) {
  std::vector<std::string> out;
  out.reserve(t.events.size() + 1);
  for (const auto& e : t.events) out.push_back(e.name());
  out.emplace_back(1, terminal_glyph(t.terminal));
  return out;
}

Trace trace_from_tokens(std::span<const std::string> tokens) {
  if (tokens.empty()) throw std::invalid_argument("a trace needs a terminal token");
  Trace t;
  const auto& last = tokens.back();
  auto terminal = last.size() == 1 ? terminal_from_glyph(last[0]) : std::nullopt;
  if (!terminal) throw std::invalid_argument("trace must end with *, ! or ?, got '" + last + "'");
  t.terminal = *terminal;
  for (const auto& tok : tokens.first(tokens.size() - 1)) t.events.emplace_back(tok);
  return t;
}

Trace parse_trace(std::string_view text) {
  text = trim(text);
  if (text.size() < 3 || text.front() != '<' || text.back() != '>') {
    throw std::invalid_argument("malformed trace '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<std::string> tokens;
  while (true) {
    auto comma = text.find(',');
    tokens.emplace_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return trace_from_tokens(tokens);
}

TracePair parse_trace_pair(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("malformed trace pair '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  auto split = text.find('>');
  if (split == std::string_view::npos) {
    throw std::invalid_argument("malformed trace pair '" + std::string(text) + "'");
  }
  auto rest = trim(text.substr(split + 1));
  if (rest.empty() || rest.front() != ',') {
    throw std::invalid_argument("trace pair needs two traces");
  }
  return TracePair{parse_trace(text.substr(0, split + 1)), parse_trace(rest.substr(1))};
}

}  // namespace ccsp
