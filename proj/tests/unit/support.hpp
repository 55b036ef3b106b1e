#pragma once

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ccsp/parser.hpp"
#include "ccsp/trace.hpp"

namespace ccsp {

// Readable parameter values in test names.
inline void PrintTo(TermKind kind, std::ostream* os) {
  *os << (kind == TermKind::Standard ? "standard" : "compensable");
}

}  // namespace ccsp

namespace ccsp::test {

inline StdTerm S(std::string_view text) { return parse_standard(text); }
inline CompTerm C(std::string_view text) { return parse_compensable(text); }

inline TraceSet traces(std::initializer_list<std::string_view> items) {
  std::vector<Trace> out;
  for (auto s : items) out.push_back(parse_trace(s));
  return TraceSet(std::move(out));
}

inline TracePairSet pairs(std::initializer_list<std::string_view> items) {
  std::vector<TracePair> out;
  for (auto s : items) out.push_back(parse_trace_pair(s));
  return TracePairSet(std::move(out));
}

struct GoldenRow {
  std::string kind;
  std::string term;
  std::vector<std::string> members;
};

inline std::vector<GoldenRow> load_golden(const std::string& name) {
  std::ifstream in(std::string(CCSP_GOLDEN_DIR) + "/" + name);
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    GoldenRow row;
    std::string set;
    std::getline(fields, row.kind, '\t');
    std::getline(fields, row.term, '\t');
    std::getline(fields, set);
    std::istringstream members(set);
    for (std::string m; members >> m;) row.members.push_back(m);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ccsp::test
