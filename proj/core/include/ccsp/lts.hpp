#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ccsp/operational.hpp"
#include "ccsp/syntax.hpp"

namespace ccsp {

/// Reachable transition graph of a term. Nodes are numbered in breadth-first
/// discovery order with steps taken in canonical order; node 0 is the root.
/// For a compensable root, terminal edges lead to the stored compensation,
/// which is explored further as a standard process.
struct Lts {
  struct Edge {
    std::size_t from;
    Label label;
    std::size_t to;
  };

  std::vector<AnyTerm> nodes;
  std::vector<Edge> edges;
  std::size_t root = 0;
};

/// Throws StateCapExceeded when more than `state_cap` nodes are reachable.
Lts build_lts(const AnyTerm& term, std::size_t state_cap = kDefaultStateCap);

/// Graphviz rendering: nodes labelled with printed terms, edges with the
/// event name or `*`, `!`, `?`.
std::string to_dot(const Lts& lts);

}  // namespace ccsp
