#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ccsp/syntax.hpp"

namespace ccsp {

/// Bounded exhaustive enumeration of user terms by operator count (see
/// op_count). Every term appears once. Order: by operator count, then by
/// constructor (Atom in alphabet order, SKIP, THROW, YIELD, `;`, `[]`, `||`,
/// `|>`, block; pairs before `;`, `[]`, `||` on the compensable side), then
/// by split point and operands in their own enumeration order.
class TermEnumerator {
 public:
  explicit TermEnumerator(Alphabet alphabet);

  /// Terms with exactly `ops` operator nodes, materialised and cached.
  const std::vector<StdTerm>& standard(std::size_t ops);
  const std::vector<CompTerm>& compensable(std::size_t ops);

  /// Streams the terms with exactly `ops` operator nodes without caching that
  /// level; the smaller levels it is built from are cached.
  void each_standard(std::size_t ops, const std::function<void(const StdTerm&)>& fn);
  void each_compensable(std::size_t ops, const std::function<void(const CompTerm&)>& fn);

 private:
  Alphabet alphabet_;
  std::vector<std::vector<StdTerm>> std_levels_;
  std::vector<std::vector<CompTerm>> comp_levels_;
};

/// All terms with at most `max_ops` operator nodes, streamed in order.
void for_each_term(std::size_t max_ops, const Alphabet& alphabet, TermKind kind,
                   const std::function<void(const AnyTerm&)>& fn);

std::vector<AnyTerm> enumerate_terms(std::size_t max_ops, const Alphabet& alphabet, TermKind kind);

}  // namespace ccsp
