#include "ccsp/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccsp {

TermEnumerator::TermEnumerator(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
  if (alphabet_.empty()) throw std::invalid_argument("enumeration needs a nonempty alphabet");
}

const std::vector<StdTerm>& TermEnumerator::standard(std::size_t ops) {
  while (std_levels_.size() <= ops) {
    std::size_t level = std_levels_.size();
    std::vector<StdTerm> terms;
    each_standard(level, [&](const StdTerm& t) { terms.push_back(t); });
    std_levels_.push_back(std::move(terms));
  }
  return std_levels_[ops];
}

const std::vector<CompTerm>& TermEnumerator::compensable(std::size_t ops) {
  while (comp_levels_.size() <= ops) {
    std::size_t level = comp_levels_.size();
    std::vector<CompTerm> terms;
    each_compensable(level, [&](const CompTerm& t) { terms.push_back(t); });
    comp_levels_.push_back(std::move(terms));
  }
  return comp_levels_[ops];
}

void TermEnumerator::each_standard(std::size_t ops, const std::function<void(const StdTerm&)>& fn) {
  if (ops < std_levels_.size()) {
    for (const auto& t : std_levels_[ops]) fn(t);
    return;
  }
  if (ops == 0) {
    for (const auto& e : alphabet_) fn(StdTerm::atom(e));
    fn(StdTerm::skip());
    fn(StdTerm::throw_());
    fn(StdTerm::yield());
    return;
  }
  // Make sure every level used below exists before taking references.
  standard(ops - 1);
  compensable(ops - 1);
  for (auto make : {&StdTerm::seq, &StdTerm::choice, &StdTerm::par, &StdTerm::interrupt}) {
    for (std::size_t left = 0; left < ops; ++left) {
      for (const auto& l : std_levels_[left]) {
        for (const auto& r : std_levels_[ops - 1 - left]) fn(make(l, r));
      }
    }
  }
  for (const auto& body : comp_levels_[ops - 1]) fn(StdTerm::block(body));
}

void TermEnumerator::each_compensable(std::size_t ops, const std::function<void(const CompTerm&)>& fn) {
  if (ops < comp_levels_.size()) {
    for (const auto& t : comp_levels_[ops]) fn(t);
    return;
  }
  // Make sure every level used below exists before taking references.
  standard(ops);
  if (ops > 0) compensable(ops - 1);
  for (std::size_t left = 0; left <= ops; ++left) {
    for (const auto& l : std_levels_[left]) {
      for (const auto& r : std_levels_[ops - left]) fn(CompTerm::pair(l, r));
    }
  }
  if (ops == 0) return;
  for (auto make : {&CompTerm::seq, &CompTerm::choice, &CompTerm::par}) {
    for (std::size_t left = 0; left < ops; ++left) {
      for (const auto& l : comp_levels_[left]) {
        for (const auto& r : comp_levels_[ops - 1 - left]) fn(make(l, r));
      }
    }
  }
}

void for_each_term(std::size_t max_ops, const Alphabet& alphabet, TermKind kind,
                   const std::function<void(const AnyTerm&)>& fn) {
  TermEnumerator terms(alphabet);
  for (std::size_t ops = 0; ops <= max_ops; ++ops) {
    if (kind == TermKind::Standard) {
      terms.each_standard(ops, [&](const StdTerm& t) { fn(t); });
    } else {
      terms.each_compensable(ops, [&](const CompTerm& t) { fn(t); });
    }
  }
}

std::vector<AnyTerm> enumerate_terms(std::size_t max_ops, const Alphabet& alphabet, TermKind kind) {
  std::vector<AnyTerm> out;
  for_each_term(max_ops, alphabet, kind, [&](const AnyTerm& t) { out.push_back(t); });
  return out;
}

}  // namespace ccsp
