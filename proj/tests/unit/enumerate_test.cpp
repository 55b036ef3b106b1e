#include <gtest/gtest.h>

#include <unordered_set>

#include "ccsp/enumerate.hpp"
#include "support.hpp"

namespace ccsp {
namespace {

std::size_t count(std::size_t ops, const Alphabet& ab, TermKind kind) {
  std::size_t n = 0;
  for_each_term(ops, ab, kind, [&](const AnyTerm&) { ++n; });
  return n;
}

TEST(Enumerate, LeavesOnly) {
  auto terms = enumerate_terms(0, parse_alphabet("a"), TermKind::Standard);
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0], AnyTerm{test::S("a")});
  EXPECT_EQ(terms[1], AnyTerm{test::S("SKIP")});
  EXPECT_EQ(terms[2], AnyTerm{test::S("THROW")});
  EXPECT_EQ(terms[3], AnyTerm{test::S("YIELD")});
}

TEST(Enumerate, OneOperator) {
  // 4 leaves + 4 binary operators over 4x4 leaves + blocks over 16 pairs.
  EXPECT_EQ(count(1, parse_alphabet("a"), TermKind::Standard), 4u + 64u + 16u);
}

TEST(Enumerate, LevelSizesForTwoEvents) {
  TermEnumerator e(parse_alphabet("a,b"));
  EXPECT_EQ(e.standard(0).size(), 5u);
  EXPECT_EQ(e.standard(1).size(), 125u);
  EXPECT_EQ(e.standard(2).size(), 8125u);
  EXPECT_EQ(e.compensable(0).size(), 25u);
  EXPECT_EQ(e.compensable(1).size(), 3125u);
}

TEST(Enumerate, OperatorCountsMatchLevel) {
  TermEnumerator e(parse_alphabet("a,b"));
  for (std::size_t ops = 0; ops <= 2; ++ops) {
    for (const auto& t : e.standard(ops)) ASSERT_EQ(op_count(t), ops);
    for (const auto& t : e.compensable(ops)) ASSERT_EQ(op_count(t), ops);
  }
}

TEST(Enumerate, DuplicateFree) {
  for (auto kind : {TermKind::Standard, TermKind::Compensable}) {
    auto terms = enumerate_terms(2, parse_alphabet("a"), kind);
    std::unordered_set<std::string> seen;
    for (const auto& t : terms) EXPECT_TRUE(seen.insert(pretty_print(t)).second) << pretty_print(t);
    EXPECT_EQ(seen.size(), terms.size());
  }
}

TEST(Enumerate, StreamingMatchesMaterialised) {
  TermEnumerator cached(parse_alphabet("a,b"));
  TermEnumerator streaming(parse_alphabet("a,b"));
  std::vector<StdTerm> streamed;
  streaming.each_standard(2, [&](const StdTerm& t) { streamed.push_back(t); });
  EXPECT_EQ(streamed, cached.standard(2));
}

TEST(Enumerate, RejectsEmptyAlphabet) { EXPECT_THROW(TermEnumerator(Alphabet{}), std::invalid_argument); }

}  // namespace
}  // namespace ccsp
