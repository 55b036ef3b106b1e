#include <gtest/gtest.h>

#include "ccsp/campaign.hpp"

namespace ccsp {
namespace {

std::vector<std::string> transcript(std::uint64_t seed) {
  std::vector<std::string> lines;
  run_random(seed, 200, 5, parse_alphabet("a,b"), KindSelection::Both, {},
             [&](const CaseRecord& r) { lines.push_back(r.line()); });
  return lines;
}

TEST(Campaign, RandomIsDeterministicAndEqual) {
  auto first = transcript(7);
  EXPECT_EQ(first, transcript(7));
  EXPECT_NE(first, transcript(8));
  auto s = run_random(7, 200, 5, parse_alphabet("a,b"), KindSelection::Both);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.equal, 200u);
  EXPECT_EQ(s.standard_cases, 100u);
  EXPECT_EQ(s.compensable_cases, 100u);
}

TEST(Campaign, EnumerationSmall) {
  auto s = run_enumeration(1, parse_alphabet("a,b"), TermKind::Standard);
  EXPECT_EQ(s.cases, 130u);
  EXPECT_TRUE(s.ok());
  auto c = run_enumeration(1, parse_alphabet("a,b"), TermKind::Compensable);
  EXPECT_EQ(c.cases, 25u + 3125u);
  EXPECT_TRUE(c.ok());
}

TEST(Campaign, CapHitsAreRecorded) {
  CampaignOptions tiny;
  tiny.state_cap = 2;
  auto s = run_random(3, 20, 5, parse_alphabet("a,b"), KindSelection::Standard, tiny);
  EXPECT_GT(s.cap_hits, 0u);
  EXPECT_FALSE(s.ok());
  ASSERT_TRUE(s.first_failure.has_value());
  EXPECT_TRUE(s.first_failure->cap_hit);
}

TEST(Campaign, LemmaSuitesHold) {
  for (int lemma = 1; lemma <= 7; ++lemma) {
    auto s = run_lemma_suite(lemma, 11, 60, 4, parse_alphabet("a,b"));
    EXPECT_TRUE(s.ok()) << "lemma " << lemma;
    EXPECT_EQ(s.cases, 60u);
  }
}

TEST(Campaign, LemmaOperandsFollowSignature) {
  for (int lemma = 1; lemma <= 7; ++lemma) {
    auto ops = lemma_operands(lemma, 1, 0, 4, parse_alphabet("a"));
    auto sig = lemma_signature(lemma);
    ASSERT_EQ(ops.size(), sig.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      EXPECT_EQ(std::holds_alternative<StdTerm>(ops[i]), sig[i] == TermKind::Standard);
      EXPECT_LE(depth(ops[i]), 3u);
    }
  }
}

TEST(Campaign, MutantIsCaught) {
  CampaignOptions mutant;
  mutant.operators.seq = [](const Trace& p, const Trace& q) {
    if (p.terminal != Terminal::Throw) return p;
    Trace out{p.events, q.terminal};
    out.events.insert(out.events.end(), q.events.begin(), q.events.end());
    return out;
  };
  auto s = run_enumeration(1, parse_alphabet("a"), TermKind::Standard, mutant);
  EXPECT_GT(s.mismatches, 0u);
  ASSERT_TRUE(s.first_failure.has_value());
  EXPECT_FALSE(s.first_failure->only_operational.empty() && s.first_failure->only_denotational.empty());
}

}  // namespace
}  // namespace ccsp
