#include <gtest/gtest.h>

#include "ccsp/enumerate.hpp"
#include "ccsp/equivalence.hpp"
#include "support.hpp"

namespace ccsp {
namespace {

using test::C;
using test::pairs;
using test::S;
using test::traces;

// Success condition of sequential composition flipped from success to throw.
Trace mutant_seq(const Trace& p, const Trace& q) {
  if (p.terminal != Terminal::Throw) return p;
  Trace out{p.events, q.terminal};
  out.events.insert(out.events.end(), q.events.begin(), q.events.end());
  return out;
}

TEST(Check, StandardWorkedValues) {
  auto skip = check_standard(S("SKIP"));
  EXPECT_TRUE(skip.equal());
  EXPECT_EQ(skip.operational, traces({"<*>"}));

  auto par = check_standard(S("(a || THROW) ; b"));
  EXPECT_TRUE(par.equal());
  EXPECT_EQ(par.denotational, traces({"<a,!>"}));

  auto block = check_standard(S("[ a % b ; THROWW ]"));
  EXPECT_TRUE(block.equal());
  EXPECT_EQ(block.denotational, traces({"<a,b,*>"}));
}

TEST(Check, CompensableWorkedValues) {
  auto skipp = check_compensable(C("SKIPP"));
  EXPECT_TRUE(skipp.equal());
  EXPECT_EQ(skipp.denotational, pairs({"(<*>,<*>)"}));

  auto aborted = check_compensable(C("a % a' ; THROWW"));
  EXPECT_TRUE(aborted.equal());
  EXPECT_EQ(aborted.denotational, pairs({"(<a,!>,<a',*>)"}));

  auto par = check_compensable(C("a % a' || b % b'"));
  EXPECT_TRUE(par.equal());
  EXPECT_EQ(par.operational.size(), 4u);
}

TEST(Check, GoldenTraceSets) {
  auto rows = test::load_golden("trace_sets.tsv");
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) {
    if (row.kind == "std") {
      std::vector<Trace> want;
      for (const auto& m : row.members) want.push_back(parse_trace(m));
      auto v = check_standard(S(row.term));
      EXPECT_EQ(v.operational, TraceSet(want)) << row.term;
      EXPECT_EQ(v.denotational, TraceSet(want)) << row.term;
    } else {
      std::vector<TracePair> want;
      for (const auto& m : row.members) want.push_back(parse_trace_pair(m));
      auto v = check_compensable(C(row.term));
      EXPECT_EQ(v.operational, TracePairSet(want)) << row.term;
      EXPECT_EQ(v.denotational, TracePairSet(want)) << row.term;
    }
  }
}

TEST(Check, RejectsRuntimeOnlyTerms) {
  EXPECT_THROW(check_compensable(CompTerm::aux(C("a % b"), S("SKIP"))), std::invalid_argument);
  EXPECT_THROW(check_standard(StdTerm::null()), std::invalid_argument);
}

TEST(Lemma, Signatures) {
  using K = TermKind;
  EXPECT_EQ(lemma_signature(1), (std::vector<K>{K::Standard, K::Standard}));
  EXPECT_EQ(lemma_signature(3), (std::vector<K>{K::Compensable, K::Compensable}));
  EXPECT_EQ(lemma_signature(4), (std::vector<K>{K::Compensable, K::Standard}));
  EXPECT_EQ(lemma_signature(7), (std::vector<K>{K::Compensable}));
  EXPECT_THROW(lemma_signature(0), std::invalid_argument);
  EXPECT_THROW(lemma_signature(8), std::invalid_argument);
}

TEST(Lemma, WorkedValues) {
  std::vector<AnyTerm> l1{S("a"), S("THROW")};
  auto r1 = check_lemma(1, l1);
  EXPECT_TRUE(r1.equal());
  EXPECT_EQ(r1.lhs_size, 1u);

  std::vector<AnyTerm> l4{C("SKIP % q"), S("p")};
  EXPECT_TRUE(check_lemma(4, l4).equal());

  std::vector<AnyTerm> l7{C("THROWW")};
  auto r7 = check_lemma(7, l7);
  EXPECT_TRUE(r7.equal());
  EXPECT_EQ(r7.rhs_size, 1u);
  EXPECT_TRUE(r7.coverage.forward_throw);
}

TEST(Lemma, CondCoverage) {
  std::vector<AnyTerm> success{C("a % b"), C("c % d")};
  auto r = check_lemma(3, success);
  EXPECT_TRUE(r.equal());
  EXPECT_TRUE(r.coverage.cond_success);
  EXPECT_FALSE(r.coverage.cond_failure);

  std::vector<AnyTerm> failure{C("THROWW"), C("c % d")};
  auto f = check_lemma(3, failure);
  EXPECT_TRUE(f.equal());
  EXPECT_TRUE(f.coverage.cond_failure);
}

TEST(Lemma, RejectsWrongOperands) {
  std::vector<AnyTerm> wrong{C("a % b"), S("c")};
  EXPECT_THROW(check_lemma(1, wrong), std::invalid_argument);
  std::vector<AnyTerm> too_few{S("a")};
  EXPECT_THROW(check_lemma(2, too_few), std::invalid_argument);
}

TEST(Mutation, FlippedSeqConditionIsDetected) {
  TraceOperators ops;
  ops.seq = &mutant_seq;
  Checker mutant(kDefaultStateCap, ops);
  auto v = mutant.check(S("a ; b"));
  EXPECT_EQ(v.status, Status::Mismatch);

  std::size_t mismatches = 0;
  for_each_term(1, parse_alphabet("a"), TermKind::Standard, [&](const AnyTerm& t) {
    if (!mutant.check(std::get<StdTerm>(t)).equal()) ++mismatches;
  });
  EXPECT_GT(mismatches, 0u);
}

TEST(Mutation, CounterexamplesAreSound) {
  // Every trace reported only by the derivation is a real run, and every
  // trace reported only by the mutant denotation is not.
  TraceOperators ops;
  ops.seq = &mutant_seq;
  Checker mutant(kDefaultStateCap, ops);
  std::size_t seen = 0;
  for_each_term(2, parse_alphabet("a"), TermKind::Standard, [&](const AnyTerm& t) {
    const auto& p = std::get<StdTerm>(t);
    auto v = mutant.check(p);
    for (const auto& x : v.only_operational) {
      EXPECT_TRUE(run_lifted(p, x)) << pretty_print(p);
      ++seen;
    }
    for (const auto& x : v.only_denotational) {
      EXPECT_FALSE(run_lifted(p, x)) << pretty_print(p);
      ++seen;
    }
  });
  EXPECT_GT(seen, 0u);
}

}  // namespace
}  // namespace ccsp
