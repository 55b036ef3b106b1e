#include <gtest/gtest.h>

#include "ccsp/generator.hpp"
#include "ccsp/syntax.hpp"
#include "support.hpp"

namespace ccsp {
namespace {

using test::C;
using test::S;

TEST(Syntax, StructuralEqualityAndHashing) {
  auto x = StdTerm::seq(StdTerm::atom("a"), StdTerm::throw_());
  auto y = StdTerm::seq(StdTerm::atom("a"), StdTerm::throw_());
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.hash(), y.hash());
  EXPECT_NE(x, StdTerm::seq(StdTerm::atom("b"), StdTerm::throw_()));
  EXPECT_NE(StdTerm::seq(StdTerm::skip(), StdTerm::throw_()), StdTerm::par(StdTerm::skip(), StdTerm::throw_()));
}

TEST(Syntax, WrongKindAccessThrows) {
  EXPECT_THROW(StdTerm::skip().lhs(), std::logic_error);
  EXPECT_THROW(StdTerm::skip().event(), std::logic_error);
  EXPECT_THROW(CompTerm::pair(StdTerm::skip(), StdTerm::skip()).lhs(), std::logic_error);
}

TEST(Syntax, AliasesDesugarToPairs) {
  EXPECT_EQ(desugar_alias("SKIPP"), CompTerm::pair(StdTerm::skip(), StdTerm::skip()));
  EXPECT_EQ(desugar_alias("YIELDD"), CompTerm::pair(StdTerm::yield(), StdTerm::skip()));
  EXPECT_EQ(desugar_alias("THROWW"), CompTerm::pair(StdTerm::throw_(), StdTerm::skip()));
  EXPECT_THROW(desugar_alias("SKIP"), std::invalid_argument);
}

TEST(Syntax, ValidateAcceptsUserTerms) {
  EXPECT_TRUE(validate_user_term(AnyTerm{StdTerm::atom("a")}).empty());
}

TEST(Syntax, ValidateRejectsNullAndAux) {
  auto null = validate_user_term(AnyTerm{StdTerm::null()});
  ASSERT_EQ(null.size(), 1u);
  EXPECT_EQ(null[0].kind, Violation::Kind::NullNode);
  EXPECT_EQ(null[0].path, "root");

  auto aux = CompTerm::aux(CompTerm::pair(StdTerm::atom("a"), StdTerm::atom("b")), StdTerm::skip());
  auto v = validate_user_term(AnyTerm{aux});
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, Violation::Kind::AuxNode);

  auto nested = StdTerm::seq(StdTerm::skip(), StdTerm::null());
  auto w = validate_user_term(AnyTerm{nested});
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].path, "root.rhs");
}

TEST(Syntax, ValidateChecksAlphabet) {
  auto v = validate_user_term(AnyTerm{S("a ; c")}, parse_alphabet("a,b"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::UnknownEvent);
}

TEST(PrettyPrint, WorkedValues) {
  EXPECT_EQ(pretty_print(StdTerm::seq(StdTerm::atom("a"), StdTerm::throw_())), "a ; THROW");
  EXPECT_EQ(pretty_print(StdTerm::block(CompTerm::pair(StdTerm::atom("a"), StdTerm::atom("b")))), "[ a % b ]");
  EXPECT_EQ(pretty_print(StdTerm::par(StdTerm::seq(StdTerm::atom("a"), StdTerm::atom("b")), StdTerm::skip())),
            "(a ; b) || SKIP");
}

TEST(PrettyPrint, ResugarsAliasesAndParenthesisesRightNesting) {
  EXPECT_EQ(pretty_print(C("THROW % SKIP")), "THROWW");
  EXPECT_EQ(pretty_print(StdTerm::seq(StdTerm::atom("a"), StdTerm::seq(StdTerm::atom("b"), StdTerm::skip()))),
            "a ; (b ; SKIP)");
  EXPECT_EQ(pretty_print(StdTerm::seq(StdTerm::seq(StdTerm::atom("a"), StdTerm::atom("b")), StdTerm::skip())),
            "a ; b ; SKIP");
  EXPECT_EQ(pretty_print(AnyTerm{StdTerm::null()}), "0");
}

TEST(Syntax, OperatorCountAndDepthSkipPairs) {
  EXPECT_EQ(op_count(S("a")), 0u);
  EXPECT_EQ(op_count(S("a ; b || c")), 2u);
  EXPECT_EQ(op_count(C("a % b")), 0u);
  EXPECT_EQ(op_count(S("[ a % b ]")), 1u);
  EXPECT_EQ(op_count(C("(a ; b) % c")), 1u);
  EXPECT_EQ(depth(S("a")), 1u);
  EXPECT_EQ(depth(S("a ; b")), 2u);
  EXPECT_EQ(depth(C("a % b")), 1u);
  EXPECT_EQ(depth(S("[ a % b ; c % d ]")), 3u);
}

TEST(Syntax, InferAlphabetCollectsEvents) {
  auto ab = infer_alphabet(AnyTerm{S("b ; [ a % c ] ; b")});
  ASSERT_EQ(ab.size(), 3u);
  EXPECT_EQ(ab[0].name(), "a");
  EXPECT_EQ(ab[2].name(), "c");
}

class GeneratedTerms : public ::testing::TestWithParam<TermKind> {};

TEST_P(GeneratedTerms, RoundTripAndValidate) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = 5;
    cfg.alphabet = parse_alphabet("a,b,c'");
    cfg.kind = GetParam();
    auto t = gen_term(cfg);
    auto text = pretty_print(t);
    EXPECT_EQ(parse_term(text, cfg.kind), t) << text;
    EXPECT_TRUE(validate_user_term(t, cfg.alphabet).empty()) << text;
  }
}

INSTANTIATE_TEST_SUITE_P(Kinds, GeneratedTerms, ::testing::Values(TermKind::Standard, TermKind::Compensable),
                         [](const auto& info) {
                           return info.param == TermKind::Standard ? "Standard" : "Compensable";
                         });

}  // namespace
}  // namespace ccsp
