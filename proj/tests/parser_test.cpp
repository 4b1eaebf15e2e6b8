#include <gtest/gtest.h>

#include "cedille/parser.hpp"
#include "generators.hpp"

using namespace cedille;
namespace gen = cedille::testing;

namespace {

Term v(const char* n) { return Term::var(n); }

ErrorCode parse_code(const char* s) {
    try {
        parse_term(s);
    } catch (const ParseError& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << s;
    return ErrorCode::FuelExhausted;
}

ErrorCode module_code(const char* s) {
    try {
        parse_module(s);
    } catch (const ParseError& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << s;
    return ErrorCode::FuelExhausted;
}

}  // namespace

TEST(ParseTerm, Lambda) {
    EXPECT_TRUE(alpha_eq(parse_term("lam u : X . u"), Term::lambda(Var("u"), v("X"), v("u"))));
}

TEST(ParseTerm, EquationOfUnannotatedLambdas) {
    Term t = parse_term("{ \\x. x ~ \\x. \\y. x }");
    ASSERT_TRUE(t.is(Tag::Eq));
    EXPECT_TRUE(t.child(0).is(Tag::UnannotatedLambda));
    EXPECT_TRUE(t.child(1).is(Tag::UnannotatedLambda));
    EXPECT_TRUE(t.child(1).child(0).is(Tag::UnannotatedLambda));
}

TEST(ParseTerm, Precedence) {
    Term expected = Term::erased_app(Term::app(v("f"), v("a")), Term::proj1(v("b")));
    EXPECT_TRUE(alpha_eq(parse_term("f a - b .1"), expected));
    EXPECT_TRUE(alpha_eq(parse_term("f a - b.1"), expected));
}

TEST(ParseTerm, ApplicationAndErasedApplicationAssociateLeft) {
    EXPECT_TRUE(alpha_eq(parse_term("f a b"), Term::app(Term::app(v("f"), v("a")), v("b"))));
    EXPECT_TRUE(alpha_eq(parse_term("f - A - B"), Term::erased_app(Term::erased_app(v("f"), v("A")), v("B"))));
    EXPECT_TRUE(alpha_eq(parse_term("f - A b"), Term::erased_app(v("f"), Term::app(v("A"), v("b")))));
}

TEST(ParseTerm, PrefixFormsTakeOneArgumentEach) {
    EXPECT_TRUE(alpha_eq(parse_term("sigma e a"), Term::app(Term::sigma(v("e")), v("a"))));
    EXPECT_TRUE(alpha_eq(parse_term("delta A e x"), Term::app(Term::delta(v("A"), v("e")), v("x"))));
    EXPECT_TRUE(alpha_eq(parse_term("sigma e.2"), Term::sigma(Term::proj2(v("e")))));
}

TEST(ParseTerm, BindersExtendRight) {
    Term t = parse_term("Pi u : A . A u - B");
    ASSERT_TRUE(t.is(Tag::Pi));
    EXPECT_TRUE(t.child(1).is(Tag::ErasedApp));
}

TEST(ParseTerm, EveryConstruct) {
    EXPECT_TRUE(parse_term("*").is(Tag::Star));
    EXPECT_TRUE(parse_term("#").is(Tag::Box));
    EXPECT_TRUE(parse_term("beta x { \\y. y }").is(Tag::Beta));
    EXPECT_TRUE(parse_term("rho e @ x . P x - p").is(Tag::Rho));
    EXPECT_TRUE(parse_term("all X : * . X").is(Tag::Forall));
    EXPECT_TRUE(parse_term("iota x : A . B").is(Tag::Iota));
    EXPECT_TRUE(parse_term("Lam X : * . x").is(Tag::ErasedLambda));
    EXPECT_TRUE(parse_term("[ a , b @ x . A ]").is(Tag::IntersectIntro));
    EXPECT_TRUE(parse_term("phi e - a { b }").is(Tag::Phi));
    EXPECT_TRUE(parse_term("[ x = a : A ] - x").is(Tag::Let));
    EXPECT_TRUE(parse_term("[ $k = * : # ] - *").is(Tag::Let));
}

TEST(ParseTerm, RhoFields) {
    Term t = parse_term("rho e @ x . P x - p");
    EXPECT_EQ(t.var(), Var("x"));
    EXPECT_TRUE(alpha_eq(t.child(0), v("e")));
    EXPECT_TRUE(alpha_eq(t.child(1), Term::app(v("P"), v("x"))));
    EXPECT_TRUE(alpha_eq(t.child(2), v("p")));
}

TEST(ParseTerm, PhiSubjectStopsAtBrace) {
    Term t = parse_term("phi e - f a { b }");
    ASSERT_TRUE(t.is(Tag::Phi));
    EXPECT_TRUE(alpha_eq(t.child(1), Term::app(v("f"), v("a"))));
    EXPECT_TRUE(alpha_eq(t.child(2), v("b")));
}

TEST(ParseTerm, CommentsAndWhitespace) {
    EXPECT_TRUE(alpha_eq(parse_term("f % comment\r\n  a"), Term::app(v("f"), v("a"))));
}

TEST(ParseTerm, PurityViolations) {
    EXPECT_EQ(parse_code("{ lam u : X . u ~ x }"), ErrorCode::PurityViolation);
    EXPECT_EQ(parse_code("{ X ~ x }"), ErrorCode::PurityViolation);
    EXPECT_EQ(parse_code("{ x ~ $k }"), ErrorCode::PurityViolation);
    EXPECT_EQ(parse_code("{ x - y ~ x }"), ErrorCode::PurityViolation);
    EXPECT_EQ(parse_code("{ x.1 ~ x }"), ErrorCode::PurityViolation);
    EXPECT_EQ(parse_code("beta X { x }"), ErrorCode::PurityViolation);
}

TEST(ParseTerm, Malformed) {
    EXPECT_EQ(parse_code(""), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("lam u X . u"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("(f a"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("f )"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("\\x. x"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("rho e @ X . x - y"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("[ a , b @ X . A ]"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("lam lam : X . x"), ErrorCode::ParseError);
    EXPECT_EQ(parse_code("x @"), ErrorCode::ParseError);
}

TEST(ParseTerm, ErrorLocation) {
    try {
        parse_term("f\n  )");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location().line, 2u);
        EXPECT_EQ(e.location().column, 3u);
    }
}

TEST(ParseTerm, ErasedSyntaxAdmitsUnannotatedLambda) {
    EXPECT_TRUE(parse_term("\\x. x y", TermSyntax::Erased).is(Tag::UnannotatedLambda));
}

TEST(ParseTerm, Deterministic) {
    const char* src = "Lam X : * . lam u : X . [ x = u : X ] - phi e - x { u }";
    EXPECT_EQ(print_term(parse_term(src)), print_term(parse_term(src)));
}

TEST(ParseModule, SingleDefinition) {
    SourceModule m = parse_module("id = Lam X : * . lam u : X . u : all X : * . Pi u : X . X .");
    ASSERT_EQ(m.definitions.size(), 1u);
    EXPECT_EQ(m.definitions[0].name, Var("id"));
    EXPECT_TRUE(m.definitions[0].definiens.is(Tag::ErasedLambda));
    EXPECT_TRUE(m.definitions[0].annotation.is(Tag::Forall));
    EXPECT_NE(m.find("id"), nullptr);
    EXPECT_EQ(m.find("other"), nullptr);
}

TEST(ParseModule, Empty) {
    EXPECT_TRUE(parse_module("").definitions.empty());
    EXPECT_TRUE(parse_module("% only a comment\n").definitions.empty());
}

TEST(ParseModule, UnboundNamesAreNotAParseError) {
    EXPECT_EQ(parse_module("x = y : * .").definitions.size(), 1u);
}

TEST(ParseModule, TerminatorVersusProjection) {
    SourceModule m = parse_module("a = b.1 : A.\nc = d : B .");
    ASSERT_EQ(m.definitions.size(), 2u);
    EXPECT_TRUE(m.definitions[0].definiens.is(Tag::Proj1));
}

TEST(ParseModule, Errors) {
    EXPECT_EQ(module_code("a = * : # .\na = * : # ."), ErrorCode::DuplicateDefinition);
    EXPECT_EQ(module_code("a = b : * .\nb = * : # ."), ErrorCode::ForwardReference);
    EXPECT_EQ(module_code("a = * : #"), ErrorCode::ParseError);
    EXPECT_EQ(module_code("a = { lam u : X . u ~ u } : * ."), ErrorCode::PurityViolation);
}

TEST(Print, Examples) {
    EXPECT_EQ(print_term(Term::star()), "*");
    EXPECT_EQ(print_term(Term::app(Term::app(v("f"), v("a")), v("b"))), "f a b");
    EXPECT_EQ(print_term(Term::app(v("f"), Term::app(v("a"), v("b")))), "f (a b)");
    EXPECT_EQ(print_term(parse_term("all X : * . Pi u : X . X")), "all X : * . Pi u : X . X");
    EXPECT_EQ(print_term(parse_term("(f - A) x")), "(f - A) x");
    EXPECT_EQ(print_term(parse_term("f - (A x)")), "f - A x");
}

TEST(Print, PhiSubjectBraceArgument) {
    Term t = Term::phi(v("e"), Term::app(v("f"), Term::eq(v("a"), v("b"))), v("c"));
    std::string s = print_term(t);
    EXPECT_TRUE(alpha_eq(parse_term(s), t)) << s;
}

TEST(RoundTrip, GeneratedTerms) {
    gen::Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        Term t = gen::random_term(rng, 6);
        std::string s = print_term(t);
        Term back;
        ASSERT_NO_THROW(back = parse_term(s)) << s;
        EXPECT_TRUE(alpha_eq(back, t)) << s;
    }
}
