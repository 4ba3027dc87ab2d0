#include "clusterwp/laurent.hpp"

#include <gtest/gtest.h>

using namespace clusterwp;

namespace {

VarTablePtr xyz() { return make_vars({"x", "y", "z"}); }

RationalFn expr(const std::string& s, const VarTablePtr& v) { return parse_expression(s, v); }

LaurentPoly poly(const std::string& s, const VarTablePtr& v) {
    auto l = as_laurent(parse_expression(s, v));
    if (!l) throw std::logic_error("not Laurent: " + s);
    return *l;
}

}  // namespace

TEST(LaurentPoly, ArithmeticAndOrdering) {
    auto v = xyz();
    LaurentPoly p = poly("x^2*y + 3*z - 1", v);
    EXPECT_EQ(p.str(), "x^2*y + 3*z - 1");
    EXPECT_EQ(p.size(), 3u);
    EXPECT_EQ((p - p).is_zero(), true);
    EXPECT_EQ(poly("(x + y)^2", v), poly("x^2 + 2*x*y + y^2", v));
    EXPECT_EQ(poly("x^-1*y", v) * poly("x", v), poly("y", v));
}

TEST(LaurentPoly, StrIsParseable) {
    auto v = xyz();
    for (const char* s : {"2*x^-1*y^2 + x^-1", "-1/2*x*z + i*y", "x^-3 - (1+2i)*y^2*z^-1", "0"}) {
        LaurentPoly p = poly(s, v);
        EXPECT_EQ(poly(p.str(), v), p) << s;
    }
}

TEST(LaurentPoly, MinExponentsAndSupport) {
    auto v = xyz();
    LaurentPoly p = poly("x^-2*y + x*y^3", v);
    EXPECT_EQ(p.min_exponents().exps, (std::vector<int>{-2, 1, 0}));
    EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 1}));
}

TEST(ExactDivide, DividesOrRefuses) {
    auto v = xyz();
    auto q = exact_divide(poly("x^2 - y^2", v), poly("x - y", v));
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, poly("x + y", v));
    EXPECT_FALSE(exact_divide(poly("x^2 + y^2", v), poly("x - y", v)));
    auto m = exact_divide(poly("x^2*y + x", v), poly("x*y^2", v));
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, poly("x*y^-1 + y^-2", v));
}

TEST(AsLaurent, AffineSecondMutation) {
    auto v = make_vars({"x0", "x1"});
    RationalFn x3 = expr("((x1^2+1)^2 + x0^2)/(x0^2*x1)", v);
    auto l = as_laurent(x3);
    ASSERT_TRUE(l);
    EXPECT_EQ(*l, poly("x0^-2*x1^3 + 2*x0^-2*x1 + x0^-2*x1^-1 + x1^-1", v));
    EXPECT_FALSE(as_laurent(expr("1/(x0 + x1)", v)));
}

TEST(RationalFn, CrossMultiplicationEquality) {
    auto v = xyz();
    EXPECT_EQ(expr("(x^2 - 1)/(x - 1)", v), expr("x + 1", v));
    EXPECT_EQ(expr("1/x + 1/y", v), expr("(x + y)/(x*y)", v));
    EXPECT_NE(expr("1/x", v), expr("1/y", v));
    EXPECT_EQ(expr("0/(x+1)", v), RationalFn(v));
}

TEST(RationalFn, DivisionByZeroRejected) {
    auto v = xyz();
    EXPECT_THROW(parse_expression("x/0", v), ParseError);
    EXPECT_THROW(expr("x", v) / RationalFn(v), DivisionByZero);
}

TEST(Substitute, ComposesBindings) {
    auto v = make_vars({"a", "b"});
    auto t = make_vars({"x", "y"});
    std::map<std::string, RationalFn> bind{{"a", expr("x/y", t)}, {"b", expr("x + y", t)}};
    EXPECT_EQ(substitute(expr("a^2*b - a^-1", v), bind, t), expr("x^2*(x+y)/y^2 - y/x", t));
    EXPECT_EQ(substitute(expr("1/(a - 1)", v), bind, t), expr("y/(x - y)", t));
    std::map<std::string, RationalFn> zero{{"a", RationalFn(t)}, {"b", expr("x", t)}};
    EXPECT_THROW(substitute(expr("1/a", v), zero, t), EvaluationError);
    std::map<std::string, RationalFn> partial_bind{{"a", expr("x", t)}};
    EXPECT_THROW(substitute(expr("a*b", v), partial_bind, t), EvaluationError);
}

TEST(Substitute, LaurentBindings) {
    auto v = make_vars({"a"});
    auto t = make_vars({"x"});
    std::map<std::string, LaurentPoly> bind{{"a", poly("x^-1", t)}};
    EXPECT_EQ(substitute_laurent(poly("a^2 + a^-1", v), bind, t), poly("x^-2 + x", t));
}

TEST(Evaluate, ExactValuesAndErrors) {
    auto v = xyz();
    Point p{{"x", GaussianRational::i()}, {"y", 0}, {"z", Rational(1, 2)}};
    EXPECT_EQ(evaluate(poly("x^2 + 4*z", v), p), GaussianRational(1));
    EXPECT_EQ(evaluate(poly("x^-1", v), p), -GaussianRational::i());
    try {
        evaluate(poly("y^-1", v), p);
        FAIL();
    } catch (const EvaluationError& e) {
        EXPECT_EQ(e.kind, EvaluationError::Kind::zero_base_negative_exponent);
    }
    try {
        evaluate(poly("x", v), Point{});
        FAIL();
    } catch (const EvaluationError& e) {
        EXPECT_EQ(e.kind, EvaluationError::Kind::unbound_variable);
    }
    EXPECT_THROW(evaluate(expr("1/(x^2 + 1)", v), p), EvaluationError);
}

TEST(Partial, PowerRuleWithNegativeExponents) {
    auto v = xyz();
    EXPECT_EQ(partial(poly("x^3*y + x^-2 + z", v), "x"), poly("3*x^2*y - 2*x^-3", v));
    EXPECT_TRUE(partial(poly("y", v), "x").is_zero());
}

TEST(WeightedDegree, HomogeneousAndNot) {
    auto v = xyz();
    Weights ones{{"x", 1}, {"y", 1}, {"z", 1}};
    EXPECT_EQ(weighted_degree(poly("x*y + z^2", v), ones), 2);
    EXPECT_EQ(weighted_degree(poly("x + 1", v), ones), std::nullopt);
    EXPECT_EQ(weighted_degree(expr("2/(x*y)", v), ones), -2);
    EXPECT_THROW(weighted_degree(LaurentPoly(v), ones), ZeroPolynomial);
    Weights w{{"x", 2}, {"y", -1}, {"z", 0}};
    EXPECT_EQ(weighted_degree(poly("x*y^2 + z", v), w), 0);
}

TEST(Parser, GrammarCorners) {
    auto v = xyz();
    EXPECT_EQ(expr("1/2i", v), RationalFn(LaurentPoly::constant(v, GaussianRational(0, Rational(1, 2)))));
    EXPECT_EQ(expr("3/4^2", v), RationalFn(LaurentPoly::constant(v, Rational(9, 16))));
    EXPECT_EQ(expr("x^(-2)", v), expr("1/x^2", v));
    EXPECT_EQ(expr("-x^2", v), expr("-(x^2)", v));
    EXPECT_THROW(expr("x^2^3", v), ParseError);
    EXPECT_THROW(expr("w + 1", v), ParseError);
    EXPECT_THROW(expr("x +", v), ParseError);
    EXPECT_THROW(expr("(x", v), ParseError);
    EXPECT_THROW(expr("x^y", v), ParseError);
    EXPECT_EQ(expression_identifiers("x*y + i*x'"), (std::vector<std::string>{"x", "y", "x'"}));
}

TEST(Parser, VariableNamedIShadowsImaginaryUnit) {
    auto v = make_vars({"i", "j"});
    EXPECT_EQ(expr("i*j", v).num(), LaurentPoly::variable(v, "i") * LaurentPoly::variable(v, "j"));
}
