#include "doctest.h"

#include "ballcut/errors.hpp"
#include "ballcut/text.hpp"
#include "support.hpp"

using namespace ballcut;
using namespace ballcut::testing;

TEST_CASE("radius, ball and point syntax")
{
    CHECK(text::parse_radius(">=1/2") == GroupCut::at_least(q(1, 2)));
    CHECK(text::parse_radius("> 0") == GroupCut::all_positive());
    CHECK(text::parse_radius("point") == GroupCut::singleton());
    CHECK_THROWS_AS(text::parse_radius("<1"), Error);

    text::Context ctx;
    Ball b = text::parse_ball("B[>1](1 + eps)", ctx);
    CHECK(b.radius == GroupCut::greater_than(q(1)));
    CHECK(b.scalar_center() == cst(q(1)) + eps());
    CHECK(text::parse_ball("B[all]((0, eps))", ctx).dimension() == 2);

    CHECK(text::parse_point("(1, 2, eps)", ctx).dimension() == 3);
    CHECK(text::parse_point("(1 + eps)", ctx).dimension() == 1);
    CHECK(text::parse_point("(1) + (2)", ctx) == Point{cst(q(3))});
    CHECK(text::split_top_level("root(3, x), y", ',') == std::vector<std::string>{"root(3, x)", "y"});
    CHECK(text::parse_exponent("(8, 1)") == Exponent(q(8), q(1)));
}

TEST_CASE("let bindings and modes")
{
    text::Context ctx;
    ctx.lets["a"] = eps(q(1, 2));
    CHECK(text::parse_series("a^2", ctx) == eps());
    CHECK_THROWS_AS(text::parse_series("t", ctx), Error);
    ctx.mode_declared = true;
    ctx.mode = kDom;
    CHECK(text::parse_series("t", ctx).mode() == kDom);
    // Cut data are base-field elements, whatever the declared mode.
    CHECK_THROWS_AS(text::parse_cut("cut+(t)", ctx), Error);
}

TEST_CASE("printed cuts parse back")
{
    Sampler s(41);
    text::Context ctx;
    for (int i = 0; i < 200; ++i) {
        Cut c = s.any_cut();
        std::string printed = to_string(c);
        CAPTURE(printed);
        Cut back = text::parse_cut(printed, ctx);
        CHECK(cut_equal(back, c));
        CHECK(to_string(back) == printed);
        CHECK(cut_equal(text::cut_from_json(to_json(c)), c));
    }
    CHECK_THROWS_AS(text::parse_cut("cut*(1)", ctx), Error);
    CHECK_THROWS_AS(text::parse_cut("ball+[>1](0", ctx), Error);
}

TEST_CASE("functions, polynomials and branches")
{
    text::Context ctx;
    CHECK(to_string(text::parse_polynomial("x^2 - eps", ctx)) == "x^2 - eps");
    CHECK(to_string(text::parse_function("(x + 1)/(x - 1)", ctx)) == "(x + 1)/(x - 1)");
    CHECK(text::parse_bound("-inf", ctx) == std::nullopt);
    CHECK(text::parse_bound("eps", ctx) == eps());

    CurveBranch b = text::parse_branch("y^2 - x ; t^2 ; t", ctx);
    CHECK(b.y_val == mono(q(1), q(0), q(1)));
    CHECK(b.signature == std::pair{1, 1});
    CHECK_THROWS_AS(text::parse_branch("y^2 - x ; t^2", ctx), Error);
}
