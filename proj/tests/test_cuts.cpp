#include "doctest.h"

#include "ballcut/cuts.hpp"
#include "ballcut/errors.hpp"
#include "support.hpp"

using namespace ballcut;
using namespace ballcut::testing;

namespace {

Cut edge(const Series& c, GroupCut r, Side s)
{
    return Cut::ball_edge(Ball(c, std::move(r)), s);
}

// K elements near the interesting scales of w: c + s*eps^q for sampled s, q.
std::vector<Series> probes(Sampler& rng, const Series& around, int count)
{
    std::vector<Series> out;
    for (int i = 0; i < count; ++i) {
        Series p = around + mono(rng.nonzero_rational(), rng.exponent(-1, 4, 4));
        if (rng.coin())
            p += mono(rng.rational(), rng.exponent(-1, 4, 4));
        out.push_back(p);
    }
    out.push_back(around);
    return out;
}

void check_induced_consistency(const Series& w, Sampler& rng)
{
    Cut cut = induced_cut(w);
    Series anchor(kInf);
    for (const auto& t : w.terms())
        if (t.exp.aux.is_zero())
            anchor += mono(t.coeff, t.exp.base);
    for (const auto& c : probes(rng, anchor, 40)) {
        bool less = compare(c, w) < 0;
        CHECK_MESSAGE(less == (element_vs_cut(c, cut) == CutSide::Below),
                      to_string(c) << " vs " << to_string(w) << " at " << to_string(cut));
    }
}

} // namespace

TEST_CASE("element_vs_cut on each kind")
{
    Cut upper_zero = edge(cst(q(0)), GroupCut::all_positive(), Side::Plus);
    CHECK(element_vs_cut(eps(), upper_zero) == CutSide::Below);
    CHECK(element_vs_cut(cst(q(1)), upper_zero) == CutSide::Above);
    CHECK(element_vs_cut(cst(q(-1)), upper_zero) == CutSide::Below);

    Cut lower_zero = edge(cst(q(0)), GroupCut::all_positive(), Side::Minus);
    CHECK(element_vs_cut(eps(), lower_zero) == CutSide::Above);
    CHECK(element_vs_cut(cst(q(-1)), lower_zero) == CutSide::Below);

    Series a = cst(q(2)) + eps();
    CHECK(element_vs_cut(a, Cut::principal(a, Side::Minus)) == CutSide::Above);
    CHECK(element_vs_cut(a, Cut::principal(a, Side::Plus)) == CutSide::Below);
    CHECK(element_vs_cut(eps(q(-5)), Cut::plus_infinity()) == CutSide::Below);
    CHECK(element_vs_cut(-eps(q(-5)), Cut::minus_infinity()) == CutSide::Above);
}

TEST_CASE("cut equality")
{
    CHECK(cut_equal(edge(cst(q(0)), GroupCut::all_positive(), Side::Plus),
                    edge(eps(), GroupCut::all_positive(), Side::Plus)));
    CHECK_FALSE(cut_equal(edge(cst(q(0)), GroupCut::all_positive(), Side::Plus),
                          edge(cst(q(0)), GroupCut::all_positive(), Side::Minus)));
    Series a = cst(q(1, 3)) + eps(q(2));
    CHECK(cut_equal(Cut::principal(a, Side::Plus), edge(a, GroupCut::singleton(), Side::Plus)));
    CHECK(cut_equal(edge(a, GroupCut::all(), Side::Minus), Cut::minus_infinity()));
    CHECK_FALSE(cut_equal(Cut::principal(a, Side::Plus), Cut::principal(a, Side::Minus)));
    CHECK_FALSE(cut_equal(edge(cst(q(0)), GroupCut::at_least(q(1)), Side::Plus),
                          edge(cst(q(0)), GroupCut::greater_than(q(1)), Side::Plus)));
}

TEST_CASE("induced cuts of extension elements")
{
    Series w1 = cst(q(1)) - mono(q(1), q(0), q(2));
    CHECK(cut_equal(induced_cut(w1), edge(cst(q(1)), GroupCut::all_positive(), Side::Minus)));

    Series w2 = mono(q(1), q(1), q(1));
    Cut c2 = induced_cut(w2);
    CHECK(cut_equal(c2, edge(cst(q(0)), GroupCut::greater_than(q(1)), Side::Plus)));
    CHECK(to_string(c2) == "ball+[>1](0)");

    Series w3 = mono(q(1), q(1), q(-1));
    CHECK(cut_equal(induced_cut(w3), edge(cst(q(0)), GroupCut::at_least(q(1)), Side::Plus)));

    // Sampling oracle: compare w directly with K elements in the extension.
    Sampler rng(3);
    check_induced_consistency(w2, rng);
    check_induced_consistency(w3, rng);
    check_induced_consistency(w1, rng);

    CHECK_THROWS_WITH_AS(induced_cut(eps()), doctest::Contains("two cuts"), Error);
    try {
        (void)induced_cut(cst(q(1)) + Series::big_o(Exponent(q(3))));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndeterminateAtPrecision);
    }
}

TEST_CASE("induced cuts in the aux-dominant mode")
{
    Series t = mono(q(1), q(0), q(1), kDom);
    CHECK(cut_equal(induced_cut(cst(q(3), kDom) - t), Cut::principal(cst(q(3)), Side::Minus)));
    CHECK(cut_equal(induced_cut(mono(q(-1), q(0), q(-1), kDom)), Cut::minus_infinity()));
    CHECK(cut_equal(induced_cut(mono(q(2), q(5), q(-1), kDom) + cst(q(1), kDom)), Cut::plus_infinity()));
}

TEST_CASE("induced_cut agrees with direct comparison on sampled elements")
{
    Sampler rng(41);
    for (int i = 0; i < 60; ++i) {
        Series w = rng.pure_series(3, kInf, -1, 3);
        Rat r = rng.nonzero_rational(2, 2);
        w += mono(rng.nonzero_rational(), rng.exponent(-1, 3), r);
        if (rng.coin())
            w += mono(rng.nonzero_rational(), rng.exponent(-1, 4), rng.rational(2, 2));
        check_induced_consistency(w, rng);
    }
}

TEST_CASE("lower sets are downward closed")
{
    Sampler rng(8);
    std::vector<Cut> cuts{Cut::minus_infinity(), Cut::plus_infinity(), Cut::principal(cst(q(1)), Side::Minus),
                          Cut::principal(eps(), Side::Plus)};
    for (int i = 0; i < 20; ++i) {
        GroupCut r = rng.coin() ? GroupCut::at_least(rng.exponent(-1, 3)) : GroupCut::greater_than(rng.exponent(-1, 3));
        cuts.push_back(edge(rng.pure_series(2), r, rng.coin() ? Side::Plus : Side::Minus));
    }
    for (const auto& cut : cuts) {
        for (int i = 0; i < 30; ++i) {
            Series c1 = rng.pure_series(3);
            Series c2 = rng.pure_series(3);
            if (compare(c1, c2) > 0)
                std::swap(c1, c2);
            if (element_vs_cut(c2, cut) == CutSide::Below)
                CHECK(element_vs_cut(c1, cut) == CutSide::Below);
        }
        // Recentring inside the ball leaves the cut unchanged.
        if (const auto* e = cut.get_if<Cut::BallEdge>()) {
            Series shift = e->ball.scalar_center() + mono(q(1), e->ball.radius.threshold() + q(1));
            CHECK(cut_equal(cut, edge(shift, e->ball.radius, e->side)));
        }
    }
}
