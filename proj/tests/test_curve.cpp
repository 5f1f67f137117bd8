#include "doctest.h"

#include <chrono>

#include "ballcut/curve.hpp"
#include "ballcut/errors.hpp"
#include "support.hpp"

using namespace ballcut;
using namespace ballcut::testing;

namespace {

BiPoly BX() { return BiPoly::x(); }
BiPoly BY() { return BiPoly::y(); }
BiPoly BC(const Series& c) { return BiPoly::constant(c); }
Series aux(long c, long base, long a) { return mono(q(c), q(base), q(a)); }

Cut edge(const Series& c, GroupCut r, Side s) { return Cut::ball_edge(Ball(c, std::move(r)), s); }

const Genus2Report& genus2()
{
    static const Genus2Report report = genus2_example();
    return report;
}

const Genus2Branch& branch(const std::string& label)
{
    for (const auto& b : genus2().branches)
        if (b.label == label)
            return b;
    throw std::runtime_error("missing branch " + label);
}

} // namespace

TEST_CASE("Newton branches")
{
    // y^2 = 1 + eps from seed 1.
    PlaneCurve c(BY() * BY() - BC(cst(q(1)) + eps()));
    CurveBranch b = newton_branch(c, cst(q(0)), cst(q(1)));
    CHECK(b.y_val.coefficient(Exponent()) == q(1));
    CHECK(b.y_val.coefficient(Exponent(q(1))) == q(1, 2));
    CHECK(b.y_val.coefficient(Exponent(q(2))) == q(-1, 8));
    Series back = b.y_val * b.y_val - (cst(q(1)) + eps());
    CHECK(back.terms().empty());
    CHECK(compare(*back.error_order(), default_precision(), kInf) >= 0);

    // Exact root found exactly.
    PlaneCurve sq(BY() * BY() - BX());
    CurveBranch exact = newton_branch(sq, eps(2), eps(2) + eps());
    CHECK(exact.y_val == eps());

    // A double root violates the simple-root condition.
    PlaneCurve dbl(BY() * BY());
    try {
        (void)newton_branch(dbl, cst(q(0)), eps());
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NewtonNoConvergence);
    }
}

TEST_CASE("genus-2 branch and its quotient z")
{
    const auto& b = branch("(+,+)");
    CHECK(b.branch.x_val == aux(1, 0, 1));
    CHECK(b.z.coefficient(Exponent()) == q(1));
    CHECK(b.z.coefficient(Exponent(q(0), q(2))) == q(-1, 2));
    CHECK(b.z.terms()[1].exp == Exponent(q(0), q(2)));
    CHECK(genus2().identity_holds);
    for (const auto& br : genus2().branches) {
        CHECK(br.identity_residual.terms().empty());
        CHECK(reaches_precision(*br.identity_residual.error_order(), default_precision(), kInf));
    }
}

TEST_CASE("genus-2 projections")
{
    Cut up0 = edge(cst(q(0)), GroupCut::all_positive(), Side::Plus);
    for (const auto& b : genus2().branches) {
        CHECK(place_equal(b.cut_x, up0));
        CHECK(place_equal(b.cut_y, up0));
        CHECK(b.cut_x.get_if<Cut::BallEdge>() != nullptr);
    }
    CHECK(cut_equal(branch("(+,+)").cut_x, up0));
    Cut below_one = edge(cst(q(1)), GroupCut::all_positive(), Side::Minus);
    Cut above_minus_one = edge(cst(q(-1)), GroupCut::all_positive(), Side::Plus);
    CHECK(cut_equal(branch("(+,+)").cut_z, below_one));
    CHECK(cut_equal(branch("(-,-)").cut_z, below_one));
    CHECK(cut_equal(branch("(-,+)").cut_z, above_minus_one));
    CHECK(cut_equal(branch("(+,-)").cut_z, above_minus_one));
}

TEST_CASE("genus-2 pairing")
{
    const auto& classes = genus2().classes;
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<std::string>{"(+,+)", "(-,-)"});
    CHECK(classes[1] == std::vector<std::string>{"(+,-)", "(-,+)"});

    const auto& pp = branch("(+,+)").branch;
    const auto& mp = branch("(-,+)").branch;
    const auto& mm = branch("(-,-)").branch;
    Point origin{cst(q(0)), cst(q(0))};
    CHECK(rho_place_witness(pp, mm, origin));
    CHECK(rho_place_witness(pp, pp, origin));
    BiRational z = BiRational(BY()) / BiRational(BX());
    std::vector<CurveFunction> fns{{"x", BiRational(BX())}, {"y", BiRational(BY())}, {"y/x", z}, rho_function(origin)};
    CHECK(std::holds_alternative<PlacesEqual>(place_equal_on_curve(pp, mm, fns, origin)));
    auto split = place_equal_on_curve(pp, mp, {{"y/x", z}}, origin);
    REQUIRE(std::holds_alternative<DistinguishedBy>(split));
    CHECK(std::get<DistinguishedBy>(split).function == "y/x");
    CHECK(std::holds_alternative<PlacesEqual>(place_equal_on_curve(pp, pp, {}, origin)));

    // Report is deterministic.
    CHECK(to_text(genus2_example()) == to_text(genus2()));
    CHECK(to_json(genus2_example()) == to_json(genus2()));
}

TEST_CASE("genus-2 runs fast")
{
    auto start = std::chrono::steady_clock::now();
    (void)genus2_example();
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration<double>(elapsed).count() < 1.0);
}

TEST_CASE("rho doubles the distance valuation")
{
    CHECK(rho(Point{cst(q(0)), cst(q(0))}, Point{eps(), cst(q(0))}) == eps(2));
    CHECK(rho(Point{eps()}, Point{eps()}).is_exact_zero());
    Sampler rng(71);
    for (int i = 0; i < 100; ++i) {
        int n = static_cast<int>(rng.integer(1, 4));
        std::vector<Series> a, b;
        for (int k = 0; k < n; ++k) {
            a.push_back(rng.pure_series(3));
            b.push_back(rng.coin() ? a.back() : rng.pure_series(3));
        }
        Point p(a), r(b);
        Valuation d = dist_inf(p, r);
        Valuation v = valuation(rho(p, r));
        if (!d)
            CHECK(!v);
        else
            CHECK(v == Rat(2) * *d);
    }
    CHECK_THROWS_AS(rho(Point{eps()}, Point{eps(), eps()}), Error);
}

TEST_CASE("projections commute with functions of the projected value")
{
    // For g in K(f): the ordering at the projected cut gives g the sign g takes at f(branch).
    Sampler rng(13);
    BiRational z = BiRational(BY()) / BiRational(BX());
    for (const auto& b : genus2().branches) {
        for (const auto& f : {BiRational(BX()), BiRational(BY()), z}) {
            Cut c = project_cut(b.branch, f);
            CHECK(c.get_if<Cut::BallEdge>() != nullptr);
            Series w = evaluate(b.branch, f);
            for (int i = 0; i < 15; ++i) {
                RationalFn g(rng.poly(2), rng.poly(1));
                Series gw_den = g.denominator().evaluate(w);
                int direct = sign(g.numerator().evaluate(w)) * sign(gw_den);
                CHECK(ordering_sign(c, g) == direct);
            }
        }
    }
}

TEST_CASE("rho projection of the genus-2 branches")
{
    // Coordinates project to edges of B_{>0}(0), so rho projects to an edge of B_{2U}(0) = B_{>0}(0).
    Point origin{cst(q(0)), cst(q(0))};
    BiRational r = rho_function(origin).f;
    for (const auto& b : genus2().branches) {
        Cut c = project_cut(b.branch, r);
        CHECK(cut_equal(c, edge(cst(q(0)), GroupCut::all_positive().doubled(), Side::Plus)));
    }
}
