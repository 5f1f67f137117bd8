#include "doctest.h"

#include "ballcut/errors.hpp"
#include "ballcut/polynomial.hpp"
#include "support.hpp"

using namespace ballcut;
using namespace ballcut::testing;

TEST_CASE("univariate polynomial arithmetic")
{
    SeriesPoly x = SeriesPoly::x();
    SeriesPoly p = x * x - SeriesPoly::constant(eps());
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(eps(q(1, 2))).is_exact_zero());
    CHECK(p.derivative() == SeriesPoly({Series(), cst(q(2))}));
    CHECK(to_string(p) == "x^2 - eps");
    CHECK((p - p).is_zero());

    SeriesPoly roots = SeriesPoly::from_roots({cst(q(1)), cst(q(2))});
    CHECK(roots == x * x - SeriesPoly::constant(cst(q(3))) * x + SeriesPoly::constant(cst(q(2))));

    // Evaluating pure coefficients at an aux-dominant point re-tags them.
    Series t = mono(q(1), q(0), q(1), kDom);
    CHECK(sign(p.evaluate(t)) == -1);
}

TEST_CASE("pseudo-remainder satisfies the division identity")
{
    Sampler rng(19);
    for (int i = 0; i < 40; ++i) {
        SeriesPoly a = rng.poly(4);
        SeriesPoly b = rng.poly(2);
        if (b.degree() < 1 || a.degree() < b.degree())
            continue;
        SeriesPoly r = pseudo_remainder(a, b);
        CHECK(r.degree() < b.degree());
        // lc(b)^k * a - r vanishes at every root of b; test at exact rational roots of a linear b.
        SeriesPoly lin = SeriesPoly({cst(rng.nonzero_rational()), cst(q(1))});
        Series root = -lin.coeff(0);
        SeriesPoly r2 = pseudo_remainder(a, lin);
        CHECK(r2.degree() <= 0);
        CHECK(compare(r2.evaluate(root), a.evaluate(root)) == 0);
    }
}

TEST_CASE("rational functions")
{
    RationalFn x = RationalFn::x();
    RationalFn f = (x + RationalFn::constant(cst(q(1)))) / (x - RationalFn::constant(cst(q(1))));
    CHECK(compare(f.evaluate(cst(q(3))), cst(q(2))) == 0);
    CHECK(to_string(f) == "(x + 1)/(x - 1)");
    RationalFn df = f.derivative();
    CHECK(compare(df.evaluate(cst(q(3))), cst(q(-1, 2))) == 0);
    CHECK_THROWS_AS(f.evaluate(cst(q(1))), Error);
    CHECK_THROWS_AS(x / RationalFn(), Error);
}

TEST_CASE("bivariate polynomials")
{
    BiPoly x = BiPoly::x();
    BiPoly y = BiPoly::y();
    BiPoly a2 = BiPoly::constant(eps(2));
    BiPoly curve = y * y + (x * x - a2) * (x * x - BiPoly::constant(cst(q(1))));
    CHECK(curve.degree_y() == 2);
    CHECK(curve.derivative_y() == BiPoly::constant(cst(q(2))) * y);
    CHECK(curve.evaluate(cst(q(1)), cst(q(0))).is_exact_zero());
    SeriesPoly in_y = curve.in_y(eps());
    CHECK(in_y.degree() == 2);
    CHECK(in_y.coeff(0).is_exact_zero());
    CHECK(to_string(x * y - BiPoly::constant(cst(q(2)))) == "x*y - 2");
}
