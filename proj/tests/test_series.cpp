#include "doctest.h"

#include "ballcut/errors.hpp"
#include "ballcut/series.hpp"
#include "support.hpp"

using namespace ballcut;
using namespace ballcut::testing;

namespace {

// True if `s` carries no known term: it is zero up to its error order.
bool vanishes_to_precision(const Series& s)
{
    return s.terms().empty();
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ballcut::Error");
    return ErrorCode::InvalidArgument;
}

} // namespace

TEST_CASE("rationals stay canonical")
{
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK(Rat::parse("-1.25") == Rat(-5, 4));
    CHECK(Rat::parse("6/8") == Rat(3, 4));
    CHECK(Rat(-27, 8).exact_root(3) == Rat(-3, 2));
    CHECK_FALSE(Rat(2).exact_root(2).has_value());
    CHECK_FALSE(Rat(-4).exact_root(2).has_value());
    CHECK(code_of([] { (void)Rat::parse("1/0"); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)Rat::parse("1/"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("exponent orders depend on the group mode")
{
    Exponent aux_only(Rat(0), Rat(1));
    Exponent tiny_base(Rat(1, 1000), Rat(0));
    CHECK(compare(aux_only, tiny_base, kInf) < 0);
    CHECK(compare(aux_only, tiny_base, kDom) > 0);
    CHECK(sign(Exponent(Rat(1), Rat(-5)), kInf) > 0);
    CHECK(sign(Exponent(Rat(1), Rat(-5)), kDom) < 0);
}

TEST_CASE("addition cancels exactly and absorbs terms at the error order")
{
    CHECK(eps() + eps(2) + -eps() == eps(2));

    Series one_big_o = Series::from_terms(kInf, {{Exponent(), q(1)}}, Exponent(q(3)));
    Series sum = one_big_o + eps(3);
    CHECK(sum == one_big_o);
    CHECK(sum.error_order() == Exponent(q(3)));

    Series s = cst(q(2)) + eps(q(1, 2));
    CHECK(Series() + s == s);
}

TEST_CASE("multiplication adds exponents and propagates error orders")
{
    CHECK(eps(q(1, 2)) * eps(q(1, 2)) == eps());
    CHECK((cst(q(1)) + eps()) * (cst(q(1)) - eps()) == cst(q(1)) - eps(2));

    Series lhs = Series::from_terms(kInf, {{Exponent(), q(1)}}, Exponent(q(2)));
    Series product = lhs * eps();
    CHECK(product == Series::from_terms(kInf, {{Exponent(q(1)), q(1)}}, Exponent(q(3))));

    // Oracle: every exact completion of 1 + O(eps^2) times eps stays within the bound.
    Sampler rng(11);
    for (int i = 0; i < 50; ++i) {
        Series completion = cst(q(1));
        for (int k = 0; k < 3; ++k)
            completion += mono(rng.rational(), q(2) + rng.exponent(0, 3));
        Series exact = completion * eps();
        Series diff = exact - product.known_part();
        auto v = valuation(diff);
        CHECK((!v || compare(*v, Exponent(q(3)), kInf) >= 0));
    }
}

TEST_CASE("division expands a geometric series up to the working precision")
{
    Series geom = div(cst(q(1)), cst(q(1)) - eps(), Exponent(q(5)));
    Series expected = Series::from_terms(
        kInf, {{Exponent(), q(1)}, {Exponent(q(1)), q(1)}, {Exponent(q(2)), q(1)}, {Exponent(q(3)), q(1)}, {Exponent(q(4)), q(1)}},
        Exponent(q(5)));
    CHECK(geom == expected);
    CHECK(eps() / eps() == cst(q(1)));

    // (3+eps)/(1-eps) at precision eps^3; frozen value checked by multiplying back.
    Series num = cst(q(3)) + eps();
    Series den = cst(q(1)) - eps();
    Series quotient = div(num, den, Exponent(q(3)));
    Series frozen = Series::from_terms(
        kInf, {{Exponent(), q(3)}, {Exponent(q(1)), q(4)}, {Exponent(q(2)), q(4)}}, Exponent(q(3)));
    CHECK(quotient == frozen);
    Series back = quotient * den - num;
    CHECK(vanishes_to_precision(back));
    CHECK(compare(*back.error_order(), Exponent(q(3)), kInf) >= 0);

    CHECK(code_of([] { (void)div(cst(q(1)), Series()); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)div(cst(q(1)), Series::big_o(Exponent(q(2)))); }) == ErrorCode::IndeterminateAtPrecision);
}

TEST_CASE("nth_root by binomial expansion")
{
    CHECK(nth_root(eps(2), 2) == eps());
    CHECK(nth_root(mono(q(-8), q(3)), 3) == mono(q(-2), q(1)));

    Series root = nth_root(cst(q(1)) + eps(), 2, Exponent(q(3)));
    Series frozen = Series::from_terms(
        kInf, {{Exponent(), q(1)}, {Exponent(q(1)), q(1, 2)}, {Exponent(q(2)), q(-1, 8)}}, Exponent(q(3)));
    CHECK(root == frozen);
    Series squared = root * root - (cst(q(1)) + eps());
    CHECK(vanishes_to_precision(squared));

    CHECK(code_of([] { (void)nth_root(cst(q(-1)), 2); }) == ErrorCode::NonRepresentableRoot);
    CHECK(code_of([] { (void)nth_root(cst(q(2)), 2); }) == ErrorCode::NonRepresentableRoot);
}

TEST_CASE("sign, valuation and standard part")
{
    CHECK(sign(mono(q(-2), q(-1)) + cst(q(5))) == -1);
    CHECK(sign(Series()) == 0);
    CHECK(code_of([] { (void)sign(Series::big_o(Exponent(q(3)))); }) == ErrorCode::IndeterminateAtPrecision);

    CHECK(valuation(eps(q(1, 2)) + mono(q(3), q(1))) == Exponent(q(1, 2)));
    CHECK_FALSE(valuation(Series()).has_value());
    Series a = mono(q(2), q(1));
    Series b = eps(q(-1)) + cst(q(1));
    CHECK(valuation(a * b) == Exponent(q(0)));

    CHECK(standard_part(cst(q(3)) + eps()) == StandardPart(q(3)));
    CHECK(std::holds_alternative<Infinity>(standard_part(eps(q(-1)))));
    CHECK(standard_part((cst(q(3)) + eps()) / (cst(q(1)) - eps())) == StandardPart(q(3)));
    CHECK(standard_part(Series::big_o(Exponent(q(1)))) == StandardPart(q(0)));
}

TEST_CASE("compare against rationals")
{
    CHECK(compare(eps(), cst(q(1, 1000))) < 0);
    CHECK(compare(cst(q(1)) + eps(), cst(q(1))) > 0);
    CHECK(compare(eps(q(-1)), cst(q(1000000))) > 0);
}

TEST_CASE("mode mixing is rejected")
{
    CHECK(code_of([] { (void)(eps(q(1), kInf) + eps(q(1), kDom)); }) == ErrorCode::IncompatibleModes);
    CHECK(code_of([] { (void)mono(q(1), q(0), q(1)).in_mode(kDom); }) == ErrorCode::IncompatibleModes);
    CHECK(eps(q(2)).in_mode(kDom).mode() == kDom);
}

TEST_CASE("aux-level expansions stop at the equivalent precision")
{
    // 1/(1-t) in the aux-infinitesimal mode cannot reach eps^8; it stops at t^8.
    Series tval = mono(q(1), q(0), q(1));
    Series inv = div(cst(q(1)), cst(q(1)) - tval);
    CHECK(inv.terms().size() == 8);
    CHECK(inv.error_order() == Exponent(q(0), q(8)));
    CHECK(reaches_precision(*inv.error_order(), default_precision(), kInf));
}

TEST_CASE("text and JSON forms")
{
    Series s = Series::from_terms(kInf, {{Exponent(), q(-1)}, {Exponent(q(1, 2)), q(3)}, {Exponent(q(1), q(-2)), q(-1, 2)}},
                                  Exponent(q(8)));
    CHECK(to_string(s) == "-1 + 3*eps^(1/2) - 1/2*eps*t^(-2) + O(eps^8)");
    CHECK(to_string(-eps(2)) == "-1*eps^2");
    CHECK(to_string(Series()) == "0");
    CHECK(to_string(Series::big_o(Exponent(q(3)))) == "O(eps^3)");
    CHECK(series_from_json(to_json(s)) == s);
    CHECK(series_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
}

TEST_CASE("field properties on sampled triples")
{
    Sampler rng(2024);
    for (int i = 0; i < 200; ++i) {
        Series a = rng.pure_series();
        Series b = rng.pure_series();
        Series c = rng.pure_series();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);

        Series inv = div(cst(q(1)), a);
        Series unit = a * inv - cst(q(1));
        CHECK(vanishes_to_precision(unit));

        auto va = valuation(a);
        auto vb = valuation(b);
        CHECK(valuation(a * b) == *va + *vb);
        Series sum = a + b;
        if (!sum.is_exact_zero()) {
            auto vs = valuation(sum);
            CHECK(compare(*vs, min(*va, *vb, kInf), kInf) >= 0);
            if (!(*va == *vb))
                CHECK(*vs == min(*va, *vb, kInf));
        }
        CHECK(sign(a * b) == sign(a) * sign(b));

        // trichotomy and transitivity
        int ab = compare(a, b), bc = compare(b, c), ac = compare(a, c);
        CHECK(compare(b, a) == -ab);
        if (ab < 0 && bc < 0)
            CHECK(ac < 0);
    }
}

TEST_CASE("nth_root powers back to the input")
{
    Sampler rng(77);
    for (int i = 0; i < 60; ++i) {
        unsigned long n = static_cast<unsigned long>(rng.integer(2, 3));
        Series a = rng.rootable_series(n);
        Series r = nth_root(a, n);
        Series back = pow(r, static_cast<long>(n)) - a;
        CHECK(vanishes_to_precision(back));
    }
}
