#pragma once

// Helpers shared by the unit and acceptance suites: short constructors for
// series literals and seeded random generators for property checks.

#include <random>
#include <vector>

#include "ballcut/cuts.hpp"
#include "ballcut/polynomial.hpp"

namespace ballcut::testing {

inline constexpr GroupMode kInf = GroupMode::AuxInfinitesimal;
inline constexpr GroupMode kDom = GroupMode::AuxDominant;

inline Rat q(long n, long d = 1) { return Rat(n, d); }

/// c * eps^base * t^aux
inline Series mono(Rat c, Rat base, Rat aux = Rat(0), GroupMode mode = kInf)
{
    return Series::monomial(c, Exponent(std::move(base), std::move(aux)), mode);
}

inline Series cst(Rat c, GroupMode mode = kInf) { return Series::constant(c, mode); }
inline Series eps(Rat base = Rat(1), GroupMode mode = kInf) { return mono(Rat(1), std::move(base), Rat(0), mode); }

class Sampler {
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rat rational(long span = 5, long max_den = 4)
    {
        long num = integer(-span, span);
        long den = integer(1, max_den);
        return Rat(num, den);
    }

    Rat nonzero_rational(long span = 5, long max_den = 4)
    {
        for (;;) {
            Rat r = rational(span, max_den);
            if (!r.is_zero())
                return r;
        }
    }

    /// Exponent from a small grid of rationals in [lo, hi].
    Rat exponent(long lo = -2, long hi = 4, long max_den = 3)
    {
        long den = integer(1, max_den);
        return Rat(integer(lo * den, hi * den), den);
    }

    /// Exact pure series with up to `max_terms` terms.
    Series pure_series(int max_terms = 4, GroupMode mode = kInf, long lo = -2, long hi = 4)
    {
        std::vector<Term> terms;
        int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i)
            terms.push_back({Exponent(exponent(lo, hi)), nonzero_rational()});
        auto s = Series::from_terms(mode, std::move(terms), std::nullopt);
        return s.is_exact_zero() ? cst(nonzero_rational(), mode) : s;
    }

    /// Exact pure nonzero series whose leading coefficient is r^n for rational r.
    Series rootable_series(unsigned long n, int max_terms = 4)
    {
        Rat base_coeff = nonzero_rational(4, 3);
        if (n % 2 == 0)
            base_coeff = abs(base_coeff);
        Rat lead = pow(base_coeff, n);
        Rat lead_exp = Rat(static_cast<long>(n)) * exponent(-1, 2);
        std::vector<Term> terms{{Exponent(lead_exp), lead}};
        int extra = static_cast<int>(integer(0, max_terms - 1));
        for (int i = 0; i < extra; ++i)
            terms.push_back({Exponent(lead_exp + Rat(integer(1, 6), integer(1, 3))), nonzero_rational()});
        return Series::from_terms(kInf, std::move(terms), std::nullopt);
    }

    GroupCut radius(long lo = -1, long hi = 3)
    {
        switch (integer(0, 2)) {
        case 0: return GroupCut::at_least(exponent(lo, hi));
        case 1: return GroupCut::greater_than(exponent(lo, hi));
        default: return GroupCut::all_positive();
        }
    }

    Side side() { return coin() ? Side::Plus : Side::Minus; }

    /// Cut of kind 0: -inf, 1: +inf, 2: principal, 3: ball edge.
    Cut cut(int kind)
    {
        switch (kind) {
        case 0: return Cut::minus_infinity();
        case 1: return Cut::plus_infinity();
        case 2: return Cut::principal(pure_series(3, kInf, -1, 3), side());
        default: return Cut::ball_edge(Ball(pure_series(3, kInf, -1, 3), radius()), side());
        }
    }

    Cut any_cut() { return cut(static_cast<int>(integer(0, 5)) < 2 ? static_cast<int>(integer(0, 2)) : 3); }

    /// Polynomial of degree <= max_degree with exact pure coefficients.
    SeriesPoly poly(int max_degree = 2)
    {
        std::vector<Series> cs;
        int d = static_cast<int>(integer(0, max_degree));
        for (int i = 0; i <= d; ++i)
            cs.push_back(coin() ? pure_series(2, kInf, -1, 3) : Series(kInf));
        cs.back() = pure_series(2, kInf, -1, 3);
        return SeriesPoly(std::move(cs));
    }

    RationalFn rational_fn(int max_degree = 2) { return RationalFn(poly(max_degree), poly(max_degree)); }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace ballcut::testing
