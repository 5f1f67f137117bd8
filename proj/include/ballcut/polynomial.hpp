#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ballcut/series.hpp"

namespace ballcut {

/// Dense univariate polynomial with Series coefficients, index = degree.
/// Leading exact zeros are trimmed; an inexact leading coefficient is kept.
class SeriesPoly {
public:
    SeriesPoly() = default;
    explicit SeriesPoly(std::vector<Series> coeffs);

    static SeriesPoly constant(const Series& c) { return SeriesPoly({c}); }
    static SeriesPoly x(GroupMode mode = GroupMode::AuxInfinitesimal);
    /// Monic polynomial with the given roots.
    static SeriesPoly from_roots(const std::vector<Series>& roots, GroupMode mode = GroupMode::AuxInfinitesimal);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Series>& coeffs() const noexcept { return coeffs_; }
    Series coeff(int i) const;
    const Series& leading() const;
    GroupMode mode() const;

    SeriesPoly derivative() const;
    /// Horner evaluation; pure coefficients follow the mode of `at`.
    Series evaluate(const Series& at) const;

    SeriesPoly operator-() const;
    SeriesPoly& operator+=(const SeriesPoly& o);
    SeriesPoly& operator-=(const SeriesPoly& o);
    friend SeriesPoly operator+(SeriesPoly a, const SeriesPoly& b) { return a += b; }
    friend SeriesPoly operator-(SeriesPoly a, const SeriesPoly& b) { return a -= b; }
    friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
    friend SeriesPoly operator*(const Series& k, const SeriesPoly& p);

    friend bool operator==(const SeriesPoly&, const SeriesPoly&) = default;

private:
    void trim();

    std::vector<Series> coeffs_;
};

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
SeriesPoly pseudo_remainder(const SeriesPoly& a, const SeriesPoly& b);

std::string to_string(const SeriesPoly& p, const std::string& var = "x");

/// Re-tag a pure series under `mode` when needed.
Series aligned(const Series& s, GroupMode mode);

/// Element N/D of K(x).
class RationalFn {
public:
    RationalFn() : RationalFn(SeriesPoly()) {}
    RationalFn(SeriesPoly num, SeriesPoly den = SeriesPoly::constant(Series::constant(Rat(1))));

    static RationalFn x() { return RationalFn(SeriesPoly::x()); }
    static RationalFn constant(const Series& c) { return RationalFn(SeriesPoly::constant(c)); }

    const SeriesPoly& numerator() const noexcept { return num_; }
    const SeriesPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFn derivative() const;

    /// N(at)/D(at); PoleAtRealization if D(at) is exactly zero.
    Series evaluate(const Series& at, const Exponent& precision = default_precision()) const;

    RationalFn operator-() const;
    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);

private:
    SeriesPoly num_;
    SeriesPoly den_;
};

std::string to_string(const RationalFn& f);

/// Sparse polynomial in x and y with Series coefficients, keyed by (deg x, deg y).
class BiPoly {
public:
    using Key = std::pair<unsigned, unsigned>;

    BiPoly() = default;

    static BiPoly constant(const Series& c);
    static BiPoly x(GroupMode mode = GroupMode::AuxInfinitesimal);
    static BiPoly y(GroupMode mode = GroupMode::AuxInfinitesimal);

    const std::map<Key, Series>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    unsigned degree_y() const;

    Series evaluate(const Series& x, const Series& y) const;
    BiPoly derivative_y() const;
    /// Substitute x = at, giving a polynomial in y.
    SeriesPoly in_y(const Series& at) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    void add_term(const Key& k, const Series& c);

    std::map<Key, Series> terms_;
};

std::string to_string(const BiPoly& p);

/// Element N/D of K(x, y).
class BiRational {
public:
    BiRational() = default;
    BiRational(BiPoly num, BiPoly den = BiPoly::constant(Series::constant(Rat(1))));

    const BiPoly& numerator() const noexcept { return num_; }
    const BiPoly& denominator() const noexcept { return den_; }

    /// PoleAtRealization if the denominator is exactly zero at the point.
    Series evaluate(const Series& x, const Series& y, const Exponent& precision = default_precision()) const;

    BiRational operator-() const;
    friend BiRational operator+(const BiRational& a, const BiRational& b);
    friend BiRational operator-(const BiRational& a, const BiRational& b);
    friend BiRational operator*(const BiRational& a, const BiRational& b);
    friend BiRational operator/(const BiRational& a, const BiRational& b);

private:
    BiPoly num_;
    BiPoly den_ = BiPoly::constant(Series::constant(Rat(1)));
};

std::string to_string(const BiRational& f);

} // namespace ballcut
