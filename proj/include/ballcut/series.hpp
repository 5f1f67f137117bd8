#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ballcut/exponent.hpp"
#include "ballcut/rational.hpp"

namespace ballcut {

struct Term {
    Exponent exp;
    Rat coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Truncated generalized Puiseux series in eps (base level) and t (auxiliary
/// level) with rational coefficients.
///
/// A series is a finite list of known terms plus an optional error order: when
/// present, the true value differs from the known part by something of valuation
/// at least error_order. Terms are strictly increasing in the mode's order, have
/// nonzero coefficients and lie strictly below the error order.
class Series {
public:
    explicit Series(GroupMode mode = GroupMode::AuxInfinitesimal) : mode_(mode) {}

    static Series constant(const Rat& c, GroupMode mode = GroupMode::AuxInfinitesimal);
    static Series monomial(const Rat& c, const Exponent& e, GroupMode mode = GroupMode::AuxInfinitesimal);
    static Series big_o(const Exponent& e, GroupMode mode = GroupMode::AuxInfinitesimal);
    /// Sorts, merges equal exponents, drops zeros and anything at or beyond the error order.
    static Series from_terms(GroupMode mode, std::vector<Term> terms, std::optional<Exponent> error_order);

    GroupMode mode() const noexcept { return mode_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::optional<Exponent>& error_order() const noexcept { return error_order_; }

    bool is_exact() const noexcept { return !error_order_; }
    bool is_exact_zero() const noexcept { return terms_.empty() && !error_order_; }
    /// No auxiliary component anywhere: an element of the base field.
    bool is_pure() const noexcept;

    /// The known terms as an exact series.
    Series known_part() const;
    /// Forget everything at or beyond `order`.
    Series truncated(const Exponent& order) const;
    /// Re-tag a pure series under another group mode. Mixed series cannot move.
    Series in_mode(GroupMode mode) const;

    Rat coefficient(const Exponent& e) const;

    /// Leading exponent if a term is known, otherwise the error order, otherwise +inf.
    Valuation valuation_bound() const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Series& o);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Series& b) { return a *= b; }
    friend Series operator*(const Rat& k, const Series& s);
    /// Division at the default working precision.
    friend Series operator/(const Series& a, const Series& b);

    /// Structural identity (same mode, terms and error order), not field equality.
    friend bool operator==(const Series&, const Series&) = default;

private:
    void normalize();

    GroupMode mode_;
    std::vector<Term> terms_;
    std::optional<Exponent> error_order_;
};

struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
};

/// Residue in Q, or the infinity marker for elements outside the convex hull of Q.
using StandardPart = std::variant<Rat, Infinity>;

std::string to_string(const StandardPart& s);

Series div(const Series& a, const Series& b, const Exponent& precision = default_precision());
Series nth_root(const Series& a, unsigned long n, const Exponent& precision = default_precision());
Series pow(const Series& a, long n, const Exponent& precision = default_precision());
Series abs(const Series& a);

int sign(const Series& a);
Valuation valuation(const Series& a);
StandardPart standard_part(const Series& a);
/// Sign of a - b.
int compare(const Series& a, const Series& b);

std::string to_string(const Series& s);

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

} // namespace ballcut
