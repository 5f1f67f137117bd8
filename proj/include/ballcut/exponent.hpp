#pragma once

#include <optional>
#include <string>

#include "ballcut/rational.hpp"

namespace ballcut {

/// How the auxiliary level of the exponent group sits relative to the base level.
///
/// AuxInfinitesimal orders exponents with the base component first, so the
/// auxiliary infinitesimal's value is infinitely close to every base value.
/// It is used to realize the edges of ultrametric balls.
///
/// AuxDominant compares the auxiliary component first, so a positive auxiliary
/// value exceeds every base value. Principal and infinite cuts are realized
/// there.
enum class GroupMode { AuxInfinitesimal, AuxDominant };

const char* to_string(GroupMode mode) noexcept;
GroupMode parse_group_mode(const std::string& text);

/// Element of the two-level value group: eps^base * t^aux.
struct Exponent {
    Rat base;
    Rat aux;

    Exponent() = default;
    Exponent(Rat b, Rat a = Rat(0)) : base(std::move(b)), aux(std::move(a)) {}

    bool is_zero() const noexcept { return base.is_zero() && aux.is_zero(); }
    bool is_pure() const noexcept { return aux.is_zero(); }

    Exponent operator-() const { return {-base, -aux}; }
    Exponent& operator+=(const Exponent& o) { base += o.base; aux += o.aux; return *this; }
    Exponent& operator-=(const Exponent& o) { base -= o.base; aux -= o.aux; return *this; }
    friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
    friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }
    friend Exponent operator*(const Rat& k, const Exponent& e) { return {k * e.base, k * e.aux}; }

    /// Componentwise identity; ordering always needs a GroupMode.
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Component compared first under `mode`.
const Rat& primary(const Exponent& e, GroupMode mode) noexcept;
const Rat& secondary(const Exponent& e, GroupMode mode) noexcept;

int compare(const Exponent& a, const Exponent& b, GroupMode mode);
int sign(const Exponent& e, GroupMode mode);
const Exponent& min(const Exponent& a, const Exponent& b, GroupMode mode);
const Exponent& max(const Exponent& a, const Exponent& b, GroupMode mode);

struct ExponentLess {
    GroupMode mode;
    bool operator()(const Exponent& a, const Exponent& b) const { return compare(a, b, mode) < 0; }
};

/// Valuation of a field element: nullopt stands for +infinity (exact zero).
using Valuation = std::optional<Exponent>;

int compare(const Valuation& a, const Valuation& b, GroupMode mode);

/// "1/2" for pure exponents, "(1/2, 1)" otherwise.
std::string to_string(const Exponent& e);
std::string to_string(const Valuation& v);

/// Working precision used when none is given: error order eps^8.
Exponent default_precision();

/// Number of powers of an increment of valuation `step` (positive) that must be
/// summed so that the omitted tail lies at or beyond `target`. When `step` lives
/// purely on the lower level and `target` on the upper one, no finite count
/// reaches it; the count then stops once the lower component reaches the
/// target's upper weight (an eps^8 target becomes t^8 for a t-series).
unsigned long expansion_length(const Exponent& step, const Exponent& target, GroupMode mode);

/// True if an error order `reached` satisfies `target` under the same
/// lower-level equivalence as expansion_length.
bool reaches_precision(const Exponent& reached, const Exponent& target, GroupMode mode);

} // namespace ballcut
