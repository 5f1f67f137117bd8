#include "ballcut/exponent.hpp"

#include <algorithm>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

// Runaway guard for very small increments; the resulting error order stays honest.
constexpr unsigned long kMaxExpansion = 512;

} // namespace

const char* to_string(GroupMode mode) noexcept
{
    return mode == GroupMode::AuxInfinitesimal ? "aux_infinitesimal" : "aux_dominant";
}

GroupMode parse_group_mode(const std::string& text)
{
    if (text == "aux_infinitesimal" || text == "inf" || text == "infinitesimal")
        return GroupMode::AuxInfinitesimal;
    if (text == "aux_dominant" || text == "dom" || text == "dominant")
        return GroupMode::AuxDominant;
    fail(ErrorCode::InvalidArgument, "unknown group mode '" + text + "'");
}

const Rat& primary(const Exponent& e, GroupMode mode) noexcept
{
    return mode == GroupMode::AuxInfinitesimal ? e.base : e.aux;
}

const Rat& secondary(const Exponent& e, GroupMode mode) noexcept
{
    return mode == GroupMode::AuxInfinitesimal ? e.aux : e.base;
}

int compare(const Exponent& a, const Exponent& b, GroupMode mode)
{
    if (auto c = primary(a, mode) <=> primary(b, mode); c != 0)
        return c < 0 ? -1 : 1;
    auto c = secondary(a, mode) <=> secondary(b, mode);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

int sign(const Exponent& e, GroupMode mode)
{
    int s = primary(e, mode).sign();
    return s != 0 ? s : secondary(e, mode).sign();
}

const Exponent& min(const Exponent& a, const Exponent& b, GroupMode mode)
{
    return compare(b, a, mode) < 0 ? b : a;
}

const Exponent& max(const Exponent& a, const Exponent& b, GroupMode mode)
{
    return compare(b, a, mode) > 0 ? b : a;
}

int compare(const Valuation& a, const Valuation& b, GroupMode mode)
{
    if (!a && !b)
        return 0;
    if (!a)
        return 1;
    if (!b)
        return -1;
    return compare(*a, *b, mode);
}

std::string to_string(const Exponent& e)
{
    if (e.is_pure())
        return e.base.str();
    return "(" + e.base.str() + ", " + e.aux.str() + ")";
}

std::string to_string(const Valuation& v)
{
    return v ? to_string(*v) : std::string("+inf");
}

Exponent default_precision()
{
    return Exponent(Rat(8), Rat(0));
}

unsigned long expansion_length(const Exponent& step, const Exponent& target, GroupMode mode)
{
    if (sign(step, mode) <= 0)
        fail(ErrorCode::InvalidArgument, "expansion step must be positive");
    if (sign(target, mode) <= 0)
        return 1;
    const Rat& ps = primary(step, mode);
    const Rat& ss = secondary(step, mode);
    const Rat& pt = primary(target, mode);
    const Rat& st = secondary(target, mode);

    mpz_class n;
    if (ps.sign() > 0) {
        n = (pt / ps).ceil();
        if (n < 1)
            n = 1;
        Rat k{mpq_class(n)};
        if (compare(k * step, target, mode) < 0)
            n += 1;
    } else if (pt.sign() > 0) {
        // Lower-level increment cannot reach an upper-level target.
        n = (pt / ss).ceil();
    } else {
        n = (st / ss).ceil();
    }
    if (n < 1)
        n = 1;
    if (n > kMaxExpansion)
        return kMaxExpansion;
    return n.get_ui();
}

bool reaches_precision(const Exponent& reached, const Exponent& target, GroupMode mode)
{
    if (compare(reached, target, mode) >= 0)
        return true;
    const Rat& pt = primary(target, mode);
    return pt.sign() > 0 && primary(reached, mode).is_zero() && secondary(reached, mode) >= pt;
}

} // namespace ballcut
