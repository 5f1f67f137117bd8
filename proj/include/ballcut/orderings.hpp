#pragma once

#include <functional>
#include <optional>

#include "ballcut/cuts.hpp"
#include "ballcut/polynomial.hpp"

namespace ballcut {

/// A value of x realizing a cut: every f in K(x) takes its sign on the cut's
/// adjacent interval at this point.
struct Realization {
    Cut cut;
    Series point;
    GroupMode mode;
};

/// Principal(a, +-) -> a +- t and +-inf -> +-1/t (aux-dominant);
/// edges of B_{>q}(c), B_{>=q}(c), B_{>0}(c) -> c +- eps^(q,1), c +- eps^(q,-1), c +- eps^(0,1).
Realization realize(const Cut& cut);

/// Sign of f on the ordering of K(x) induced by the cut.
int ordering_sign(const Cut& cut, const RationalFn& f);

/// a -> Below iff x - a is positive in the induced ordering.
std::function<CutSide(const Series&)> psi(const Cut& cut);

/// Value of the R-place of the induced ordering at f.
StandardPart place_value(const Cut& cut, const RationalFn& f);

/// Index [v(K(x)) : 2v(K(x))] of the induced ordering. Every representable cut is a ball cut.
int classify_index(const Cut& cut);

/// Same R-place iff the cuts are edges of one ball.
bool place_equal(const Cut& a, const Cut& b);

/// Searches (x-c)/d, d/(x-c) and ((x-c)/d)^2 for c among the cut centers and
/// d = eps^delta for delta at the radii, the center distance, their midpoints and
/// one step outside; returns a function whose place values differ.
std::optional<RationalFn> distinguishing_function(const Cut& a, const Cut& b);

} // namespace ballcut
