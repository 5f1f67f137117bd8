#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ballcut/polynomial.hpp"

namespace ballcut {

/// Open interval of K; a missing end is unbounded.
struct Interval {
    std::optional<Series> lo;
    std::optional<Series> hi;

    static Interval whole() { return {}; }
    bool contains(const Series& x) const;
};

std::string to_string(const Interval& i);

/// Sturm chain of p and p', built from the subresultant sequence with tracked
/// signs. Counts distinct real roots on open intervals; p need not be squarefree.
class SturmChain {
public:
    explicit SturmChain(const SeriesPoly& p);

    const std::vector<SeriesPoly>& polys() const noexcept { return polys_; }
    unsigned count(const Interval& i) const;

private:
    /// Sign variations just beside `at` on `side`, or at the infinite end `side`.
    int variations_at(const std::optional<Series>& at, int side) const;

    std::vector<SeriesPoly> polys_;
};

unsigned sturm_count(const SeriesPoly& p, const Interval& i);

struct RealRoot {
    Interval interval;
    /// Set when the root lies in K and was found exactly.
    std::optional<Series> exact;
};

/// Isolating intervals for the distinct real roots of p in i, sorted.
std::vector<RealRoot> real_roots(const SeriesPoly& p, const Interval& i = Interval::whole());
std::vector<Interval> isolate_roots(const SeriesPoly& p, const Interval& i = Interval::whole());
/// Real roots of p that are finite series, found by Newton polygon descent.
std::vector<Series> exact_roots(const SeriesPoly& p);

enum class Direction { Increasing, Decreasing };

const char* to_string(Direction d) noexcept;

struct Breakpoint {
    RealRoot location;
    bool pole;
};

struct MonotoneSegment {
    Direction direction;
    /// A point strictly inside the segment.
    Series sample;
};

/// segments[k] lies between breakpoints[k-1] and breakpoints[k].
struct MonotonicDecomposition {
    std::vector<Breakpoint> breakpoints;
    std::vector<MonotoneSegment> segments;
};

MonotonicDecomposition monotonic_decomposition(const RationalFn& f);

} // namespace ballcut
