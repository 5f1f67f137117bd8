#pragma once

#include <string>
#include <variant>

#include "ballcut/ultrametric.hpp"

namespace ballcut {

enum class Side { Minus, Plus };

inline int sign_of(Side s) noexcept { return s == Side::Plus ? 1 : -1; }
inline char to_char(Side s) noexcept { return s == Side::Plus ? '+' : '-'; }

/// Cut of the series field K given by a pair (lower set, upper set).
/// K elements inside a cut are stored in the aux-infinitesimal mode.
class Cut {
public:
    struct MinusInfinity {
        friend bool operator==(const MinusInfinity&, const MinusInfinity&) = default;
    };
    struct PlusInfinity {
        friend bool operator==(const PlusInfinity&, const PlusInfinity&) = default;
    };
    /// Principal(a, +) has lower set {c <= a}; Principal(a, -) has lower set {c < a}.
    struct Principal {
        Series at;
        Side side;
    };
    /// B+ has lower set {c in B or c < B}; B- has lower set {c < B}.
    struct BallEdge {
        Ball ball;
        Side side;
    };
    using Variant = std::variant<MinusInfinity, PlusInfinity, Principal, BallEdge>;

    static Cut minus_infinity() { return Cut(MinusInfinity{}); }
    static Cut plus_infinity() { return Cut(PlusInfinity{}); }
    static Cut principal(const Series& at, Side side);
    static Cut ball_edge(const Ball& ball, Side side);

    const Variant& value() const noexcept { return value_; }
    template <class T> const T* get_if() const noexcept { return std::get_if<T>(&value_); }

    /// Singleton-ball edges become principal cuts, edges of the whole field become +-inf.
    Cut canonical() const;

private:
    explicit Cut(Variant v) : value_(std::move(v)) {}

    Variant value_;
};

enum class CutSide { Below, Above };

const char* to_string(CutSide s) noexcept;

/// Below iff c lies in the lower set of the cut.
CutSide element_vs_cut(const Series& c, const Cut& cut);

bool cut_equal(const Cut& a, const Cut& b);

/// Cut of K determined by an element w of the two-level extension.
/// In the aux-infinitesimal mode, w = c + s*eps^(q,r) + ... with c the aux-0 part
/// gives an edge of B_{>q}(c) (r > 0) or B_{>=q}(c) (r < 0) on the side of s.
/// In the aux-dominant mode the result is +-inf or a principal cut.
Cut induced_cut(const Series& w);

/// cut+(e), cut-(e), ball+[>=q](e), ball-[>0](e), -inf, +inf
std::string to_string(const Cut& c);

} // namespace ballcut
