#pragma once

#include <string>
#include <vector>

#include "ballcut/series.hpp"

namespace ballcut {

/// Point of affine n-space over the series field.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Series> coords);
    Point(std::initializer_list<Series> coords) : Point(std::vector<Series>(coords)) {}

    std::size_t dimension() const noexcept { return coords_.size(); }
    const std::vector<Series>& coords() const noexcept { return coords_; }
    const Series& operator[](std::size_t i) const { return coords_[i]; }
    GroupMode mode() const { return coords_.front().mode(); }

    friend bool operator==(const Point&, const Point&) = default;

private:
    std::vector<Series> coords_;
};

std::string to_string(const Point& p);

/// Radius of an ultrametric ball: an upper set of the value group Q, plus the
/// degenerate radius {+inf} of a one-point ball.
class GroupCut {
public:
    enum class Kind { AtLeast, GreaterThan, AllPositive, All, Singleton };

    static GroupCut at_least(Rat threshold);
    /// {g > 0} is normalized to AllPositive.
    static GroupCut greater_than(Rat threshold);
    static GroupCut all_positive() { return GroupCut(Kind::AllPositive, Rat(0)); }
    static GroupCut all() { return GroupCut(Kind::All, Rat(0)); }
    static GroupCut singleton() { return GroupCut(Kind::Singleton, Rat(0)); }

    Kind kind() const noexcept { return kind_; }
    /// Bound of AtLeast/GreaterThan; 0 for AllPositive.
    const Rat& threshold() const noexcept { return threshold_; }

    /// Whether a distance lies in the radius set (+inf always does).
    bool contains(const Valuation& d, GroupMode mode) const;

    /// Compares radius sets by inclusion: negative if *this is the smaller set.
    int compare_inclusion(const GroupCut& other) const;

    /// {2g : g in U}, the radius of squared distances.
    GroupCut doubled() const;

    friend bool operator==(const GroupCut&, const GroupCut&) = default;

private:
    GroupCut(Kind kind, Rat threshold) : kind_(kind), threshold_(std::move(threshold)) {}

    Kind kind_;
    Rat threshold_;
};

/// ">=1/2", ">1", ">0", "point", "all"
std::string to_string(const GroupCut& r);

/// B_U(center) = {q : d(center, q) in U or +inf}. Every member is a center.
struct Ball {
    Point center;
    GroupCut radius;

    Ball(Point c, GroupCut r);
    Ball(const Series& c, GroupCut r) : Ball(Point{c}, std::move(r)) {}

    std::size_t dimension() const noexcept { return center.dimension(); }
    /// Center of a one-dimensional ball.
    const Series& scalar_center() const;
};

std::string to_string(const Ball& b);

enum class BallRelation { Disjoint, FirstInSecond, SecondInFirst, Equal };

const char* to_string(BallRelation r) noexcept;

/// d(a, b) = v(b - a); +inf iff a = b.
Valuation dist(const Series& a, const Series& b);
/// min_i v(x_i - y_i)
Valuation dist_inf(const Point& p, const Point& q);
/// v(sum_i |x_i - y_i|^p) / p
Valuation dist_p(const Point& p, const Point& q, unsigned p_exponent);

bool ball_member(const Ball& b, const Series& q);
bool ball_member(const Ball& b, const Point& q);

BallRelation balls_comparable(const Ball& first, const Ball& second);

} // namespace ballcut
