#include "ballcut/ultrametric.hpp"

#include <tuple>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

void require_same_dimension(const Point& p, const Point& q)
{
    if (p.dimension() != q.dimension())
        fail(ErrorCode::DimensionMismatch, "points of dimension " + std::to_string(p.dimension()) + " and " +
                                               std::to_string(q.dimension()));
}

// Inclusion key of a radius set: larger key, smaller set.
// All < AtLeast(g) < GreaterThan(g) < AtLeast(g') for g < g' < Singleton.
std::tuple<int, Rat, int> inclusion_key(const GroupCut& r)
{
    switch (r.kind()) {
    case GroupCut::Kind::All: return {0, Rat(0), 0};
    case GroupCut::Kind::AtLeast: return {1, r.threshold(), 0};
    case GroupCut::Kind::GreaterThan:
    case GroupCut::Kind::AllPositive: return {1, r.threshold(), 1};
    case GroupCut::Kind::Singleton: return {2, Rat(0), 0};
    }
    return {0, Rat(0), 0};
}

} // namespace

Point::Point(std::vector<Series> coords) : coords_(std::move(coords))
{
    if (coords_.empty())
        fail(ErrorCode::InvalidArgument, "a point needs at least one coordinate");
    for (const auto& c : coords_)
        if (c.mode() != coords_.front().mode())
            fail(ErrorCode::IncompatibleModes, "point coordinates with different group modes");
}

std::string to_string(const Point& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        if (i)
            out += ", ";
        out += to_string(p[i]);
    }
    return out + ")";
}

GroupCut GroupCut::at_least(Rat threshold)
{
    return GroupCut(Kind::AtLeast, std::move(threshold));
}

GroupCut GroupCut::greater_than(Rat threshold)
{
    if (threshold.is_zero())
        return all_positive();
    return GroupCut(Kind::GreaterThan, std::move(threshold));
}

bool GroupCut::contains(const Valuation& d, GroupMode mode) const
{
    if (!d)
        return true;
    switch (kind_) {
    case Kind::All: return true;
    case Kind::Singleton: return false;
    case Kind::AtLeast: return compare(*d, Exponent(threshold_), mode) >= 0;
    case Kind::GreaterThan:
    case Kind::AllPositive: return compare(*d, Exponent(threshold_), mode) > 0;
    }
    return false;
}

int GroupCut::compare_inclusion(const GroupCut& other) const
{
    auto mine = inclusion_key(*this);
    auto theirs = inclusion_key(other);
    if (mine == theirs)
        return 0;
    return mine > theirs ? -1 : 1;
}

GroupCut GroupCut::doubled() const
{
    switch (kind_) {
    case Kind::AtLeast: return at_least(Rat(2) * threshold_);
    case Kind::GreaterThan: return greater_than(Rat(2) * threshold_);
    default: return *this;
    }
}

std::string to_string(const GroupCut& r)
{
    switch (r.kind()) {
    case GroupCut::Kind::AtLeast: return ">=" + r.threshold().str();
    case GroupCut::Kind::GreaterThan: return ">" + r.threshold().str();
    case GroupCut::Kind::AllPositive: return ">0";
    case GroupCut::Kind::All: return "all";
    case GroupCut::Kind::Singleton: return "point";
    }
    return "?";
}

Ball::Ball(Point c, GroupCut r) : center(std::move(c)), radius(std::move(r))
{
    if (center.dimension() == 0)
        fail(ErrorCode::InvalidArgument, "ball without a center");
}

const Series& Ball::scalar_center() const
{
    if (dimension() != 1)
        fail(ErrorCode::DimensionMismatch, "expected a ball on the line");
    return center[0];
}

std::string to_string(const Ball& b)
{
    std::string inner = b.dimension() == 1 ? to_string(b.center[0]) : to_string(b.center);
    return "B[" + to_string(b.radius) + "](" + inner + ")";
}

const char* to_string(BallRelation r) noexcept
{
    switch (r) {
    case BallRelation::Disjoint: return "disjoint";
    case BallRelation::FirstInSecond: return "first-in-second";
    case BallRelation::SecondInFirst: return "second-in-first";
    case BallRelation::Equal: return "equal";
    }
    return "?";
}

Valuation dist(const Series& a, const Series& b)
{
    return valuation(b - a);
}

Valuation dist_inf(const Point& p, const Point& q)
{
    require_same_dimension(p, q);
    GroupMode mode = p.mode();
    Valuation best;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        Valuation d = dist(p[i], q[i]);
        if (compare(d, best, mode) < 0)
            best = d;
    }
    return best;
}

Valuation dist_p(const Point& p, const Point& q, unsigned p_exponent)
{
    if (p_exponent == 0)
        fail(ErrorCode::InvalidArgument, "d_p needs p >= 1");
    require_same_dimension(p, q);
    Series sum(p.mode());
    for (std::size_t i = 0; i < p.dimension(); ++i)
        sum += pow(abs(q[i] - p[i]), static_cast<long>(p_exponent));
    Valuation v = valuation(sum);
    if (!v)
        return v;
    return Rat(mpq_class(1, p_exponent)) * *v;
}

bool ball_member(const Ball& b, const Series& q)
{
    return ball_member(b, Point{q});
}

bool ball_member(const Ball& b, const Point& q)
{
    return b.radius.contains(dist_inf(b.center, q), b.center.mode());
}

BallRelation balls_comparable(const Ball& first, const Ball& second)
{
    require_same_dimension(first.center, second.center);
    int inclusion = first.radius.compare_inclusion(second.radius);
    if (inclusion == 0)
        return ball_member(first, second.center) ? BallRelation::Equal : BallRelation::Disjoint;
    // Nested or disjoint: the smaller ball lies inside the larger iff its center does.
    if (inclusion < 0)
        return ball_member(second, first.center) ? BallRelation::FirstInSecond : BallRelation::Disjoint;
    return ball_member(first, second.center) ? BallRelation::SecondInFirst : BallRelation::Disjoint;
}

} // namespace ballcut
