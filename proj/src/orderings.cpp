#include "ballcut/orderings.hpp"

#include <algorithm>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

constexpr GroupMode kInf = GroupMode::AuxInfinitesimal;
constexpr GroupMode kDom = GroupMode::AuxDominant;

Series aux_unit(const Rat& base, const Rat& aux, GroupMode mode, Side side)
{
    return Series::monomial(Rat(sign_of(side)), Exponent(base, aux), mode);
}

struct Values {
    Series num;
    Series den;
};

Values evaluate_parts(const Realization& r, const RationalFn& f)
{
    Values v{f.numerator().evaluate(r.point), f.denominator().evaluate(r.point)};
    if (v.den.is_exact_zero())
        fail(ErrorCode::PoleAtRealization, "denominator vanishes at " + to_string(r.point));
    return v;
}

const Rat& leading_coefficient(const Series& s)
{
    if (s.terms().empty())
        fail(ErrorCode::IndeterminateAtPrecision, "no known term in " + to_string(s));
    return s.terms().front().coeff;
}

} // namespace

Realization realize(const Cut& cut)
{
    if (const auto* e = cut.get_if<Cut::BallEdge>(); e && e->ball.radius.kind() == GroupCut::Kind::All)
        fail(ErrorCode::Unrealizable, "the whole field has no edge to realize");
    Cut c = cut.canonical();
    return std::visit(
        [&](const auto& k) -> Realization {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Cut::MinusInfinity>) {
                return {c, aux_unit(Rat(0), Rat(-1), kDom, Side::Minus), kDom};
            } else if constexpr (std::is_same_v<K, Cut::PlusInfinity>) {
                return {c, aux_unit(Rat(0), Rat(-1), kDom, Side::Plus), kDom};
            } else if constexpr (std::is_same_v<K, Cut::Principal>) {
                return {c, k.at.in_mode(kDom) + aux_unit(Rat(0), Rat(1), kDom, k.side), kDom};
            } else {
                const GroupCut& r = k.ball.radius;
                Rat aux = r.kind() == GroupCut::Kind::AtLeast ? Rat(-1) : Rat(1);
                return {c, k.ball.scalar_center() + aux_unit(r.threshold(), aux, kInf, k.side), kInf};
            }
        },
        c.value());
}

int ordering_sign(const Cut& cut, const RationalFn& f)
{
    if (f.is_zero())
        return 0;
    Values v = evaluate_parts(realize(cut), f);
    return sign(v.num) * sign(v.den);
}

std::function<CutSide(const Series&)> psi(const Cut& cut)
{
    return [cut](const Series& a) {
        RationalFn shifted = RationalFn::x() - RationalFn::constant(aligned(a, kInf));
        return ordering_sign(cut, shifted) > 0 ? CutSide::Below : CutSide::Above;
    };
}

StandardPart place_value(const Cut& cut, const RationalFn& f)
{
    if (f.is_zero())
        return Rat(0);
    Realization r = realize(cut);
    Values v = evaluate_parts(r, f);
    Valuation vn = valuation(v.num);
    Valuation vd = valuation(v.den);
    if (!vn)
        return Rat(0);
    int s = sign(*vn - *vd, r.mode);
    if (s > 0)
        return Rat(0);
    if (s < 0)
        return Infinity{};
    return leading_coefficient(v.num) / leading_coefficient(v.den);
}

int classify_index(const Cut&)
{
    return 2;
}

bool place_equal(const Cut& a, const Cut& b)
{
    Cut ca = a.canonical();
    Cut cb = b.canonical();
    auto infinite = [](const Cut& c) {
        return c.get_if<Cut::MinusInfinity>() != nullptr || c.get_if<Cut::PlusInfinity>() != nullptr;
    };
    if (infinite(ca) || infinite(cb))
        return infinite(ca) && infinite(cb);
    const auto* pa = ca.get_if<Cut::Principal>();
    const auto* pb = cb.get_if<Cut::Principal>();
    if (pa || pb)
        return pa && pb && compare(pa->at, pb->at) == 0;
    const auto* ea = ca.get_if<Cut::BallEdge>();
    const auto* eb = cb.get_if<Cut::BallEdge>();
    return balls_comparable(ea->ball, eb->ball) == BallRelation::Equal;
}

namespace {

std::optional<Series> cut_center(const Cut& c)
{
    if (const auto* p = c.get_if<Cut::Principal>())
        return p->at;
    if (const auto* e = c.get_if<Cut::BallEdge>())
        return e->ball.scalar_center();
    return std::nullopt;
}

std::optional<Rat> cut_radius(const Cut& c)
{
    if (const auto* e = c.get_if<Cut::BallEdge>())
        return e->ball.radius.threshold();
    return std::nullopt;
}

} // namespace

std::optional<RationalFn> distinguishing_function(const Cut& a, const Cut& b)
{
    Cut ca = a.canonical();
    Cut cb = b.canonical();

    std::vector<Series> centers;
    for (const auto& c : {cut_center(ca), cut_center(cb)})
        if (c)
            centers.push_back(*c);
    if (centers.empty())
        centers.push_back(Series::constant(Rat(0)));

    std::vector<Rat> deltas{Rat(0)};
    for (const auto& r : {cut_radius(ca), cut_radius(cb)})
        if (r)
            deltas.push_back(*r);
    if (centers.size() == 2)
        if (Valuation d = dist(centers[0], centers[1]); d && d->is_pure())
            deltas.push_back(d->base);
    std::vector<Rat> anchors = deltas;
    for (std::size_t i = 0; i < anchors.size(); ++i)
        for (std::size_t j = i + 1; j < anchors.size(); ++j)
            deltas.push_back((anchors[i] + anchors[j]) / Rat(2));
    Rat lo = *std::min_element(anchors.begin(), anchors.end());
    Rat hi = *std::max_element(anchors.begin(), anchors.end());
    deltas.push_back(lo - Rat(1));
    deltas.push_back(hi + Rat(1));

    for (const auto& c : centers) {
        RationalFn shifted = RationalFn::x() - RationalFn::constant(c);
        for (const auto& delta : deltas) {
            RationalFn scale = RationalFn::constant(Series::monomial(Rat(1), Exponent(delta)));
            RationalFn scaled = shifted / scale;
            for (const auto& f : {scaled, scale / shifted, scaled * scaled})
                if (place_value(a, f) != place_value(b, f))
                    return f;
        }
    }
    return std::nullopt;
}

} // namespace ballcut
