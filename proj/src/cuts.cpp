#include "ballcut/cuts.hpp"

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

constexpr GroupMode kFieldMode = GroupMode::AuxInfinitesimal;

Series field_element(const Series& s)
{
    if (!s.is_pure())
        fail(ErrorCode::IncompatibleModes, "cut data must lie in K: " + to_string(s));
    return s.in_mode(kFieldMode);
}

Ball field_ball(const Ball& b)
{
    if (b.dimension() != 1)
        fail(ErrorCode::DimensionMismatch, "cuts of K need a ball on the line");
    return Ball(field_element(b.scalar_center()), b.radius);
}

Series aux_free_part(const Series& w)
{
    std::vector<Term> terms;
    for (const auto& term : w.terms())
        if (term.exp.aux.is_zero())
            terms.push_back({Exponent(term.exp.base), term.coeff});
    return Series::from_terms(kFieldMode, std::move(terms), std::nullopt);
}

Cut induced_dominant(const Series& w)
{
    const auto& terms = w.terms();
    if (!terms.empty() && terms.front().exp.aux.sign() < 0)
        return terms.front().coeff.sign() > 0 ? Cut::plus_infinity() : Cut::minus_infinity();
    for (const auto& term : terms)
        if (term.exp.aux.sign() > 0)
            return Cut::principal(aux_free_part(w), term.coeff.sign() > 0 ? Side::Plus : Side::Minus);
    if (w.is_exact())
        fail(ErrorCode::PureElement, "element of K defines two cuts: " + to_string(w));
    fail(ErrorCode::IndeterminateAtPrecision, "no auxiliary term before the error order: " + to_string(w));
}

} // namespace

Cut Cut::principal(const Series& at, Side side)
{
    return Cut(Principal{field_element(at), side});
}

Cut Cut::ball_edge(const Ball& ball, Side side)
{
    return Cut(BallEdge{field_ball(ball), side});
}

Cut Cut::canonical() const
{
    const auto* edge = get_if<BallEdge>();
    if (!edge)
        return *this;
    switch (edge->ball.radius.kind()) {
    case GroupCut::Kind::Singleton: return principal(edge->ball.scalar_center(), edge->side);
    case GroupCut::Kind::All: return edge->side == Side::Plus ? plus_infinity() : minus_infinity();
    default: return *this;
    }
}

const char* to_string(CutSide s) noexcept
{
    return s == CutSide::Below ? "below" : "above";
}

CutSide element_vs_cut(const Series& c, const Cut& cut)
{
    Series x = field_element(c);
    bool below = std::visit(
        [&](const auto& k) -> bool {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Cut::MinusInfinity>) {
                return false;
            } else if constexpr (std::is_same_v<K, Cut::PlusInfinity>) {
                return true;
            } else if constexpr (std::is_same_v<K, Cut::Principal>) {
                int cmp = compare(x, k.at);
                return k.side == Side::Plus ? cmp <= 0 : cmp < 0;
            } else {
                if (ball_member(k.ball, x))
                    return k.side == Side::Plus;
                return compare(x, k.ball.scalar_center()) < 0;
            }
        },
        cut.value());
    return below ? CutSide::Below : CutSide::Above;
}

bool cut_equal(const Cut& a, const Cut& b)
{
    Cut ca = a.canonical();
    Cut cb = b.canonical();
    if (ca.value().index() != cb.value().index())
        return false;
    if (const auto* pa = ca.get_if<Cut::Principal>()) {
        const auto* pb = cb.get_if<Cut::Principal>();
        return pa->side == pb->side && compare(pa->at, pb->at) == 0;
    }
    if (const auto* ea = ca.get_if<Cut::BallEdge>()) {
        const auto* eb = cb.get_if<Cut::BallEdge>();
        return ea->side == eb->side && balls_comparable(ea->ball, eb->ball) == BallRelation::Equal;
    }
    return true;
}

Cut induced_cut(const Series& w)
{
    if (w.mode() == GroupMode::AuxDominant)
        return induced_dominant(w);

    const Term* mixed = nullptr;
    for (const auto& term : w.terms())
        if (!term.exp.aux.is_zero()) {
            mixed = &term;
            break;
        }
    if (!mixed) {
        if (w.is_exact())
            fail(ErrorCode::PureElement, "element of K defines two cuts: " + to_string(w));
        fail(ErrorCode::IndeterminateAtPrecision, "no auxiliary term before the error order: " + to_string(w));
    }
    const Rat& q = mixed->exp.base;
    GroupCut radius = mixed->exp.aux.sign() > 0 ? GroupCut::greater_than(q) : GroupCut::at_least(q);
    Side side = mixed->coeff.sign() > 0 ? Side::Plus : Side::Minus;
    return Cut::ball_edge(Ball(aux_free_part(w), radius), side);
}

std::string to_string(const Cut& c)
{
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Cut::MinusInfinity>)
                return "-inf";
            else if constexpr (std::is_same_v<K, Cut::PlusInfinity>)
                return "+inf";
            else if constexpr (std::is_same_v<K, Cut::Principal>)
                return std::string("cut") + to_char(k.side) + "(" + to_string(k.at) + ")";
            else
                return std::string("ball") + to_char(k.side) + "[" + to_string(k.ball.radius) + "](" +
                       to_string(k.ball.scalar_center()) + ")";
        },
        c.value());
}

} // namespace ballcut
