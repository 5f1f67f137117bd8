#include "ballcut/curve.hpp"

#include <sstream>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

constexpr int kMaxNewtonSteps = 64;

Valuation residual_order(const SeriesPoly& q, const SeriesPoly& dq, const Series& y, Valuation& slope)
{
    Valuation vq = valuation(q.evaluate(y));
    slope = valuation(dq.evaluate(y));
    if (!vq)
        return std::nullopt;
    if (!slope)
        fail(ErrorCode::NewtonNoConvergence, "derivative vanishes at " + to_string(y));
    return *vq - *slope;
}

int signum_or_zero(const Series& s)
{
    return s.is_exact_zero() ? 0 : sign(s);
}

BiRational var_x(GroupMode mode = GroupMode::AuxInfinitesimal)
{
    return BiRational(BiPoly::x(mode));
}

BiRational var_y(GroupMode mode = GroupMode::AuxInfinitesimal)
{
    return BiRational(BiPoly::y(mode));
}

BiRational constant(const Series& c)
{
    return BiRational(BiPoly::constant(c));
}

} // namespace

PlaneCurve::PlaneCurve(BiPoly poly) : p(std::move(poly))
{
    if (p.is_zero())
        fail(ErrorCode::InvalidArgument, "the zero polynomial defines no curve");
    if (p.degree_y() == 0)
        fail(ErrorCode::InvalidArgument, "curve equation must involve y");
    for (const auto& [k, c] : p.terms())
        if (!c.is_pure())
            fail(ErrorCode::IncompatibleModes, "curve coefficients must lie in K");
}

CurveBranch newton_branch(const PlaneCurve& curve, const Series& x_val, const Series& y_seed, const Exponent& precision)
{
    if (x_val.mode() != y_seed.mode())
        fail(ErrorCode::IncompatibleModes, "branch point with mixed group modes");
    GroupMode mode = x_val.mode();
    SeriesPoly q = curve.p.in_y(x_val);
    SeriesPoly dq = q.derivative();

    Series y = y_seed.known_part();
    Valuation slope;
    Valuation err = residual_order(q, dq, y, slope);
    if (err && compare(*err, *slope, mode) <= 0)
        fail(ErrorCode::NewtonNoConvergence, "seed " + to_string(y_seed) + " is not in the basin of a simple root");

    for (int step = 0; err && !reaches_precision(*err, precision, mode); ++step) {
        if (step == kMaxNewtonSteps)
            fail(ErrorCode::NewtonNoConvergence, "no convergence from seed " + to_string(y_seed));
        // Quadratic convergence: the next iterate is good to about twice the current error.
        Exponent target = Rat(2) * *err;
        if (compare(target, precision, mode) > 0 || reaches_precision(target, precision, mode))
            target = precision;
        Exponent wanted = *err + *slope;
        Exponent step_precision = compare(target, wanted, mode) > 0 ? target : wanted;
        Series next = y - div(q.evaluate(y), dq.evaluate(y), step_precision);
        Valuation next_err = residual_order(q, dq, next.known_part(), slope);
        if (next_err && compare(*next_err, *err, mode) <= 0)
            fail(ErrorCode::NewtonNoConvergence, "Newton step did not improve the root near " + to_string(y));
        y = next.known_part();
        err = next_err;
    }

    Series y_val = err ? Series::from_terms(mode, y.terms(), *err) : y;
    return {curve, x_val, y_val, {signum_or_zero(x_val), signum_or_zero(y_val)}};
}

Series evaluate(const CurveBranch& branch, const BiRational& f, const Exponent& precision)
{
    return f.evaluate(branch.x_val, branch.y_val, precision);
}

Cut project_cut(const CurveBranch& branch, const BiRational& f, const Exponent& precision)
{
    return induced_cut(evaluate(branch, f, precision));
}

Series rho(const Point& p, const Point& q)
{
    if (p.dimension() != q.dimension())
        fail(ErrorCode::DimensionMismatch, "rho of points of different dimensions");
    Series sum(p.mode());
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        Series d = q[i] - p[i];
        sum += d * d;
    }
    return sum;
}

CurveFunction rho_function(const Point& center)
{
    if (center.dimension() != 2)
        fail(ErrorCode::DimensionMismatch, "rho on a plane curve needs a point of the plane");
    BiRational dx = var_x() - constant(center[0]);
    BiRational dy = var_y() - constant(center[1]);
    return {"rho", dx * dx + dy * dy};
}

bool rho_place_witness(const CurveBranch& a, const CurveBranch& b, const Point& center, const Exponent& precision)
{
    BiRational r = rho_function(center).f;
    return cut_equal(project_cut(a, r, precision), project_cut(b, r, precision));
}

std::string to_string(const CurvePlaceVerdict& v)
{
    if (std::holds_alternative<PlacesEqual>(v))
        return "equal";
    if (const auto* d = std::get_if<DistinguishedBy>(&v))
        return "distinguished by " + d->function + ": " + to_string(d->first) + " vs " + to_string(d->second);
    return "inconclusive";
}

CurvePlaceVerdict place_equal_on_curve(const CurveBranch& a, const CurveBranch& b, const std::vector<CurveFunction>& fns,
                                       const Point& center, const Exponent& precision)
{
    for (const auto& fn : fns) {
        Cut ca = project_cut(a, fn.f, precision);
        Cut cb = project_cut(b, fn.f, precision);
        if (!place_equal(ca, cb))
            return DistinguishedBy{fn.name, ca, cb};
    }
    if (rho_place_witness(a, b, center, precision))
        return PlacesEqual{};
    return Inconclusive{};
}

Genus2Report genus2_example(const Exponent& precision)
{
    constexpr GroupMode mode = GroupMode::AuxInfinitesimal;
    Series a = Series::monomial(Rat(1), Exponent(Rat(1)), mode);
    Series one = Series::constant(Rat(1), mode);
    BiPoly x = BiPoly::x(mode);
    BiPoly y = BiPoly::y(mode);
    PlaneCurve curve(y * y + (x * x - BiPoly::constant(a * a)) * (x * x - BiPoly::constant(one)));

    BiRational fz = var_y() / var_x();
    Series t = Series::monomial(Rat(1), Exponent(Rat(0), Rat(1)), mode);
    Genus2Report report{a, curve, {}, {}, {}, true};

    for (int sx : {1, -1})
        for (int sy : {1, -1}) {
            Series x_val = Rat(sx) * t;
            CurveBranch branch = newton_branch(curve, x_val, Rat(sy) * t, precision);
            Series z = evaluate(branch, fz, precision);
            Series a_over_x = div(a, x_val, precision);
            Series residual = (z + one) * (z - one) - (a * a - x_val * x_val - a_over_x * a_over_x);
            bool vanishes = residual.terms().empty() && residual.error_order() &&
                            reaches_precision(*residual.error_order(), precision, mode);
            report.identity_holds = report.identity_holds && vanishes;
            std::string label = std::string("(") + (sx > 0 ? "+" : "-") + "," + (sy > 0 ? "+" : "-") + ")";
            report.branches.push_back({label, branch, z, project_cut(branch, var_x(), precision),
                                       project_cut(branch, var_y(), precision), induced_cut(z), residual});
        }

    std::vector<CurveFunction> fns{{"x", var_x()}, {"y", var_y()}, {"y/x", fz}};
    Point origin{Series::constant(Rat(0), mode), Series::constant(Rat(0), mode)};
    std::vector<int> cls(report.branches.size(), -1);
    for (std::size_t i = 0; i < report.branches.size(); ++i)
        for (std::size_t j = i + 1; j < report.branches.size(); ++j) {
            CurvePlaceVerdict v =
                place_equal_on_curve(report.branches[i].branch, report.branches[j].branch, fns, origin, precision);
            report.verdicts.push_back({{i, j}, v});
        }
    for (std::size_t i = 0; i < report.branches.size(); ++i) {
        if (cls[i] >= 0)
            continue;
        cls[i] = static_cast<int>(report.classes.size());
        report.classes.push_back({report.branches[i].label});
        for (const auto& [pair, v] : report.verdicts)
            if (pair.first == i && std::holds_alternative<PlacesEqual>(v) && cls[pair.second] < 0) {
                cls[pair.second] = cls[i];
                report.classes.back().push_back(report.branches[pair.second].label);
            }
    }
    return report;
}

std::string to_text(const Genus2Report& r)
{
    std::ostringstream out;
    out << "curve: " << to_string(r.curve.p) << " = 0\n";
    out << "a = " << to_string(r.a) << "\n";
    for (const auto& b : r.branches) {
        out << "branch " << b.label << "\n";
        out << "  x = " << to_string(b.branch.x_val) << "\n";
        out << "  y = " << to_string(b.branch.y_val) << "\n";
        out << "  z = y/x = " << to_string(b.z) << "\n";
        out << "  pi_x = " << to_string(b.cut_x) << "\n";
        out << "  pi_y = " << to_string(b.cut_y) << "\n";
        out << "  pi_z = " << to_string(b.cut_z) << "\n";
        out << "  (z+1)(z-1) - (a^2 - x^2 - (a/x)^2) = " << to_string(b.identity_residual) << "\n";
    }
    for (const auto& [pair, v] : r.verdicts)
        out << r.branches[pair.first].label << " vs " << r.branches[pair.second].label << ": " << to_string(v) << "\n";
    out << "identity: " << (r.identity_holds ? "holds" : "fails") << " to precision\n";
    out << "pairing:";
    for (const auto& c : r.classes) {
        out << " {";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? " ~ " : "") << c[i];
        out << "}";
    }
    out << "\n";
    return out.str();
}

nlohmann::json to_json(const Cut& c)
{
    nlohmann::json j;
    j["text"] = to_string(c);
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Cut::MinusInfinity>) {
                j["kind"] = "minus_infinity";
            } else if constexpr (std::is_same_v<K, Cut::PlusInfinity>) {
                j["kind"] = "plus_infinity";
            } else if constexpr (std::is_same_v<K, Cut::Principal>) {
                j["kind"] = "principal";
                j["at"] = to_json(k.at);
                j["side"] = std::string(1, to_char(k.side));
            } else {
                j["kind"] = "ball_edge";
                j["center"] = to_json(k.ball.scalar_center());
                j["radius"] = to_string(k.ball.radius);
                j["side"] = std::string(1, to_char(k.side));
            }
        },
        c.value());
    return j;
}

nlohmann::json to_json(const Genus2Report& r)
{
    nlohmann::json j;
    j["curve"] = to_string(r.curve.p);
    j["a"] = to_json(r.a);
    j["branches"] = nlohmann::json::array();
    for (const auto& b : r.branches)
        j["branches"].push_back({{"label", b.label},
                                 {"x", to_json(b.branch.x_val)},
                                 {"y", to_json(b.branch.y_val)},
                                 {"z", to_json(b.z)},
                                 {"pi_x", to_json(b.cut_x)},
                                 {"pi_y", to_json(b.cut_y)},
                                 {"pi_z", to_json(b.cut_z)},
                                 {"identity_residual", to_json(b.identity_residual)}});
    j["verdicts"] = nlohmann::json::array();
    for (const auto& [pair, v] : r.verdicts)
        j["verdicts"].push_back({{"first", r.branches[pair.first].label},
                                 {"second", r.branches[pair.second].label},
                                 {"verdict", to_string(v)}});
    j["pairing"] = r.classes;
    j["identity_holds"] = r.identity_holds;
    return j;
}

} // namespace ballcut
