#include "ballcut/text.hpp"

#include <algorithm>
#include <cctype>

#include "ballcut/errors.hpp"
#include "ballcut/expr.hpp"

namespace ballcut::text {

namespace {

std::string trim(const std::string& s)
{
    auto b = std::find_if_not(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
    auto e = std::find_if_not(s.rbegin(), s.rend(), [](unsigned char c) { return std::isspace(c); }).base();
    return b < e ? std::string(b, e) : std::string();
}

[[noreturn]] void malformed(const std::string& what, const std::string& s)
{
    fail(ErrorCode::SyntaxError, "malformed " + what + " '" + s + "'");
}

bool starts_with(const std::string& s, const char* prefix)
{
    return s.rfind(prefix, 0) == 0;
}

// Index of the bracket closing the one at `open`, or npos.
std::size_t closing(const std::string& s, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[')
            ++depth;
        else if ((s[i] == ')' || s[i] == ']') && --depth == 0)
            return i;
    }
    return std::string::npos;
}

expr::ParseOptions options(const Context& ctx, std::set<std::string> extra, bool allow_aux)
{
    expr::ParseOptions o;
    for (const auto& [name, value] : ctx.lets)
        o.variables.insert(name);
    o.variables.merge(extra);
    o.allow_aux = allow_aux;
    return o;
}

expr::SeriesContext series_context(const Context& ctx, GroupMode mode)
{
    return {mode, ctx.precision, ctx.lets};
}

// Center and radius text of "[radius](center)" starting at `at`.
std::pair<std::string, std::string> radius_and_center(const std::string& s, std::size_t at, const char* what)
{
    if (at >= s.size() || s[at] != '[')
        malformed(what, s);
    std::size_t close = s.find(']', at);
    if (close == std::string::npos || close + 1 >= s.size() || s[close + 1] != '(' || closing(s, close + 1) != s.size() - 1)
        malformed(what, s);
    return {s.substr(at + 1, close - at - 1), s.substr(close + 2, s.size() - close - 3)};
}

} // namespace

std::vector<std::string> split_top_level(const std::string& s, char sep)
{
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        if (c == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

Exponent parse_exponent(const std::string& raw)
{
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '(' && s.back() == ')') {
        auto parts = split_top_level(s.substr(1, s.size() - 2), ',');
        if (parts.size() != 2)
            malformed("exponent", raw);
        return Exponent(Rat::parse(parts[0]), Rat::parse(parts[1]));
    }
    return Exponent(Rat::parse(s));
}

Series parse_series(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {}, ctx.mode_declared));
    return expr::eval(ast, series_context(ctx, ctx.mode));
}

Series parse_field_element(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {}, false));
    Series v = expr::eval(ast, series_context(ctx, GroupMode::AuxInfinitesimal));
    if (!v.is_pure())
        fail(ErrorCode::InvalidArgument, "'" + s + "' is not an element of the base field");
    return v;
}

Point parse_point(const std::string& raw, const Context& ctx)
{
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '(' && closing(s, 0) == s.size() - 1) {
        auto parts = split_top_level(s.substr(1, s.size() - 2), ',');
        if (parts.size() > 1) {
            std::vector<Series> coords;
            for (const auto& p : parts)
                coords.push_back(parse_series(p, ctx));
            return Point(std::move(coords));
        }
    }
    return Point{parse_series(s, ctx)};
}

GroupCut parse_radius(const std::string& raw)
{
    std::string s = trim(raw);
    if (s == "all")
        return GroupCut::all();
    if (s == "point")
        return GroupCut::singleton();
    if (starts_with(s, ">="))
        return GroupCut::at_least(Rat::parse(trim(s.substr(2))));
    if (starts_with(s, ">"))
        return GroupCut::greater_than(Rat::parse(trim(s.substr(1))));
    malformed("radius", raw);
}

Ball parse_ball(const std::string& raw, const Context& ctx)
{
    std::string s = trim(raw);
    if (!starts_with(s, "B"))
        malformed("ball", raw);
    auto [radius, center] = radius_and_center(s, 1, "ball");
    return Ball(parse_point(center, ctx), parse_radius(radius));
}

Cut parse_cut(const std::string& raw, const Context& ctx)
{
    std::string s = trim(raw);
    if (s == "-inf")
        return Cut::minus_infinity();
    if (s == "+inf")
        return Cut::plus_infinity();
    auto side_at = [&](std::size_t i) {
        if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
            malformed("cut", raw);
        return s[i] == '+' ? Side::Plus : Side::Minus;
    };
    if (starts_with(s, "cut")) {
        Side side = side_at(3);
        if (s.size() < 6 || s[4] != '(' || closing(s, 4) != s.size() - 1)
            malformed("cut", raw);
        return Cut::principal(parse_field_element(s.substr(5, s.size() - 6), ctx), side);
    }
    if (starts_with(s, "ball")) {
        Side side = side_at(4);
        auto [radius, center] = radius_and_center(s, 5, "cut");
        return Cut::ball_edge(Ball(parse_field_element(center, ctx), parse_radius(radius)), side);
    }
    malformed("cut", raw);
}

Cut cut_from_json(const nlohmann::json& j)
{
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "minus_infinity")
            return Cut::minus_infinity();
        if (kind == "plus_infinity")
            return Cut::plus_infinity();
        Side side = j.at("side").get<std::string>() == "+" ? Side::Plus : Side::Minus;
        if (kind == "principal")
            return Cut::principal(series_from_json(j.at("at")), side);
        if (kind == "ball_edge")
            return Cut::ball_edge(Ball(series_from_json(j.at("center")), parse_radius(j.at("radius").get<std::string>())),
                                  side);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::InvalidArgument, std::string("malformed cut JSON: ") + e.what());
    }
    fail(ErrorCode::InvalidArgument, "unknown cut kind in JSON");
}

RationalFn parse_function(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {"x"}, false));
    return expr::eval_rational(ast, series_context(ctx, GroupMode::AuxInfinitesimal));
}

SeriesPoly parse_polynomial(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {"x"}, false));
    return expr::eval_poly(ast, series_context(ctx, GroupMode::AuxInfinitesimal));
}

BiRational parse_plane_function(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {"x", "y"}, false));
    return expr::eval_birational(ast, series_context(ctx, GroupMode::AuxInfinitesimal));
}

PlaneCurve parse_curve(const std::string& s, const Context& ctx)
{
    auto ast = expr::parse(s, options(ctx, {"x", "y"}, false));
    return PlaneCurve(expr::eval_bipoly(ast, series_context(ctx, GroupMode::AuxInfinitesimal)));
}

CurveBranch parse_branch(const std::string& s, const Context& ctx)
{
    auto parts = split_top_level(s, ';');
    if (parts.size() != 3)
        malformed("branch (expected CURVE ; XVAL ; YSEED)", s);
    Context local = ctx;
    local.mode_declared = true;
    local.mode = GroupMode::AuxInfinitesimal;
    return newton_branch(parse_curve(parts[0], ctx), parse_series(parts[1], local), parse_series(parts[2], local),
                         ctx.precision);
}

std::optional<Series> parse_bound(const std::string& raw, const Context& ctx)
{
    std::string s = trim(raw);
    if (s == "-inf" || s == "+inf" || s == "inf")
        return std::nullopt;
    return parse_field_element(s, ctx);
}

} // namespace ballcut::text
