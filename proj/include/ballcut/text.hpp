#pragma once

#include <map>
#include <string>
#include <vector>

#include "ballcut/curve.hpp"
#include "ballcut/realroots.hpp"

namespace ballcut::text {

/// Shared settings for reading CLI arguments.
struct Context {
    GroupMode mode = GroupMode::AuxInfinitesimal;
    /// Whether the user declared a mode, which makes `t` available.
    bool mode_declared = false;
    Exponent precision = default_precision();
    /// Named series from `--let name=expr`.
    std::map<std::string, Series> lets;
};

/// Exponent such as "8", "17/2" or "(8, 1)".
Exponent parse_exponent(const std::string& s);

Series parse_series(const std::string& s, const Context& ctx);
/// Element of the base field K (no `t`), in the aux-infinitesimal mode.
Series parse_field_element(const std::string& s, const Context& ctx);
/// "expr" for a point on the line or "(e1, e2, ...)".
Point parse_point(const std::string& s, const Context& ctx);
/// ">=q", ">q", ">0", "all", "point"
GroupCut parse_radius(const std::string& s);
/// "B[radius](center)"
Ball parse_ball(const std::string& s, const Context& ctx);
/// "cut+(e)", "cut-(e)", "ball+[radius](e)", "ball-[radius](e)", "-inf", "+inf"
Cut parse_cut(const std::string& s, const Context& ctx);
Cut cut_from_json(const nlohmann::json& j);

/// Rational function in x.
RationalFn parse_function(const std::string& s, const Context& ctx);
/// Polynomial in x.
SeriesPoly parse_polynomial(const std::string& s, const Context& ctx);
/// Rational function in x and y.
BiRational parse_plane_function(const std::string& s, const Context& ctx);
PlaneCurve parse_curve(const std::string& s, const Context& ctx);
/// "CURVE ; XVAL ; YSEED", followed by Newton iteration.
CurveBranch parse_branch(const std::string& s, const Context& ctx);
/// Interval end: an expression, "-inf" or "+inf".
std::optional<Series> parse_bound(const std::string& s, const Context& ctx);

/// Splits on `sep` outside parentheses and brackets, trimming each piece.
std::vector<std::string> split_top_level(const std::string& s, char sep);

} // namespace ballcut::text
