#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ballcut/orderings.hpp"

namespace ballcut {

/// Plane curve p(x, y) = 0 over K.
struct PlaneCurve {
    BiPoly p;

    explicit PlaneCurve(BiPoly poly);
};

/// Series solution y of p(x_val, y) = 0. The branch realizes a cut of the curve.
struct CurveBranch {
    PlaneCurve curve;
    Series x_val;
    Series y_val;
    /// (sign of x_val, sign of y_val)
    std::pair<int, int> signature;
};

/// Named function on the curve.
struct CurveFunction {
    std::string name;
    BiRational f;
};

/// Newton iteration y <- y - q(y)/q'(y), q = p(x_val, .), from a seed with
/// v(q(y0)) > 2 v(q'(y0)). The error order of y_val is v(q(y)) - v(q'(y)).
CurveBranch newton_branch(const PlaneCurve& curve, const Series& x_val, const Series& y_seed,
                          const Exponent& precision = default_precision());

Series evaluate(const CurveBranch& branch, const BiRational& f, const Exponent& precision = default_precision());

/// Cut of K obtained by pushing the branch forward along f.
Cut project_cut(const CurveBranch& branch, const BiRational& f, const Exponent& precision = default_precision());

/// sum_i (p_i - q_i)^2
Series rho(const Point& p, const Point& q);
/// (x - p_1)^2 + (y - p_2)^2 as a function on the plane.
CurveFunction rho_function(const Point& center);

/// Whether the squared distance to `center` projects both branches to the same cut.
bool rho_place_witness(const CurveBranch& a, const CurveBranch& b, const Point& center,
                       const Exponent& precision = default_precision());

struct PlacesEqual {};
struct DistinguishedBy {
    std::string function;
    Cut first;
    Cut second;
};
struct Inconclusive {};
using CurvePlaceVerdict = std::variant<PlacesEqual, DistinguishedBy, Inconclusive>;

std::string to_string(const CurvePlaceVerdict& v);

/// DistinguishedBy the first function whose projections are not edges of one
/// ball; otherwise PlacesEqual when the rho witness at `center` holds.
CurvePlaceVerdict place_equal_on_curve(const CurveBranch& a, const CurveBranch& b,
                                       const std::vector<CurveFunction>& fns, const Point& center,
                                       const Exponent& precision = default_precision());

struct Genus2Branch {
    std::string label;
    CurveBranch branch;
    Series z;
    Cut cut_x;
    Cut cut_y;
    Cut cut_z;
    /// (z+1)(z-1) - (a^2 - x^2 - (a/x)^2) along the branch.
    Series identity_residual;
};

struct Genus2Report {
    Series a;
    PlaneCurve curve;
    std::vector<Genus2Branch> branches;
    /// Verdicts for every pair (i, j), i < j, of branches.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, CurvePlaceVerdict>> verdicts;
    /// Branch labels grouped by equal R-place.
    std::vector<std::vector<std::string>> classes;
    bool identity_holds;
};

/// y^2 + (x^2 - a^2)(x^2 - 1) = 0 with a = eps and the four branches at x = +-eps^(0,1).
Genus2Report genus2_example(const Exponent& precision = default_precision());

std::string to_text(const Genus2Report& r);
nlohmann::json to_json(const Genus2Report& r);

nlohmann::json to_json(const Cut& c);

} // namespace ballcut
