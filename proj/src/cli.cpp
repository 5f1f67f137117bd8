#include "ballcut/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "CLI11.hpp"

#include "ballcut/errors.hpp"
#include "ballcut/text.hpp"

namespace ballcut::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string precision;
    std::string mode;
    std::vector<std::string> lets;
    bool json = false;
    std::string p = "inf";
    std::string fns;
    std::string center = "(0, 0)";
    std::vector<std::string> args;
};

// Verb paths and the number of positional arguments each accepts.
struct Verb {
    std::vector<std::string> path;
    std::size_t min_args;
    std::size_t max_args;
    const char* usage;
};

const std::vector<Verb>& verbs()
{
    static const std::vector<Verb> table{
        {{"eval"}, 1, 1, "EXPR"},
        {{"val"}, 1, 1, "EXPR"},
        {{"sign"}, 1, 1, "EXPR"},
        {{"std"}, 1, 1, "EXPR"},
        {{"dist"}, 2, 2, "POINT POINT [--p N|inf]"},
        {{"ball", "member"}, 2, 2, "BALL POINT"},
        {{"cut", "classify"}, 1, 1, "CUT"},
        {{"cut", "compare"}, 2, 2, "CUT CUT"},
        {{"ordering", "sign"}, 2, 2, "CUT FUNC"},
        {{"place", "value"}, 2, 2, "CUT FUNC"},
        {{"place", "equal"}, 2, 2, "CUT CUT"},
        {{"sturm"}, 1, 3, "POLY [LO HI]"},
        {{"monotone"}, 1, 1, "FUNC"},
        {{"branch"}, 3, 3, "CURVE XVAL YSEED"},
        {{"project"}, 2, 2, "BRANCH FUNC"},
        {{"place-equal-curve"}, 2, 2, "BRANCH BRANCH --fns f1,f2,... [--center POINT]"},
        {{"example", "genus2"}, 0, 0, ""},
    };
    return table;
}

const std::set<std::string>& valued_options()
{
    static const std::set<std::string> names{"--precision", "--mode", "--let", "--p", "--fns", "--center"};
    return names;
}

// Expressions such as "-inf" or "-eps" look like flags to an option parser. Known
// options go first and every other token after "--", so CLI11 sees them as positionals.
std::vector<std::string> reorder(const std::vector<std::string>& args)
{
    std::vector<std::string> options, rest;
    bool rest_positional = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (rest_positional) {
            rest.push_back(a);
        } else if (a == "--") {
            rest_positional = true;
        } else if (a == "--json" || a == "--help" || a == "-h") {
            options.push_back(a);
        } else if (valued_options().contains(a.substr(0, a.find('=')))) {
            options.push_back(a);
            if (a.find('=') == std::string::npos && i + 1 < args.size())
                options.push_back(args[++i]);
        } else {
            rest.push_back(a);
        }
    }
    std::vector<std::string> path;
    for (const auto& v : verbs())
        if (rest.size() >= v.path.size() && v.path.size() > path.size() &&
            std::equal(v.path.begin(), v.path.end(), rest.begin()))
            path = v.path;
    if (path.empty() && !rest.empty())
        path.push_back(rest.front());
    std::vector<std::string> out = path;
    out.insert(out.end(), options.begin(), options.end());
    if (rest.size() > path.size()) {
        out.push_back("--");
        out.insert(out.end(), rest.begin() + static_cast<long>(path.size()), rest.end());
    }
    return out;
}

text::Context make_context(const Options& o)
{
    text::Context ctx;
    std::string precision = o.precision;
    if (precision.empty())
        if (const char* env = std::getenv(kPrecisionEnv))
            precision = env;
    if (!precision.empty()) {
        ctx.precision = text::parse_exponent(precision);
        if (ctx.precision.base.sign() <= 0)
            fail(ErrorCode::InvalidArgument, "precision must be strictly positive in its base component");
    }
    if (!o.mode.empty()) {
        ctx.mode = parse_group_mode(o.mode);
        ctx.mode_declared = true;
    }
    for (const auto& let : o.lets) {
        auto eq = let.find('=');
        if (eq == std::string::npos)
            fail(ErrorCode::SyntaxError, "--let expects name=expr, got '" + let + "'");
        std::string name = let.substr(0, eq);
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            fail(ErrorCode::SyntaxError, "bad --let name '" + name + "'");
        for (char c : name)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                fail(ErrorCode::SyntaxError, "bad --let name '" + name + "'");
        if (name == "x" || name == "y" || name == "eps" || name == "t" || name == "sqrt" || name == "cbrt" ||
            name == "root" || name == "O")
            fail(ErrorCode::InvalidArgument, "--let cannot rebind '" + name + "'");
        // Earlier bindings are visible to later ones.
        ctx.lets[name] = text::parse_series(let.substr(eq + 1), ctx);
    }
    return ctx;
}

json valuation_json(const Valuation& v)
{
    if (!v)
        return nullptr;
    return json::array({v->base.str(), v->aux.str()});
}

json standard_part_json(const StandardPart& s)
{
    if (std::holds_alternative<Infinity>(s))
        return "inf";
    return std::get<Rat>(s).str();
}

json interval_json(const Interval& i)
{
    return {{"lo", i.lo ? to_json(*i.lo) : json(nullptr)}, {"hi", i.hi ? to_json(*i.hi) : json(nullptr)},
            {"text", to_string(i)}};
}

const char* cut_kind(const Cut& c)
{
    switch (c.value().index()) {
    case 0: return "minus_infinity";
    case 1: return "plus_infinity";
    case 2: return "principal";
    default: return "ball_edge";
    }
}

std::string signature_text(const std::pair<int, int>& s)
{
    auto ch = [](int v) { return v > 0 ? "+" : (v < 0 ? "-" : "0"); };
    return std::string("(") + ch(s.first) + "," + ch(s.second) + ")";
}

json branch_json(const CurveBranch& b)
{
    return {{"curve", to_string(b.curve.p)},
            {"x", to_json(b.x_val)},
            {"y", to_json(b.y_val)},
            {"y_text", to_string(b.y_val)},
            {"signature", signature_text(b.signature)}};
}

struct Output {
    json j = json::object();
    std::vector<std::string> lines;

    void line(std::string s) { lines.push_back(std::move(s)); }
};

void execute(const std::vector<std::string>& path, const Options& o, Output& res)
{
    text::Context ctx = make_context(o);
    const auto& a = o.args;
    std::string verb = path[0];
    if (path.size() > 1)
        verb += " " + path[1];

    if (verb == "eval") {
        Series v = text::parse_series(a[0], ctx);
        res.j = {{"input", a[0]}, {"value", to_json(v)}, {"text", to_string(v)}};
        res.line(to_string(v));
    } else if (verb == "val") {
        Valuation v = valuation(text::parse_series(a[0], ctx));
        res.j = {{"input", a[0]}, {"valuation", valuation_json(v)}, {"text", to_string(v)}};
        res.line(to_string(v));
    } else if (verb == "sign") {
        int s = sign(text::parse_series(a[0], ctx));
        res.j = {{"input", a[0]}, {"sign", s}};
        res.line(std::to_string(s));
    } else if (verb == "std") {
        StandardPart s = standard_part(text::parse_series(a[0], ctx));
        res.j = {{"input", a[0]}, {"standard_part", standard_part_json(s)}};
        res.line(to_string(s));
    } else if (verb == "dist") {
        Point p = text::parse_point(a[0], ctx);
        Point q = text::parse_point(a[1], ctx);
        Valuation d;
        if (o.p == "inf") {
            d = dist_inf(p, q);
        } else {
            unsigned long n = 0;
            try {
                n = std::stoul(o.p);
            } catch (const std::exception&) {
                fail(ErrorCode::InvalidArgument, "--p expects a positive integer or inf");
            }
            d = dist_p(p, q, static_cast<unsigned>(n));
        }
        res.j = {{"p", o.p}, {"distance", valuation_json(d)}, {"text", to_string(d)}};
        res.line(to_string(d));
    } else if (verb == "ball member") {
        Ball b = text::parse_ball(a[0], ctx);
        bool m = ball_member(b, text::parse_point(a[1], ctx));
        res.j = {{"ball", to_string(b)}, {"member", m}};
        res.line(m ? "true" : "false");
    } else if (verb == "cut classify") {
        Cut c = text::parse_cut(a[0], ctx);
        Cut canon = c.canonical();
        int index = classify_index(c);
        res.j = {{"cut", to_json(c)}, {"canonical", to_json(canon)}, {"kind", cut_kind(canon)}, {"index", index}};
        res.line("kind: " + std::string(cut_kind(canon)));
        res.line("canonical: " + to_string(canon));
        res.line("index: " + std::to_string(index));
    } else if (verb == "cut compare") {
        bool eq = cut_equal(text::parse_cut(a[0], ctx), text::parse_cut(a[1], ctx));
        res.j = {{"equal", eq}};
        res.line(eq ? "equal" : "different");
    } else if (verb == "ordering sign") {
        int s = ordering_sign(text::parse_cut(a[0], ctx), text::parse_function(a[1], ctx));
        res.j = {{"sign", s}};
        res.line(std::to_string(s));
    } else if (verb == "place value") {
        StandardPart s = place_value(text::parse_cut(a[0], ctx), text::parse_function(a[1], ctx));
        res.j = {{"place_value", standard_part_json(s)}};
        res.line(to_string(s));
    } else if (verb == "place equal") {
        Cut c1 = text::parse_cut(a[0], ctx);
        Cut c2 = text::parse_cut(a[1], ctx);
        bool eq = place_equal(c1, c2);
        res.j = {{"place_equal", eq}};
        res.line(eq ? "true" : "false");
        if (!eq) {
            if (auto f = distinguishing_function(c1, c2)) {
                res.j["distinguished_by"] = to_string(*f);
                res.line("distinguished by: " + to_string(*f));
            }
        }
    } else if (verb == "sturm") {
        if (a.size() == 2)
            fail(ErrorCode::InvalidArgument, "sturm takes POLY or POLY LO HI");
        SeriesPoly p = text::parse_polynomial(a[0], ctx);
        Interval iv;
        if (a.size() == 3)
            iv = {text::parse_bound(a[1], ctx), text::parse_bound(a[2], ctx)};
        unsigned n = sturm_count(p, iv);
        res.j = {{"polynomial", to_string(p)}, {"interval", interval_json(iv)}, {"count", n}};
        res.line("count: " + std::to_string(n));
        try {
            json roots = json::array();
            for (const auto& r : real_roots(p, iv)) {
                json rj = interval_json(r.interval);
                std::string line = "root in " + to_string(r.interval);
                if (r.exact) {
                    rj["exact"] = to_json(*r.exact);
                    line += " exactly " + to_string(*r.exact);
                }
                roots.push_back(rj);
                res.line(line);
            }
            res.j["roots"] = roots;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IsolationFailed)
                throw;
            res.j["roots"] = nullptr;
            res.j["isolation"] = e.what();
            res.line(std::string("isolation failed: ") + e.what());
        }
    } else if (verb == "monotone") {
        RationalFn f = text::parse_function(a[0], ctx);
        MonotonicDecomposition d = monotonic_decomposition(f);
        json bps = json::array(), segs = json::array();
        for (std::size_t k = 0; k < d.segments.size(); ++k) {
            const auto& s = d.segments[k];
            segs.push_back({{"direction", to_string(s.direction)}, {"sample", to_json(s.sample)}});
            res.line(std::string("segment: ") + to_string(s.direction) + " near " + to_string(s.sample));
            if (k < d.breakpoints.size()) {
                const auto& b = d.breakpoints[k];
                json bj = interval_json(b.location.interval);
                bj["pole"] = b.pole;
                std::string line = std::string(b.pole ? "pole" : "turn") + " in " + to_string(b.location.interval);
                if (b.location.exact) {
                    bj["exact"] = to_json(*b.location.exact);
                    line += " exactly " + to_string(*b.location.exact);
                }
                bps.push_back(bj);
                res.line(line);
            }
        }
        res.j = {{"function", to_string(f)}, {"breakpoints", bps}, {"segments", segs}};
    } else if (verb == "branch") {
        std::string spec = a[0] + " ; " + a[1] + " ; " + a[2];
        CurveBranch b = text::parse_branch(spec, ctx);
        res.j = branch_json(b);
        res.line("y: " + to_string(b.y_val));
        res.line("signature: " + signature_text(b.signature));
    } else if (verb == "project") {
        CurveBranch b = text::parse_branch(a[0], ctx);
        BiRational f = text::parse_plane_function(a[1], ctx);
        Series v = evaluate(b, f, ctx.precision);
        Cut c = project_cut(b, f, ctx.precision);
        res.j = {{"branch", branch_json(b)}, {"function", to_string(f)}, {"value", to_json(v)}, {"cut", to_json(c)}};
        res.line("value: " + to_string(v));
        res.line("cut: " + to_string(c));
    } else if (verb == "place-equal-curve") {
        if (o.fns.empty())
            fail(ErrorCode::InvalidArgument, "place-equal-curve needs --fns f1,f2,...");
        CurveBranch b1 = text::parse_branch(a[0], ctx);
        CurveBranch b2 = text::parse_branch(a[1], ctx);
        std::vector<CurveFunction> fns;
        for (const auto& f : text::split_top_level(o.fns, ','))
            fns.push_back({f, text::parse_plane_function(f, ctx)});
        Point center = text::parse_point(o.center, ctx);
        CurvePlaceVerdict v = place_equal_on_curve(b1, b2, fns, center, ctx.precision);
        res.j = {{"verdict", to_string(v)}};
        if (auto* d = std::get_if<DistinguishedBy>(&v))
            res.j["distinguished_by"] = {{"function", d->function}, {"first", to_json(d->first)}, {"second", to_json(d->second)}};
        res.line(to_string(v));
    } else if (verb == "example genus2") {
        Genus2Report r = genus2_example(ctx.precision);
        res.j = to_json(r);
        std::string t = to_text(r);
        if (!t.empty() && t.back() == '\n')
            t.pop_back();
        res.line(t);
    }
}

} // namespace

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact arithmetic with ball cuts and real places over generalized Puiseux series", "ballcut"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--precision", o.precision, "working precision p/q (default 8, or $BALLCUT_PRECISION)");
    app.add_option("--mode", o.mode, "group mode: inf (t infinitesimal) or dom (t dominant); enables t");
    app.add_option("--let", o.lets, "bind name=expr (repeatable)");
    app.add_flag("--json", o.json, "emit JSON");

    std::map<CLI::App*, const Verb*> leaves;
    std::map<std::string, CLI::App*> groups;
    for (const auto& v : verbs()) {
        CLI::App* parent = &app;
        if (v.path.size() == 2) {
            auto [it, fresh] = groups.try_emplace(v.path[0], nullptr);
            if (fresh) {
                it->second = app.add_subcommand(v.path[0], v.path[0] + " commands");
                it->second->require_subcommand(1);
                it->second->fallthrough();
            }
            parent = it->second;
        }
        CLI::App* sub = parent->add_subcommand(v.path.back(), v.usage);
        sub->fallthrough();
        sub->add_option("args", o.args, v.usage);
        if (v.path[0] == "dist")
            sub->add_option("--p", o.p, "exponent p of d_p, or inf");
        if (v.path[0] == "place-equal-curve") {
            sub->add_option("--fns", o.fns, "comma-separated functions of x and y");
            sub->add_option("--center", o.center, "center of the rho witness");
        }
        leaves[sub] = &v;
    }
    app.fallthrough();

    std::vector<std::string> args = reorder(raw);
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    const Verb* verb = nullptr;
    for (auto [sub, v] : leaves)
        if (sub->parsed())
            verb = v;
    if (verb == nullptr) {
        err << "error: missing command\n";
        return 1;
    }
    if (o.args.size() < verb->min_args || o.args.size() > verb->max_args) {
        std::string name = verb->path[0] + (verb->path.size() > 1 ? " " + verb->path[1] : "");
        err << "usage: ballcut " << name << " " << verb->usage << "\n";
        return 1;
    }

    Output res;
    try {
        execute(verb->path, o, res);
    } catch (const Error& e) {
        bool indeterminate = e.code() == ErrorCode::IndeterminateAtPrecision;
        if (o.json)
            out << json{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}}.dump(2) << "\n";
        err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        if (indeterminate)
            err << "hint: raise --precision (or " << kPrecisionEnv << ") to resolve more terms\n";
        return indeterminate ? 2 : 1;
    }
    if (o.json) {
        out << res.j.dump(2) << "\n";
    } else {
        for (const auto& l : res.lines)
            out << l << "\n";
    }
    return 0;
}

} // namespace ballcut::cli
