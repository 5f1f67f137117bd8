#include "ballcut/realroots.hpp"

#include <algorithm>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

constexpr GroupMode kInf = GroupMode::AuxInfinitesimal;

// Simple rational branches are followed this deep looking for roots in K.
constexpr int kExactDepth = 8;
// Clusters of several roots sharing a prefix are split at most this deep.
constexpr int kClusterDepth = 64;

Series monomial(const Rat& c, const Rat& base)
{
    return Series::monomial(c, Exponent(base), kInf);
}

// Sign of p on the side (+1 right, -1 left) of a, arbitrarily close to a:
// the first nonzero derivative decides, flipped on the left for odd order.
int sign_beside(const SeriesPoly& p, const Series& a, int side)
{
    SeriesPoly d = p;
    for (int k = 0; !d.is_zero(); ++k) {
        int s = sign(d.evaluate(a));
        if (s != 0)
            return (side < 0 && k % 2 == 1) ? -s : s;
        d = d.derivative();
    }
    return 0;
}

int sign_at_infinity(const SeriesPoly& p, int side)
{
    int s = sign(p.leading());
    return (side < 0 && p.degree() % 2 == 1) ? -s : s;
}

const Term& leading_term(const Series& s)
{
    if (s.terms().empty())
        fail(ErrorCode::IndeterminateAtPrecision, "coefficient without a known term: " + to_string(s));
    return s.terms().front();
}

// Divides out eps^(min valuation) and a positive rational so chain coefficients stay small.
SeriesPoly normalized(const SeriesPoly& p)
{
    std::optional<Rat> low;
    for (const auto& c : p.coeffs())
        if (!c.terms().empty()) {
            const Rat& b = c.terms().front().exp.base;
            if (!low || b < *low)
                low = b;
        }
    if (!low)
        return p;
    Rat scale = Rat(1) / abs(leading_term(p.leading()).coeff);
    return Series::monomial(scale, Exponent(-*low), p.mode()) * p;
}

SeriesPoly shifted(const SeriesPoly& q, const Series& by)
{
    SeriesPoly linear({by, Series::constant(Rat(1))});
    SeriesPoly out;
    for (int i = q.degree(); i >= 0; --i)
        out = out * linear + SeriesPoly::constant(q.coeffs()[static_cast<std::size_t>(i)]);
    return out;
}

Series power(const Series& s, int n)
{
    Series out = Series::constant(Rat(1), s.mode());
    for (int i = 0; i < n; ++i)
        out *= s;
    return out;
}

// a / b when b divides a in the ring of finite series.
Series exact_quotient(const Series& a, const Series& b)
{
    if (a.is_exact_zero())
        return a;
    if (!a.is_exact() || !b.is_exact() || b.is_exact_zero())
        fail(ErrorCode::IndeterminateAtPrecision, "exact division needs exact operands");
    GroupMode mode = a.mode();
    const Term& lead = b.terms().front();
    // Quotient exponents cannot exceed top(a) - top(b).
    Exponent limit = a.terms().back().exp - b.terms().back().exp;
    Series q(mode);
    Series r = a;
    while (!r.is_exact_zero()) {
        const Term& top = r.terms().front();
        Exponent e = top.exp - lead.exp;
        if (compare(e, limit, mode) > 0)
            fail(ErrorCode::InvalidArgument, "inexact division of " + to_string(a) + " by " + to_string(b));
        Series t = Series::monomial(top.coeff / lead.coeff, e, mode);
        q += t;
        r -= t * b;
    }
    return q;
}

SeriesPoly divided(const SeriesPoly& p, const Series& by)
{
    std::vector<Series> cs;
    for (const auto& c : p.coeffs())
        cs.push_back(exact_quotient(c, by));
    return SeriesPoly(std::move(cs));
}

// ---- real roots of rational polynomials (edge polynomials) ----

struct EdgeRoot {
    Rat lo;
    Rat hi;
    bool rational;
};

Rat evaluate(const std::vector<Rat>& e, const Rat& z)
{
    Rat acc(0);
    for (auto it = e.rbegin(); it != e.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// Synthetic division by (z - c); assumes c is a root.
std::vector<Rat> deflate(const std::vector<Rat>& e, const Rat& c)
{
    std::vector<Rat> out(e.size() - 1, Rat(0));
    Rat carry(0);
    for (std::size_t i = e.size() - 1; i > 0; --i) {
        carry = carry * c + e[i];
        out[i - 1] = carry;
    }
    return out;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> out;
    if (n > mpz_class("100000000"))
        return out;
    for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

std::vector<Rat> rational_roots(const std::vector<Rat>& e)
{
    mpz_class lcm = 1;
    for (const auto& c : e)
        lcm = lcm * c.den() / gcd(lcm, c.den());
    mpz_class a0 = (e.front() * Rat(mpq_class(lcm))).num();
    mpz_class an = (e.back() * Rat(mpq_class(lcm))).num();
    std::vector<Rat> roots;
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(an))
            for (int s : {1, -1}) {
                Rat c{mpq_class(s * p, q)};
                if (evaluate(e, c).is_zero() && std::find(roots.begin(), roots.end(), c) == roots.end())
                    roots.push_back(c);
            }
    return roots;
}

SeriesPoly as_poly(const std::vector<Rat>& e)
{
    std::vector<Series> cs;
    for (const auto& c : e)
        cs.push_back(Series::constant(c));
    return SeriesPoly(std::move(cs));
}

void bisect(const SturmChain& chain, const std::vector<Rat>& e, Rat lo, Rat hi, std::vector<EdgeRoot>& out,
            std::vector<Rat>& found_rational)
{
    unsigned n = chain.count({Series::constant(lo), Series::constant(hi)});
    if (n == 0)
        return;
    Rat mid = (lo + hi) / Rat(2);
    bool mid_is_root = evaluate(e, mid).is_zero();
    // A cell around the root must not reach 0, so an interval touching 0 is refined further.
    if (n == 1 && !mid_is_root && !lo.is_zero() && !hi.is_zero()) {
        out.push_back({lo, hi, false});
        return;
    }
    if (mid_is_root)
        found_rational.push_back(mid);
    bisect(chain, e, lo, mid, out, found_rational);
    bisect(chain, e, mid, hi, out, found_rational);
}

Rat cauchy_bound(const std::vector<Rat>& e)
{
    Rat m(0);
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        m = std::max(m, abs(e[i] / e.back()));
    return m + Rat(1);
}

// Real roots of e (rational coefficients, e(0) != 0), sorted, as disjoint
// intervals of one sign; rational roots are exact.
std::vector<EdgeRoot> edge_roots(const std::vector<Rat>& e)
{
    std::vector<Rat> rational = rational_roots(e);
    std::vector<Rat> rest = e;
    for (const auto& c : rational)
        while (rest.size() > 1 && evaluate(rest, c).is_zero())
            rest = deflate(rest, c);

    std::vector<EdgeRoot> roots;
    if (rest.size() > 1) {
        SturmChain chain(as_poly(rest));
        Rat bound = cauchy_bound(rest);
        std::vector<EdgeRoot> irrational;
        bisect(chain, rest, -bound, Rat(0), irrational, rational);
        bisect(chain, rest, Rat(0), bound, irrational, rational);
        // Keep every irrational interval, endpoints included, clear of the rational
        // roots; otherwise a cell boundary can land on a rational root.
        for (auto& r : irrational) {
            auto touches = [&] {
                return std::any_of(rational.begin(), rational.end(),
                                   [&](const Rat& c) { return r.lo <= c && c <= r.hi; });
            };
            while (touches()) {
                Rat mid = (r.lo + r.hi) / Rat(2);
                if (chain.count({Series::constant(r.lo), Series::constant(mid)}) == 1)
                    r.hi = mid;
                else
                    r.lo = mid;
            }
            roots.push_back(r);
        }
    }
    for (const auto& c : rational)
        roots.push_back({c, c, true});
    std::sort(roots.begin(), roots.end(), [](const EdgeRoot& a, const EdgeRoot& b) { return a.lo < b.lo; });
    return roots;
}

// Open cells around each edge root, of one sign and pairwise disjoint.
std::vector<std::pair<Rat, Rat>> edge_cells(const std::vector<EdgeRoot>& roots, const Rat& bound)
{
    std::vector<std::pair<Rat, Rat>> cells;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const EdgeRoot& r = roots[k];
        bool negative = r.hi.sign() <= 0 && r.lo.sign() < 0;
        Rat left = negative ? -bound : r.lo / Rat(2);
        Rat right = negative ? r.hi / Rat(2) : bound;
        if (k > 0 && (roots[k - 1].hi.sign() < 0) == negative)
            left = (roots[k - 1].hi + r.lo) / Rat(2);
        if (k + 1 < roots.size() && (roots[k + 1].lo.sign() < 0) == negative)
            right = (r.hi + roots[k + 1].lo) / Rat(2);
        cells.push_back({left, right});
    }
    return cells;
}

// ---- Newton polygon descent ----

struct Edge {
    std::size_t from;
    std::size_t to;
    Rat slope;
};

std::vector<Edge> newton_edges(const SeriesPoly& q, std::vector<Rat>& values)
{
    std::vector<std::size_t> support;
    values.assign(q.coeffs().size(), Rat(0));
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
        const Series& c = q.coeffs()[k];
        if (c.is_exact_zero())
            continue;
        values[k] = leading_term(c).exp.base;
        support.push_back(k);
    }
    std::vector<std::size_t> hull;
    for (std::size_t k : support) {
        while (hull.size() >= 2) {
            std::size_t o = hull[hull.size() - 2], a = hull.back();
            Rat cross = Rat(static_cast<long>(a - o)) * (values[k] - values[o]) -
                        (values[a] - values[o]) * Rat(static_cast<long>(k - o));
            if (cross.sign() > 0)
                break;
            hull.pop_back();
        }
        hull.push_back(k);
    }
    std::vector<Edge> edges;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        std::size_t i = hull[h], j = hull[h + 1];
        edges.push_back({i, j, (values[i] - values[j]) / Rat(static_cast<long>(j - i))});
    }
    return edges;
}

class Isolator {
public:
    explicit Isolator(const SeriesPoly& p) : chain_(p) {}

    std::vector<RealRoot> run(const SeriesPoly& p)
    {
        std::vector<RealRoot> out;
        descend(p, Series::constant(Rat(0)), std::nullopt, 0, out);
        if (out.size() != chain_.count(Interval::whole()))
            fail(ErrorCode::IsolationFailed, "isolated " + std::to_string(out.size()) + " of " +
                                                 std::to_string(chain_.count(Interval::whole())) + " real roots");
        std::sort(out.begin(), out.end(),
                  [](const RealRoot& a, const RealRoot& b) { return compare(*a.interval.lo, *b.interval.lo) < 0; });
        return out;
    }

    const SturmChain& chain() const { return chain_; }

private:
    // Roots of p of the form s + y with v(y) > above, where q(y) = p(s + y).
    void descend(const SeriesPoly& q, const Series& s, const std::optional<Rat>& above, int depth,
                 std::vector<RealRoot>& out)
    {
        if (depth > kClusterDepth)
            fail(ErrorCode::IsolationFailed, "roots near " + to_string(s) + " do not separate");
        std::size_t zeros = 0;
        while (zeros < q.coeffs().size() && q.coeffs()[zeros].is_exact_zero())
            ++zeros;

        std::vector<Rat> values;
        std::optional<Rat> deepest;
        for (const auto& edge : newton_edges(q, values)) {
            if (above && edge.slope <= *above)
                continue;
            deepest = deepest ? std::max(*deepest, edge.slope) : edge.slope;
            descend_edge(q, s, edge, values, depth, out);
        }
        if (zeros > 0) {
            Rat m = deepest ? *deepest + Rat(1) : (above ? *above + Rat(1) : Rat(0));
            Series delta = monomial(Rat(1), m);
            out.push_back({{s - delta, s + delta}, s});
        }
    }

    void descend_edge(const SeriesPoly& q, const Series& s, const Edge& edge, const std::vector<Rat>& values,
                      int depth, std::vector<RealRoot>& out)
    {
        std::vector<Rat> e(edge.to - edge.from + 1, Rat(0));
        Rat level = values[edge.from] + edge.slope * Rat(static_cast<long>(edge.from));
        for (std::size_t k = edge.from; k <= edge.to; ++k) {
            const Series& c = q.coeffs()[k];
            if (!c.is_exact_zero() && values[k] + edge.slope * Rat(static_cast<long>(k)) == level)
                e[k - edge.from] = leading_term(c).coeff;
        }
        std::vector<EdgeRoot> roots = edge_roots(e);
        auto cells = edge_cells(roots, cauchy_bound(e) + Rat(1));
        for (std::size_t k = 0; k < roots.size(); ++k) {
            Interval cell{s + monomial(cells[k].first, edge.slope), s + monomial(cells[k].second, edge.slope)};
            unsigned n = chain_.count(cell);
            if (n == 0)
                continue;
            if (roots[k].rational && (n > 1 || depth < kExactDepth)) {
                Series step = monomial(roots[k].lo, edge.slope);
                std::size_t before = out.size();
                descend(shifted(q, step), s + step, edge.slope, depth + 1, out);
                if (n == 1 && out.size() == before)
                    out.push_back({cell, std::nullopt});
            } else if (n == 1) {
                out.push_back({cell, std::nullopt});
            } else {
                fail(ErrorCode::IsolationFailed,
                     "several roots share an irrational leading coefficient near " + to_string(s));
            }
        }
    }

    SturmChain chain_;
};

} // namespace

bool Interval::contains(const Series& x) const
{
    return (!lo || compare(*lo, x) < 0) && (!hi || compare(x, *hi) < 0);
}

std::string to_string(const Interval& i)
{
    return "(" + (i.lo ? to_string(*i.lo) : std::string("-inf")) + ", " + (i.hi ? to_string(*i.hi) : std::string("+inf")) +
           ")";
}

SturmChain::SturmChain(const SeriesPoly& p)
{
    if (p.is_zero())
        fail(ErrorCode::InvalidArgument, "the zero polynomial has no Sturm chain");
    polys_.push_back(normalized(p));
    if (p.degree() == 0)
        return;

    // Subresultant sequence r_i with prem(r_{i-1}, r_i) = beta_i * r_{i+1}; the Sturm
    // chain is sigma_i * r_i with sigma_{i+1} = -sigma_{i-1} * sign(beta_i) * sign(lc r_i)^(d_i + 1).
    SeriesPoly prev = p;
    SeriesPoly cur = p.derivative();
    int sigma_prev = 1;
    int sigma_cur = 1;
    polys_.push_back(normalized(cur));
    Series one = Series::constant(Rat(1), p.mode());
    Series gamma = -one;
    int d_prev = 0;
    bool first = true;
    while (cur.degree() > 0) {
        SeriesPoly r = pseudo_remainder(prev, cur);
        if (r.is_zero())
            break;
        int d = prev.degree() - cur.degree();
        Series lc_prev = prev.leading();
        Series beta = one;
        if (first) {
            beta = (d % 2 == 0) ? -one : one;
            first = false;
        } else {
            gamma = exact_quotient(power(-lc_prev, d_prev), power(gamma, d_prev - 1));
            beta = -lc_prev * power(gamma, d);
        }
        SeriesPoly next = divided(r, beta);
        int lc_sign = sign(cur.leading());
        int sigma_next = -sigma_prev * sign(beta) * ((d + 1) % 2 == 0 ? 1 : lc_sign);
        polys_.push_back(normalized(sigma_next > 0 ? next : -next));
        prev = std::move(cur);
        cur = std::move(next);
        sigma_prev = sigma_cur;
        sigma_cur = sigma_next;
        d_prev = d;
    }
}

int SturmChain::variations_at(const std::optional<Series>& at, int side) const
{
    int changes = 0;
    int last = 0;
    for (const auto& p : polys_) {
        int s = at ? sign_beside(p, *at, side) : sign_at_infinity(p, side);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

unsigned SturmChain::count(const Interval& i) const
{
    if (i.lo && i.hi && compare(*i.lo, *i.hi) >= 0)
        fail(ErrorCode::InvalidArgument, "empty interval " + to_string(i));
    int n = variations_at(i.lo, i.lo ? 1 : -1) - variations_at(i.hi, i.hi ? -1 : 1);
    return static_cast<unsigned>(std::max(n, 0));
}

unsigned sturm_count(const SeriesPoly& p, const Interval& i)
{
    if (p.degree() <= 0) {
        if (p.is_zero())
            fail(ErrorCode::InvalidArgument, "the zero polynomial vanishes everywhere");
        return 0;
    }
    return SturmChain(p).count(i);
}

std::vector<RealRoot> real_roots(const SeriesPoly& p, const Interval& i)
{
    if (p.is_zero())
        fail(ErrorCode::InvalidArgument, "the zero polynomial vanishes everywhere");
    if (p.degree() == 0)
        return {};
    Isolator isolator(p);
    if (isolator.chain().count(i) == 0)
        return {};
    std::vector<RealRoot> out;
    for (auto& root : isolator.run(p)) {
        if (root.exact) {
            if (i.contains(*root.exact))
                out.push_back(std::move(root));
            continue;
        }
        Interval clipped = root.interval;
        if (i.lo && compare(*i.lo, *clipped.lo) > 0)
            clipped.lo = i.lo;
        if (i.hi && compare(*i.hi, *clipped.hi) < 0)
            clipped.hi = i.hi;
        if (compare(*clipped.lo, *clipped.hi) < 0 && isolator.chain().count(clipped) == 1)
            out.push_back({clipped, std::nullopt});
    }
    return out;
}

std::vector<Interval> isolate_roots(const SeriesPoly& p, const Interval& i)
{
    std::vector<Interval> out;
    for (auto& r : real_roots(p, i))
        out.push_back(std::move(r.interval));
    return out;
}

std::vector<Series> exact_roots(const SeriesPoly& p)
{
    std::vector<Series> out;
    for (auto& r : real_roots(p))
        if (r.exact)
            out.push_back(std::move(*r.exact));
    return out;
}

const char* to_string(Direction d) noexcept
{
    return d == Direction::Increasing ? "increasing" : "decreasing";
}

MonotonicDecomposition monotonic_decomposition(const RationalFn& f)
{
    const SeriesPoly& n = f.numerator();
    const SeriesPoly& d = f.denominator();
    SeriesPoly w = n.derivative() * d - n * d.derivative();
    if (w.is_zero())
        fail(ErrorCode::ConstantFunction, "constant function has no monotone pieces");

    std::vector<RealRoot> candidates = real_roots(d * w);
    std::optional<SturmChain> poles;
    if (d.degree() > 0)
        poles.emplace(d);

    MonotonicDecomposition out;
    for (const auto& c : candidates) {
        bool pole = poles && (c.exact ? d.evaluate(*c.exact).is_exact_zero() : poles->count(c.interval) > 0);
        bool turn = sign(w.evaluate(*c.interval.lo)) != sign(w.evaluate(*c.interval.hi));
        if (pole || turn)
            out.breakpoints.push_back({c, pole});
    }

    auto direction_at = [&](const Series& x) {
        return sign(w.evaluate(x)) > 0 ? Direction::Increasing : Direction::Decreasing;
    };
    Series first = candidates.empty() ? Series::constant(Rat(0)) : *candidates.front().interval.lo;
    out.segments.push_back({direction_at(first), first});
    for (const auto& b : out.breakpoints) {
        const Series& x = *b.location.interval.hi;
        out.segments.push_back({direction_at(x), x});
    }
    return out;
}

} // namespace ballcut
