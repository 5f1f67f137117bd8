#include "ballcut/polynomial.hpp"

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

Series power(const Series& base, unsigned n)
{
    Series out = Series::constant(Rat(1), base.mode());
    for (unsigned i = 0; i < n; ++i)
        out *= base;
    return out;
}

std::string monomial_text(const Series& c, const std::string& vars)
{
    if (vars.empty())
        return to_string(c);
    std::string coeff = to_string(c);
    if (coeff == "1")
        return vars;
    if (coeff == "-1")
        return "-" + vars;
    if (c.terms().size() + (c.is_exact() ? 0 : 1) > 1)
        coeff = "(" + coeff + ")";
    return coeff + "*" + vars;
}

std::string power_text(const std::string& var, unsigned n)
{
    if (n == 0)
        return "";
    return n == 1 ? var : var + "^" + std::to_string(n);
}

std::string join_sum(const std::vector<std::string>& parts)
{
    if (parts.empty())
        return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!parts[i].empty() && parts[i][0] == '-') {
            std::string rest = parts[i].substr(1);
            if (rest.starts_with("1*"))
                rest = rest.substr(2);
            out += " - " + rest;
        }
        else
            out += " + " + parts[i];
    }
    return out;
}

} // namespace

Series aligned(const Series& s, GroupMode mode)
{
    return s.mode() == mode ? s : s.in_mode(mode);
}

SeriesPoly::SeriesPoly(std::vector<Series> coeffs) : coeffs_(std::move(coeffs))
{
    for (const auto& c : coeffs_)
        if (c.mode() != coeffs_.front().mode())
            fail(ErrorCode::IncompatibleModes, "polynomial coefficients with different group modes");
    trim();
}

SeriesPoly SeriesPoly::x(GroupMode mode)
{
    return SeriesPoly({Series(mode), Series::constant(Rat(1), mode)});
}

SeriesPoly SeriesPoly::from_roots(const std::vector<Series>& roots, GroupMode mode)
{
    SeriesPoly p = constant(Series::constant(Rat(1), mode));
    for (const auto& r : roots)
        p = p * (x(mode) - constant(aligned(r, mode)));
    return p;
}

void SeriesPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_exact_zero())
        coeffs_.pop_back();
}

Series SeriesPoly::coeff(int i) const
{
    if (i < 0 || i > degree())
        return Series(mode());
    return coeffs_[static_cast<std::size_t>(i)];
}

const Series& SeriesPoly::leading() const
{
    if (coeffs_.empty())
        fail(ErrorCode::InvalidArgument, "zero polynomial has no leading coefficient");
    return coeffs_.back();
}

GroupMode SeriesPoly::mode() const
{
    return coeffs_.empty() ? GroupMode::AuxInfinitesimal : coeffs_.front().mode();
}

SeriesPoly SeriesPoly::derivative() const
{
    std::vector<Series> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(Rat(static_cast<long>(i)) * coeffs_[i]);
    return SeriesPoly(std::move(d));
}

Series SeriesPoly::evaluate(const Series& at) const
{
    Series acc(at.mode());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + aligned(*it, at.mode());
    return acc;
}

SeriesPoly SeriesPoly::operator-() const
{
    SeriesPoly out = *this;
    for (auto& c : out.coeffs_)
        c = -c;
    return out;
}

SeriesPoly& SeriesPoly::operator+=(const SeriesPoly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Series(o.mode()));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

SeriesPoly& SeriesPoly::operator-=(const SeriesPoly& o)
{
    return *this += -o;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return SeriesPoly();
    std::vector<Series> out(a.coeffs_.size() + b.coeffs_.size() - 1, Series(a.mode()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return SeriesPoly(std::move(out));
}

SeriesPoly operator*(const Series& k, const SeriesPoly& p)
{
    std::vector<Series> out;
    for (const auto& c : p.coeffs_)
        out.push_back(k * c);
    return SeriesPoly(std::move(out));
}

SeriesPoly pseudo_remainder(const SeriesPoly& a, const SeriesPoly& b)
{
    if (b.is_zero())
        fail(ErrorCode::DivisionByZero, "pseudo-remainder by the zero polynomial");
    SeriesPoly r = a;
    const Series& lb = b.leading();
    int db = b.degree();
    int steps = a.degree() - db + 1;
    if (steps <= 0)
        return r;
    for (int k = 0; k < steps; ++k) {
        if (r.degree() < db) {
            r = lb * r;
            continue;
        }
        int shift = r.degree() - db;
        std::vector<Series> mono(static_cast<std::size_t>(shift) + 1, Series(b.mode()));
        mono.back() = r.leading();
        SeriesPoly sub = SeriesPoly(std::move(mono)) * b;
        SeriesPoly next = lb * r - sub;
        // The leading term cancels by construction; drop it even when inexact.
        std::vector<Series> cs = next.coeffs();
        if (static_cast<int>(cs.size()) > r.degree())
            cs.resize(static_cast<std::size_t>(r.degree()));
        r = SeriesPoly(std::move(cs));
    }
    return r;
}

std::string to_string(const SeriesPoly& p, const std::string& var)
{
    std::vector<std::string> parts;
    for (int i = p.degree(); i >= 0; --i) {
        const Series& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_exact_zero())
            continue;
        parts.push_back(monomial_text(c, power_text(var, static_cast<unsigned>(i))));
    }
    return join_sum(parts);
}

RationalFn::RationalFn(SeriesPoly num, SeriesPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
}

RationalFn RationalFn::derivative() const
{
    return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Series RationalFn::evaluate(const Series& at, const Exponent& precision) const
{
    Series d = den_.evaluate(at);
    if (d.is_exact_zero())
        fail(ErrorCode::PoleAtRealization, "denominator vanishes at " + to_string(at));
    return div(num_.evaluate(at), d, precision);
}

RationalFn RationalFn::operator-() const
{
    return RationalFn(-num_, den_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b)
{
    if (a.den_ == b.den_)
        return RationalFn(a.num_ + b.num_, a.den_);
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b)
{
    return a + -b;
}

RationalFn operator*(const RationalFn& a, const RationalFn& b)
{
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b)
{
    if (b.is_zero())
        fail(ErrorCode::DivisionByZero, "division by the zero function");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFn& f)
{
    const SeriesPoly& d = f.denominator();
    if (d.degree() == 0 && d.leading() == Series::constant(Rat(1), d.mode()))
        return to_string(f.numerator());
    return "(" + to_string(f.numerator()) + ")/(" + to_string(d) + ")";
}

BiPoly BiPoly::constant(const Series& c)
{
    BiPoly p;
    p.add_term({0, 0}, c);
    return p;
}

BiPoly BiPoly::x(GroupMode mode)
{
    BiPoly p;
    p.add_term({1, 0}, Series::constant(Rat(1), mode));
    return p;
}

BiPoly BiPoly::y(GroupMode mode)
{
    BiPoly p;
    p.add_term({0, 1}, Series::constant(Rat(1), mode));
    return p;
}

void BiPoly::add_term(const Key& k, const Series& c)
{
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!c.is_exact_zero())
            terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_exact_zero())
        terms_.erase(it);
}

unsigned BiPoly::degree_y() const
{
    unsigned d = 0;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

Series BiPoly::evaluate(const Series& x, const Series& y) const
{
    if (x.mode() != y.mode())
        fail(ErrorCode::IncompatibleModes, "evaluation point with mixed group modes");
    Series acc(x.mode());
    for (const auto& [k, c] : terms_)
        acc += aligned(c, x.mode()) * power(x, k.first) * power(y, k.second);
    return acc;
}

BiPoly BiPoly::derivative_y() const
{
    BiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.second > 0)
            out.add_term({k.first, k.second - 1}, Rat(static_cast<long>(k.second)) * c);
    return out;
}

SeriesPoly BiPoly::in_y(const Series& at) const
{
    std::vector<Series> cs(degree_y() + 1, Series(at.mode()));
    for (const auto& [k, c] : terms_)
        cs[k.second] += aligned(c, at.mode()) * power(at, k.first);
    return SeriesPoly(std::move(cs));
}

BiPoly BiPoly::operator-() const
{
    BiPoly out = *this;
    for (auto& [k, c] : out.terms_)
        c = -c;
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    return *this += -o;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

std::string to_string(const BiPoly& p)
{
    std::vector<std::string> parts;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        std::string vars = power_text("x", k.first);
        std::string ys = power_text("y", k.second);
        if (!vars.empty() && !ys.empty())
            vars += "*";
        vars += ys;
        parts.push_back(monomial_text(c, vars));
    }
    return join_sum(parts);
}

BiRational::BiRational(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
}

Series BiRational::evaluate(const Series& x, const Series& y, const Exponent& precision) const
{
    Series d = den_.evaluate(x, y);
    if (d.is_exact_zero())
        fail(ErrorCode::PoleAtRealization, "denominator vanishes at (" + to_string(x) + ", " + to_string(y) + ")");
    return div(num_.evaluate(x, y), d, precision);
}

BiRational BiRational::operator-() const
{
    return BiRational(-num_, den_);
}

BiRational operator+(const BiRational& a, const BiRational& b)
{
    if (a.den_ == b.den_)
        return BiRational(a.num_ + b.num_, a.den_);
    return BiRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BiRational operator-(const BiRational& a, const BiRational& b)
{
    return a + -b;
}

BiRational operator*(const BiRational& a, const BiRational& b)
{
    return BiRational(a.num_ * b.num_, a.den_ * b.den_);
}

BiRational operator/(const BiRational& a, const BiRational& b)
{
    if (b.num_.is_zero())
        fail(ErrorCode::DivisionByZero, "division by the zero function");
    return BiRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const BiRational& f)
{
    if (f.denominator() == BiPoly::constant(Series::constant(Rat(1))))
        return to_string(f.numerator());
    return "(" + to_string(f.numerator()) + ")/(" + to_string(f.denominator()) + ")";
}

} // namespace ballcut
