#include "ballcut/series.hpp"

#include <algorithm>

#include "ballcut/errors.hpp"

namespace ballcut {

namespace {

void require_same_mode(const Series& a, const Series& b)
{
    if (a.mode() != b.mode())
        fail(ErrorCode::IncompatibleModes, "series with different group modes");
}

std::optional<Exponent> min_error(const std::optional<Exponent>& a, const std::optional<Exponent>& b, GroupMode mode)
{
    if (!a)
        return b;
    if (!b)
        return a;
    return min(*a, *b, mode);
}

[[noreturn]] void indeterminate(const char* what)
{
    fail(ErrorCode::IndeterminateAtPrecision, std::string(what) + ": no term is known below the error order");
}

// Binomial coefficient binom(alpha, k) for rational alpha.
Rat binomial(const Rat& alpha, unsigned long k)
{
    Rat out(1);
    for (unsigned long i = 0; i < k; ++i) {
        out *= alpha - Rat(static_cast<long>(i));
        out /= Rat(static_cast<long>(i + 1));
    }
    return out;
}

// Sum_{k < n} c_k u^k with the tail bounded by the n-th power of u's valuation.
Series power_sum(const Series& u, unsigned long n, const std::vector<Rat>& coeffs)
{
    GroupMode mode = u.mode();
    Series sum = Series::constant(coeffs[0], mode);
    if (u.is_exact_zero())
        return sum;
    Series power = Series::constant(Rat(1), mode);
    for (unsigned long k = 1; k < n; ++k) {
        power *= u;
        if (!coeffs[k].is_zero())
            sum += coeffs[k] * power;
    }
    Exponent step = *u.valuation_bound();
    Exponent tail = Rat(static_cast<long>(n)) * step;
    return sum.truncated(tail);
}

} // namespace

Series Series::constant(const Rat& c, GroupMode mode)
{
    return monomial(c, Exponent(), mode);
}

Series Series::monomial(const Rat& c, const Exponent& e, GroupMode mode)
{
    Series s(mode);
    if (!c.is_zero())
        s.terms_.push_back({e, c});
    return s;
}

Series Series::big_o(const Exponent& e, GroupMode mode)
{
    Series s(mode);
    s.error_order_ = e;
    return s;
}

Series Series::from_terms(GroupMode mode, std::vector<Term> terms, std::optional<Exponent> error_order)
{
    Series s(mode);
    s.terms_ = std::move(terms);
    s.error_order_ = std::move(error_order);
    s.normalize();
    return s;
}

void Series::normalize()
{
    ExponentLess less{mode_};
    std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) { return less(a.exp, b.exp); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    if (error_order_) {
        auto cut = std::find_if(merged.begin(), merged.end(),
                                [&](const Term& t) { return compare(t.exp, *error_order_, mode_) >= 0; });
        merged.erase(cut, merged.end());
    }
    terms_ = std::move(merged);
}

bool Series::is_pure() const noexcept
{
    if (error_order_ && !error_order_->is_pure())
        return false;
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.exp.is_pure(); });
}

Series Series::known_part() const
{
    Series s(mode_);
    s.terms_ = terms_;
    return s;
}

Series Series::truncated(const Exponent& order) const
{
    Series s = *this;
    s.error_order_ = min_error(error_order_, order, mode_);
    s.normalize();
    return s;
}

Series Series::in_mode(GroupMode mode) const
{
    if (mode == mode_)
        return *this;
    if (!is_pure())
        fail(ErrorCode::IncompatibleModes, "only series without auxiliary components can change group mode");
    Series s = *this;
    s.mode_ = mode;
    return s;
}

Rat Series::coefficient(const Exponent& e) const
{
    for (const auto& t : terms_)
        if (t.exp == e)
            return t.coeff;
    return Rat(0);
}

Valuation Series::valuation_bound() const
{
    if (!terms_.empty())
        return terms_.front().exp;
    return error_order_;
}

Series Series::operator-() const
{
    Series s = *this;
    for (auto& t : s.terms_)
        t.coeff = -t.coeff;
    return s;
}

Series& Series::operator+=(const Series& o)
{
    require_same_mode(*this, o);
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    error_order_ = min_error(error_order_, o.error_order_, mode_);
    normalize();
    return *this;
}

Series& Series::operator-=(const Series& o)
{
    return *this += -o;
}

Series& Series::operator*=(const Series& o)
{
    require_same_mode(*this, o);
    // Error bound: a.err + v(b), b.err + v(a), a.err + b.err; v of a term-less series is +inf.
    std::optional<Exponent> err;
    auto lead = [](const Series& s) -> std::optional<Exponent> {
        if (s.terms_.empty())
            return std::nullopt;
        return s.terms_.front().exp;
    };
    auto va = lead(*this);
    auto vb = lead(o);
    if (error_order_ && vb)
        err = min_error(err, *error_order_ + *vb, mode_);
    if (o.error_order_ && va)
        err = min_error(err, *o.error_order_ + *va, mode_);
    if (error_order_ && o.error_order_)
        err = min_error(err, *error_order_ + *o.error_order_, mode_);

    std::vector<Term> product;
    product.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exponent e = a.exp + b.exp;
            if (err && compare(e, *err, mode_) >= 0)
                continue;
            product.push_back({std::move(e), a.coeff * b.coeff});
        }
    }
    terms_ = std::move(product);
    error_order_ = std::move(err);
    normalize();
    return *this;
}

Series operator*(const Rat& k, const Series& s)
{
    if (k.is_zero())
        return Series(s.mode());
    Series out = s;
    for (auto& t : out.terms_)
        t.coeff *= k;
    return out;
}

Series operator/(const Series& a, const Series& b)
{
    return div(a, b);
}

Series div(const Series& a, const Series& b, const Exponent& precision)
{
    require_same_mode(a, b);
    GroupMode mode = a.mode();
    if (b.is_exact_zero())
        fail(ErrorCode::DivisionByZero, "division by an exact zero series");
    if (b.terms().empty())
        indeterminate("divisor");
    if (a.is_exact_zero())
        return Series(mode);

    const Term& lead = b.terms().front();
    Series inv_lead = Series::monomial(Rat(1) / lead.coeff, -lead.exp, mode);
    // b = lead * (1 + u) with v(u) > 0
    Series u = (b - Series::monomial(lead.coeff, lead.exp, mode)) * inv_lead;

    Exponent result_val = *a.valuation_bound() - lead.exp;
    Exponent relative_target = precision - result_val;
    unsigned long n = 1;
    if (!u.is_exact_zero())
        n = expansion_length(*u.valuation_bound(), relative_target, mode);

    std::vector<Rat> coeffs;
    coeffs.reserve(n);
    for (unsigned long k = 0; k < n; ++k)
        coeffs.push_back(k % 2 == 0 ? Rat(1) : Rat(-1));
    Series geometric = power_sum(u, n, coeffs);
    return a * (geometric * inv_lead);
}

Series nth_root(const Series& a, unsigned long n, const Exponent& precision)
{
    GroupMode mode = a.mode();
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "zeroth root");
    if (n == 1)
        return a;
    if (a.is_exact_zero())
        return a;
    if (a.terms().empty())
        indeterminate("root argument");

    const Term& lead = a.terms().front();
    auto root_coeff = lead.coeff.exact_root(n);
    if (!root_coeff) {
        if (lead.coeff.sign() < 0 && n % 2 == 0)
            fail(ErrorCode::NonRepresentableRoot, "even root of a negative series");
        fail(ErrorCode::NonRepresentableRoot,
             "leading coefficient " + lead.coeff.str() + " has no rational root of order " + std::to_string(n));
    }
    Rat inv_n(mpq_class(1, n));
    Exponent root_exp = inv_n * lead.exp;
    Series root_lead = Series::monomial(*root_coeff, root_exp, mode);

    Series inv_lead = Series::monomial(Rat(1) / lead.coeff, -lead.exp, mode);
    Series u = (a - Series::monomial(lead.coeff, lead.exp, mode)) * inv_lead;

    unsigned long terms = 1;
    if (!u.is_exact_zero())
        terms = expansion_length(*u.valuation_bound(), precision - root_exp, mode);
    std::vector<Rat> coeffs;
    coeffs.reserve(terms);
    for (unsigned long k = 0; k < terms; ++k)
        coeffs.push_back(binomial(inv_n, k));
    return root_lead * power_sum(u, terms, coeffs);
}

Series pow(const Series& a, long n, const Exponent& precision)
{
    if (n < 0)
        return div(Series::constant(Rat(1), a.mode()), pow(a, -n, precision), precision);
    Series result = Series::constant(Rat(1), a.mode());
    Series base = a;
    unsigned long e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base *= base;
    }
    return result;
}

Series abs(const Series& a)
{
    return sign(a) < 0 ? -a : a;
}

int sign(const Series& a)
{
    if (!a.terms().empty())
        return a.terms().front().coeff.sign();
    if (a.is_exact())
        return 0;
    indeterminate("sign");
}

Valuation valuation(const Series& a)
{
    if (!a.terms().empty())
        return a.terms().front().exp;
    if (a.is_exact())
        return std::nullopt;
    indeterminate("valuation");
}

StandardPart standard_part(const Series& a)
{
    GroupMode mode = a.mode();
    if (!a.terms().empty()) {
        const Term& lead = a.terms().front();
        int s = sign(lead.exp, mode);
        if (s < 0)
            return Infinity{};
        return s == 0 ? lead.coeff : Rat(0);
    }
    if (a.is_exact())
        return Rat(0);
    // Unknown remainder of positive valuation is infinitesimal.
    if (sign(*a.error_order(), mode) > 0)
        return Rat(0);
    indeterminate("standard part");
}

int compare(const Series& a, const Series& b)
{
    return sign(a - b);
}

std::string to_string(const StandardPart& s)
{
    if (std::holds_alternative<Infinity>(s))
        return "inf";
    return std::get<Rat>(s).str();
}

namespace {

std::string exponent_suffix(const Rat& r)
{
    if (r == Rat(1))
        return "";
    if (r.is_integer() && r.sign() > 0)
        return "^" + r.str();
    return "^(" + r.str() + ")";
}

std::string monomial_text(const Exponent& e)
{
    std::string out;
    if (!e.base.is_zero())
        out += "eps" + exponent_suffix(e.base);
    if (!e.aux.is_zero()) {
        if (!out.empty())
            out += "*";
        out += "t" + exponent_suffix(e.aux);
    }
    return out;
}

} // namespace

std::string to_string(const Series& s)
{
    std::string out;
    bool first = true;
    for (const auto& t : s.terms()) {
        std::string mono = monomial_text(t.exp);
        Rat mag = abs(t.coeff);
        bool negative = t.coeff.sign() < 0;
        std::string body;
        if (mono.empty())
            body = mag.str();
        else if (mag == Rat(1))
            body = (first && negative) ? "1*" + mono : mono;
        else
            body = mag.str() + "*" + mono;
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    if (s.error_order()) {
        std::string mono = monomial_text(*s.error_order());
        std::string big_o = "O(" + (mono.empty() ? std::string("1") : mono) + ")";
        out += first ? big_o : " + " + big_o;
        first = false;
    }
    return first ? "0" : out;
}

nlohmann::json to_json(const Series& s)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : s.terms())
        terms.push_back({t.exp.base.str(), t.exp.aux.str(), t.coeff.num().get_str(), t.coeff.den().get_str()});
    nlohmann::json err = nullptr;
    if (s.error_order())
        err = {s.error_order()->base.str(), s.error_order()->aux.str()};
    return {{"mode", to_string(s.mode())}, {"terms", terms}, {"error_order", err}};
}

namespace {

Rat rat_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (j.is_string())
        return Rat::parse(j.get<std::string>());
    fail(ErrorCode::InvalidArgument, "expected a rational in series JSON");
}

} // namespace

Series series_from_json(const nlohmann::json& j)
{
    try {
        GroupMode mode = parse_group_mode(j.at("mode").get<std::string>());
        std::vector<Term> terms;
        for (const auto& row : j.at("terms")) {
            if (!row.is_array() || row.size() != 4)
                fail(ErrorCode::InvalidArgument, "series term must be [base, aux, num, den]");
            Rat coeff = rat_from_json(row[2]) / rat_from_json(row[3]);
            terms.push_back({Exponent(rat_from_json(row[0]), rat_from_json(row[1])), coeff});
        }
        std::optional<Exponent> err;
        const auto& e = j.at("error_order");
        if (!e.is_null()) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrorCode::InvalidArgument, "error_order must be null or [base, aux]");
            err = Exponent(rat_from_json(e[0]), rat_from_json(e[1]));
        }
        return Series::from_terms(mode, std::move(terms), std::move(err));
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorCode::InvalidArgument, std::string("malformed series JSON: ") + ex.what());
    }
}

} // namespace ballcut
