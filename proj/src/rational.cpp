#include "ballcut/rational.hpp"

#include <cctype>

#include "ballcut/errors.hpp"

namespace ballcut {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::IncompatibleModes: return "IncompatibleModes";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IndeterminateAtPrecision: return "IndeterminateAtPrecision";
    case ErrorCode::NonRepresentableRoot: return "NonRepresentableRoot";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PureElement: return "PureElement";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::PoleAtRealization: return "PoleAtRealization";
    case ErrorCode::NewtonNoConvergence: return "NewtonNoConvergence";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::IsolationFailed: return "IsolationFailed";
    }
    return "Unknown";
}

Rat::Rat(long num, long den)
{
    if (den == 0)
        fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(mpq_class value) : q_(std::move(value))
{
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text)
{
    auto bad = [&] { fail(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'"); };
    if (text.empty())
        bad();
    std::string s(text);
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative || (!whole.empty() && whole[0] == '+'))
            whole.erase(0, 1);
        if (whole.empty() && frac.empty())
            bad();
        for (char c : whole + frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits((whole.empty() ? "0" : whole) + frac, 10);
        Rat r(mpq_class(digits, scale));
        return negative ? -r : r;
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_since = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] == '/' && !seen_slash && digit_since) {
            seen_slash = true;
            digit_since = false;
        } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digit_since = true;
        } else {
            bad();
        }
    }
    if (!digit_since)
        bad();
    if (s[0] == '+')
        s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        bad();
    if (q.get_den() == 0)
        fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o)
{
    if (o.is_zero())
        fail(ErrorCode::DivisionByZero, "rational division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

std::optional<mpz_class> integer_root(const mpz_class& value, unsigned long n)
{
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), value.get_mpz_t(), n) == 0)
        return std::nullopt;
    return root;
}

} // namespace

std::optional<Rat> Rat::exact_root(unsigned long n) const
{
    if (n == 0)
        fail(ErrorCode::InvalidArgument, "zeroth root");
    if (sign() < 0 && n % 2 == 0)
        return std::nullopt;
    mpz_class num_abs = abs(q_.get_num());
    auto rn = integer_root(num_abs, n);
    auto rd = integer_root(q_.get_den(), n);
    if (!rn || !rd)
        return std::nullopt;
    Rat r(mpq_class(*rn, *rd));
    return sign() < 0 ? -r : r;
}

mpz_class Rat::ceil() const
{
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return out;
}

Rat abs(const Rat& r)
{
    return r.sign() < 0 ? -r : r;
}

Rat pow(const Rat& r, unsigned long n)
{
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), r.get().get_num_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), r.get().get_den_mpz_t(), n);
    return Rat(mpq_class(num, den));
}

} // namespace ballcut
