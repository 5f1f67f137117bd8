#include "ballcut/expr.hpp"

#include <cctype>

#include "ballcut/errors.hpp"

namespace ballcut::expr {

namespace {

[[noreturn]] void syntax(const std::string& what, std::size_t pos)
{
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos), pos);
}

enum class Tok { Number, Ident, Symbol, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (i < s.size() && s[i] == '.') {
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
            }
            out.push_back({Tok::Number, s.substr(start, i - start), start});
        } else if (std::isalpha(c) || c == '_') {
            std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else if (std::string_view("+-*/^(),").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::Symbol, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            syntax(std::string("unexpected character '") + static_cast<char>(c) + "'", i);
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

const std::set<std::string>& reserved()
{
    static const std::set<std::string> words{"eps", "t", "sqrt", "cbrt", "root", "O"};
    return words;
}

class Parser {
public:
    Parser(const std::string& text, const ParseOptions& options) : tokens_(lex(text)), options_(options) {}

    Ast run()
    {
        Ast a = sum();
        if (peek().kind != Tok::End)
            syntax("unexpected '" + peek().text + "'", peek().pos);
        return a;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& next() { return tokens_[at_++]; }

    bool accept(const char* symbol)
    {
        if (peek().kind == Tok::Symbol && peek().text == symbol) {
            ++at_;
            return true;
        }
        return false;
    }

    void expect(const char* symbol)
    {
        if (!accept(symbol))
            syntax(std::string("expected '") + symbol + "'", peek().pos);
    }

    Ast sum()
    {
        Ast a = product();
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept("+"))
                a = with_pos(make_binary(Kind::Add, a, product()), pos);
            else if (accept("-"))
                a = with_pos(make_binary(Kind::Sub, a, product()), pos);
            else
                return a;
        }
    }

    Ast product()
    {
        Ast a = power();
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept("*"))
                a = with_pos(make_binary(Kind::Mul, a, power()), pos);
            else if (accept("/"))
                a = with_pos(make_binary(Kind::Div, a, power()), pos);
            else
                return a;
        }
    }

    Ast power()
    {
        Ast base = unary();
        std::size_t pos = peek().pos;
        if (accept("^"))
            return with_pos(make_pow(base, exponent()), pos);
        return base;
    }

    Ast unary()
    {
        std::size_t pos = peek().pos;
        if (accept("-"))
            return with_pos(make_neg(unary()), pos);
        return atom();
    }

    long integer()
    {
        const Token& t = next();
        if (t.kind != Tok::Number || t.text.find('.') != std::string::npos)
            syntax("expected an integer", t.pos);
        if (t.text.size() > 15)
            syntax("integer too large", t.pos);
        return std::stol(t.text);
    }

    Rat exponent()
    {
        if (!accept("(")) {
            if (peek().kind != Tok::Number)
                syntax("exponent must be a rational literal", peek().pos);
            return Rat(integer());
        }
        bool negative = accept("-");
        long num = integer();
        long den = 1;
        if (accept("/")) {
            std::size_t pos = peek().pos;
            den = integer();
            if (den == 0)
                throw Error(ErrorCode::DivisionByZero, "zero denominator in exponent", pos);
        }
        expect(")");
        return Rat(negative ? -num : num, den);
    }

    Ast atom()
    {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Number: return with_pos(make_const(Rat::parse(t.text)), t.pos);
        case Tok::Ident: return identifier(t);
        case Tok::Symbol:
            if (t.text == "(") {
                Ast inner = sum();
                expect(")");
                return inner;
            }
            syntax("unexpected '" + t.text + "'", t.pos);
        case Tok::End: syntax("unexpected end of input", t.pos);
        }
        syntax("unexpected token", t.pos);
    }

    Ast identifier(const Token& t)
    {
        const std::string& w = t.text;
        if (w == "eps")
            return with_pos(make_leaf(Kind::Eps), t.pos);
        if (w == "t") {
            if (!options_.allow_aux)
                throw Error(ErrorCode::UnknownIdentifier, "'t' needs a declared group mode (use --mode)", t.pos);
            return with_pos(make_leaf(Kind::Aux), t.pos);
        }
        if (w == "sqrt" || w == "cbrt") {
            expect("(");
            Ast arg = sum();
            expect(")");
            return with_pos(make_root(w == "sqrt" ? 2 : 3, arg), t.pos);
        }
        if (w == "root") {
            expect("(");
            std::size_t pos = peek().pos;
            long n = integer();
            if (n < 1)
                syntax("root index must be positive", pos);
            expect(",");
            Ast arg = sum();
            expect(")");
            return with_pos(make_root(static_cast<unsigned long>(n), arg), t.pos);
        }
        if (w == "O") {
            expect("(");
            Ast arg = sum();
            expect(")");
            return with_pos(make_big_o(arg), t.pos);
        }
        if (!options_.variables.contains(w))
            throw Error(ErrorCode::UnknownIdentifier, "unknown identifier '" + w + "'", t.pos);
        return with_pos(make_var(w), t.pos);
    }

    static Ast with_pos(Ast a, std::size_t pos)
    {
        auto n = std::make_shared<Node>(*a);
        n->position = pos;
        return n;
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
    const ParseOptions& options_;
};

// Precedence levels for printing.
constexpr int kSum = 1, kProduct = 2, kPower = 3, kUnary = 4, kAtom = 5;

int level(const Ast& a)
{
    switch (a->kind) {
    case Kind::Add:
    case Kind::Sub: return kSum;
    case Kind::Mul:
    case Kind::Div: return kProduct;
    case Kind::Pow: return kPower;
    case Kind::Neg: return kUnary;
    case Kind::Const: return a->value.sign() < 0 || !a->value.is_integer() ? kUnary : kAtom;
    default: return kAtom;
    }
}

std::string decimal(const Rat& v)
{
    if (v.is_integer())
        return v.str();
    // Terminating decimals print exactly; others fall back to a parenthesized quotient.
    mpz_class den = v.den();
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1)
        return "(" + v.str() + ")";
    unsigned digits = std::max(twos, fives);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class scaled = abs(v.num()) * scale / v.den();
    std::string body = scaled.get_str();
    if (body.size() <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (v.sign() < 0 ? "-" : "") + body;
}

std::string wrap(const Ast& a, int min_level)
{
    std::string s = print(a);
    return level(a) < min_level ? "(" + s + ")" : s;
}

std::string exponent_text(const Rat& e)
{
    if (e.is_integer() && e.sign() >= 0)
        return e.str();
    return "(" + e.str() + ")";
}

// ---- evaluation ----

template <class Alg>
typename Alg::Value evaluate(const Ast& a, Alg& alg)
{
    auto kid = [&](std::size_t i) { return evaluate(a->kids[i], alg); };
    switch (a->kind) {
    case Kind::Const: return alg.constant(a->value);
    case Kind::Eps: return alg.series(Series::monomial(Rat(1), Exponent(Rat(1)), alg.mode()));
    case Kind::Aux: return alg.series(Series::monomial(Rat(1), Exponent(Rat(0), Rat(1)), alg.mode()));
    case Kind::Var: return alg.var(a->name, a->position);
    case Kind::Add: return alg.add(kid(0), kid(1));
    case Kind::Sub: return alg.sub(kid(0), kid(1));
    case Kind::Mul: return alg.mul(kid(0), kid(1));
    case Kind::Div: return alg.div(kid(0), kid(1));
    case Kind::Pow: return alg.pow(kid(0), a->value);
    case Kind::Root: return alg.root(kid(0), a->index);
    case Kind::Neg: return alg.neg(kid(0));
    case Kind::BigO: return alg.big_o(kid(0));
    }
    fail(ErrorCode::InvalidArgument, "unknown expression node");
}

Series series_power(const Series& v, const Rat& e, const Exponent& precision)
{
    if (!e.num().fits_slong_p() || !e.den().fits_ulong_p())
        fail(ErrorCode::InvalidArgument, "exponent too large");
    long m = e.num().get_si();
    unsigned long n = e.den().get_ui();
    Series base = n == 1 ? v : nth_root(v, n, precision);
    return pow(base, m, precision);
}

Series big_o_of(const Series& v)
{
    if (!v.is_exact() || v.terms().size() != 1)
        fail(ErrorCode::InvalidArgument, "O(...) takes a monomial, got " + to_string(v));
    return Series::big_o(v.terms().front().exp, v.mode());
}

struct SeriesAlgebra {
    using Value = Series;
    const SeriesContext& ctx;

    GroupMode mode() const { return ctx.mode; }
    Value constant(const Rat& r) const { return Series::constant(r, ctx.mode); }
    Value series(const Series& s) const { return s; }
    Value var(const std::string& name, std::size_t pos) const
    {
        auto it = ctx.env.find(name);
        if (it == ctx.env.end())
            throw Error(ErrorCode::UnknownIdentifier, "unbound variable '" + name + "'", pos);
        return aligned(it->second, ctx.mode);
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b) const { return ballcut::div(a, b, ctx.precision); }
    Value pow(const Value& a, const Rat& e) const { return series_power(a, e, ctx.precision); }
    Value root(const Value& a, unsigned long n) const { return nth_root(a, n, ctx.precision); }
    Value neg(const Value& a) const { return -a; }
    Value big_o(const Value& a) const { return big_o_of(a); }
};

// Function-field algebras: F is RationalFn or BiRational; constants stay Series
// so roots and rational powers of constant subexpressions still work.
template <class F>
struct FunctionAlgebra {
    struct Value {
        std::optional<Series> c;
        F f;
    };

    const SeriesContext& ctx;
    std::map<std::string, F> generators;

    GroupMode mode() const { return ctx.mode; }
    F lift(const Series& s) const;
    F as_function(const Value& v) const { return v.c ? lift(*v.c) : v.f; }

    Value constant(const Rat& r) const { return series(Series::constant(r, ctx.mode)); }
    Value series(const Series& s) const { return {s, F()}; }
    Value var(const std::string& name, std::size_t pos) const
    {
        if (auto g = generators.find(name); g != generators.end())
            return {std::nullopt, g->second};
        auto it = ctx.env.find(name);
        if (it == ctx.env.end())
            throw Error(ErrorCode::UnknownIdentifier, "unbound variable '" + name + "'", pos);
        return series(aligned(it->second, ctx.mode));
    }
    Value add(const Value& a, const Value& b) const
    {
        if (a.c && b.c)
            return series(*a.c + *b.c);
        return {std::nullopt, as_function(a) + as_function(b)};
    }
    Value sub(const Value& a, const Value& b) const
    {
        if (a.c && b.c)
            return series(*a.c - *b.c);
        return {std::nullopt, as_function(a) - as_function(b)};
    }
    Value mul(const Value& a, const Value& b) const
    {
        if (a.c && b.c)
            return series(*a.c * *b.c);
        return {std::nullopt, as_function(a) * as_function(b)};
    }
    Value div(const Value& a, const Value& b) const
    {
        if (a.c && b.c)
            return series(ballcut::div(*a.c, *b.c, ctx.precision));
        return {std::nullopt, as_function(a) / as_function(b)};
    }
    Value pow(const Value& a, const Rat& e) const
    {
        if (a.c)
            return series(series_power(*a.c, e, ctx.precision));
        if (!e.is_integer() || !e.num().fits_slong_p())
            fail(ErrorCode::InvalidArgument, "functions take integer powers only");
        long n = e.num().get_si();
        F base = as_function(a);
        F out = lift(Series::constant(Rat(1), ctx.mode));
        for (long i = 0; i < (n < 0 ? -n : n); ++i)
            out = out * base;
        if (n < 0)
            out = lift(Series::constant(Rat(1), ctx.mode)) / out;
        return {std::nullopt, out};
    }
    Value root(const Value& a, unsigned long n) const
    {
        if (!a.c)
            fail(ErrorCode::InvalidArgument, "roots of functions are not rational functions");
        return series(nth_root(*a.c, n, ctx.precision));
    }
    Value neg(const Value& a) const
    {
        if (a.c)
            return series(-*a.c);
        return {std::nullopt, -a.f};
    }
    Value big_o(const Value& a) const
    {
        if (!a.c)
            fail(ErrorCode::InvalidArgument, "O(...) takes a monomial");
        return series(big_o_of(*a.c));
    }
};

template <>
RationalFn FunctionAlgebra<RationalFn>::lift(const Series& s) const
{
    return RationalFn::constant(s);
}

template <>
BiRational FunctionAlgebra<BiRational>::lift(const Series& s) const
{
    return BiRational(BiPoly::constant(s));
}

} // namespace

Ast make_const(Rat v)
{
    return std::make_shared<Node>(Node{Kind::Const, std::move(v), {}, 0, {}, 0});
}

Ast make_leaf(Kind k)
{
    return std::make_shared<Node>(Node{k, Rat(0), {}, 0, {}, 0});
}

Ast make_var(std::string name)
{
    return std::make_shared<Node>(Node{Kind::Var, Rat(0), std::move(name), 0, {}, 0});
}

Ast make_binary(Kind k, Ast a, Ast b)
{
    return std::make_shared<Node>(Node{k, Rat(0), {}, 0, {std::move(a), std::move(b)}, 0});
}

Ast make_pow(Ast base, Rat exponent)
{
    return std::make_shared<Node>(Node{Kind::Pow, std::move(exponent), {}, 0, {std::move(base)}, 0});
}

Ast make_root(unsigned long n, Ast arg)
{
    return std::make_shared<Node>(Node{Kind::Root, Rat(0), {}, n, {std::move(arg)}, 0});
}

Ast make_neg(Ast a)
{
    return std::make_shared<Node>(Node{Kind::Neg, Rat(0), {}, 0, {std::move(a)}, 0});
}

Ast make_big_o(Ast a)
{
    return std::make_shared<Node>(Node{Kind::BigO, Rat(0), {}, 0, {std::move(a)}, 0});
}

bool equal(const Ast& a, const Ast& b)
{
    if (a->kind != b->kind || !(a->value == b->value) || a->name != b->name || a->index != b->index ||
        a->kids.size() != b->kids.size())
        return false;
    for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!equal(a->kids[i], b->kids[i]))
            return false;
    return true;
}

Ast parse(const std::string& text, const ParseOptions& options)
{
    for (const auto& v : options.variables)
        if (reserved().contains(v))
            fail(ErrorCode::InvalidArgument, "'" + v + "' is reserved");
    return Parser(text, options).run();
}

std::string print(const Ast& a)
{
    switch (a->kind) {
    case Kind::Const: return decimal(a->value);
    case Kind::Eps: return "eps";
    case Kind::Aux: return "t";
    case Kind::Var: return a->name;
    case Kind::Add: return wrap(a->kids[0], kSum) + " + " + wrap(a->kids[1], kProduct);
    case Kind::Sub: return wrap(a->kids[0], kSum) + " - " + wrap(a->kids[1], kProduct);
    case Kind::Mul: return wrap(a->kids[0], kProduct) + "*" + wrap(a->kids[1], kPower);
    case Kind::Div: return wrap(a->kids[0], kProduct) + "/" + wrap(a->kids[1], kPower);
    case Kind::Pow: return wrap(a->kids[0], kUnary) + "^" + exponent_text(a->value);
    case Kind::Neg: return "-" + wrap(a->kids[0], kUnary);
    case Kind::BigO: return "O(" + print(a->kids[0]) + ")";
    case Kind::Root:
        if (a->index == 2)
            return "sqrt(" + print(a->kids[0]) + ")";
        if (a->index == 3)
            return "cbrt(" + print(a->kids[0]) + ")";
        return "root(" + std::to_string(a->index) + ", " + print(a->kids[0]) + ")";
    }
    return "?";
}

std::set<std::string> variables(const Ast& a)
{
    std::set<std::string> out;
    if (a->kind == Kind::Var)
        out.insert(a->name);
    for (const auto& k : a->kids)
        out.merge(variables(k));
    return out;
}

Series eval(const Ast& a, const SeriesContext& ctx)
{
    SeriesAlgebra alg{ctx};
    return evaluate(a, alg);
}

RationalFn eval_rational(const Ast& a, const SeriesContext& ctx)
{
    FunctionAlgebra<RationalFn> alg{ctx, {{"x", RationalFn(SeriesPoly::x(ctx.mode))}}};
    auto v = evaluate(a, alg);
    return alg.as_function(v);
}

BiRational eval_birational(const Ast& a, const SeriesContext& ctx)
{
    FunctionAlgebra<BiRational> alg{ctx, {{"x", BiRational(BiPoly::x(ctx.mode))}, {"y", BiRational(BiPoly::y(ctx.mode))}}};
    auto v = evaluate(a, alg);
    return alg.as_function(v);
}

SeriesPoly eval_poly(const Ast& a, const SeriesContext& ctx)
{
    RationalFn f = eval_rational(a, ctx);
    const SeriesPoly& d = f.denominator();
    if (d.degree() != 0)
        fail(ErrorCode::InvalidArgument, "expected a polynomial in x");
    return ballcut::div(Series::constant(Rat(1), ctx.mode), d.leading(), ctx.precision) * f.numerator();
}

BiPoly eval_bipoly(const Ast& a, const SeriesContext& ctx)
{
    BiRational f = eval_birational(a, ctx);
    const auto& dt = f.denominator().terms();
    if (dt.size() != 1 || dt.begin()->first != BiPoly::Key{0, 0})
        fail(ErrorCode::InvalidArgument, "expected a polynomial in x and y");
    Series inv = ballcut::div(Series::constant(Rat(1), ctx.mode), dt.begin()->second, ctx.precision);
    return BiPoly::constant(inv) * f.numerator();
}

} // namespace ballcut::expr
