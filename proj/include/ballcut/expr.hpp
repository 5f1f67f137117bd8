#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ballcut/polynomial.hpp"

namespace ballcut::expr {

enum class Kind { Const, Eps, Aux, Var, Add, Sub, Mul, Div, Pow, Root, Neg, BigO };

struct Node;
using Ast = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    /// Const value or Pow exponent.
    Rat value;
    /// Var name.
    std::string name;
    /// Root index.
    unsigned long index = 0;
    std::vector<Ast> kids;
    /// Byte offset of the node in the source text.
    std::size_t position = 0;
};

Ast make_const(Rat v);
Ast make_leaf(Kind k);
Ast make_var(std::string name);
Ast make_binary(Kind k, Ast a, Ast b);
Ast make_pow(Ast base, Rat exponent);
Ast make_root(unsigned long n, Ast arg);
Ast make_neg(Ast a);
Ast make_big_o(Ast a);

/// Structural equality, ignoring positions.
bool equal(const Ast& a, const Ast& b);

struct ParseOptions {
    /// Identifiers accepted as variables.
    std::set<std::string> variables;
    /// Whether the auxiliary literal `t` is allowed.
    bool allow_aux = false;
};

/// SyntaxError (with position) or UnknownIdentifier on bad input.
Ast parse(const std::string& text, const ParseOptions& options = {});

/// Minimal parentheses; parse(print(a)) reproduces a.
std::string print(const Ast& a);

/// Free variables of the expression, sorted.
std::set<std::string> variables(const Ast& a);

struct SeriesContext {
    GroupMode mode = GroupMode::AuxInfinitesimal;
    Exponent precision = default_precision();
    std::map<std::string, Series> env;
};

Series eval(const Ast& a, const SeriesContext& ctx = {});

/// Element of K(x); `x` is the only variable, further names come from `env`.
RationalFn eval_rational(const Ast& a, const SeriesContext& ctx = {});

/// Element of K(x, y).
BiRational eval_birational(const Ast& a, const SeriesContext& ctx = {});

/// Polynomial in x (division only by constants).
SeriesPoly eval_poly(const Ast& a, const SeriesContext& ctx = {});

/// Polynomial in x and y (division only by constants).
BiPoly eval_bipoly(const Ast& a, const SeriesContext& ctx = {});

} // namespace ballcut::expr
