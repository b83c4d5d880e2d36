#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "weylfact/pseudopoly.hpp"
#include "weylfact/rational.hpp"
#include "weylfact/unipoly.hpp"
#include "weylfact/weyl.hpp"

namespace weylfact {

/// Expression tree in t, D = d/dt and E = t d/dt. Products keep their order.
struct DerivationExpr {
    enum class Kind { Number, T, D, E, Add, Sub, Mul, Pow, Neg };

    Kind kind = Kind::Number;
    Rational value;          // Number
    unsigned exponent = 0;   // Pow
    std::vector<DerivationExpr> children;

    static DerivationExpr number(const Rational& v);
    static DerivationExpr symbol(Kind k);
    static DerivationExpr binary(Kind k, DerivationExpr a, DerivationExpr b);
    static DerivationExpr power(DerivationExpr base, unsigned e);
    static DerivationExpr negate(DerivationExpr a);

    friend bool operator==(const DerivationExpr&, const DerivationExpr&) = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::set<std::string> expected, const std::string& found);

    std::size_t offset() const { return offset_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::set<std::string> expected_;
};

/// expr   := ['-'] term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := base ('^' uint)?
/// base   := rational | 't' | 'D' | 'E' | '(' expr ')'
/// Whitespace is ignored between tokens.
DerivationExpr parse_operator(std::string_view text);

/// Same grammar over the single symbol 'l'; the result as a polynomial in l.
UniPoly parse_polynomial(std::string_view text);

/// Minimal-parenthesis printer; parse(print(e)) == e for parsed trees.
std::string print_expr(const DerivationExpr& e);

/// Exact Laurent expansion t^j E^i with j of either sign. No truncation.
CoeffMap laurent_expand(const DerivationExpr& e);

/// Laurent product with E^a t^k = t^k (E + k)^a, k of either sign.
CoeffMap laurent_product(const CoeffMap& left, const CoeffMap& right);

/// Left-multiplies by t^s so the smallest power of t becomes 0, then keeps
/// j <= truncation. s may be negative when all terms carry a factor t.
WeylOperator normalize_laurent(const CoeffMap& m, int truncation);

WeylOperator from_derivation_form(const DerivationExpr& e, int truncation);

/// Canonical operator text, e.g. "t^2*E^2 + t^2*E - 3*t*E + 2"; reparses to
/// the same coefficient table.
std::string print_operator(const CoeffMap& terms);
inline std::string print_operator(const WeylOperator& l) { return print_operator(l.terms()); }

}  // namespace weylfact
