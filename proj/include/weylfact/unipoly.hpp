#pragma once

#include <string>
#include <utility>
#include <vector>

#include "weylfact/rational.hpp"

namespace weylfact {

/// Dense univariate polynomial over the rationals; coefficient index = degree.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coefficients);
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int degree);
    /// The linear polynomial lambda - root.
    static UniPoly linear_root(const Rational& root);
    /// Product of (lambda - r) over the given roots.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of lambda^k, zero beyond the degree.
    Rational coeff(int k) const;
    Rational leading() const;

    Rational evaluate(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    /// p(lambda + s).
    UniPoly shifted(const Rational& s) const;

    UniPoly& operator+=(const UniPoly& other);
    UniPoly& operator-=(const UniPoly& other);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator-(const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

    /// Human-readable form such as "l^2 - 3*l + 2".
    std::string to_string(const std::string& var = "l") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Division with remainder; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Throws std::domain_error if both inputs are zero.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// Exact quotient a / b; throws std::domain_error if the remainder is nonzero.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

UniPoly pow(const UniPoly& base, unsigned exponent);

struct FactorMultiplicity {
    UniPoly factor;
    int multiplicity = 0;

    friend bool operator==(const FactorMultiplicity&, const FactorMultiplicity&) = default;
};

/// Pairwise coprime monic squarefree factors with multiplicities, with every
/// rational root split off as its own linear factor. The product of
/// factor^multiplicity times the leading coefficient of s recovers s.
///
/// Returned in block order: linear factors by ascending root, then the
/// remaining blocks by (degree, coefficients from the constant term up).
/// A constant input yields an empty list.
std::vector<FactorMultiplicity> squarefree_coprime_split(const UniPoly& s);

struct RootMultiplicity {
    Rational root;
    int multiplicity = 0;

    friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// All rational roots with multiplicities, ascending. Throws std::domain_error
/// for the zero polynomial.
std::vector<RootMultiplicity> rational_roots(const UniPoly& s);

/// Strict ordering used to arrange characteristic blocks deterministically.
bool block_order_less(const UniPoly& a, const UniPoly& b);

}  // namespace weylfact
