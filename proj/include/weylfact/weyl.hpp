#pragma once

#include <utility>
#include <vector>

#include "weylfact/newton.hpp"
#include "weylfact/pseudopoly.hpp"
#include "weylfact/unipoly.hpp"

namespace weylfact {

/// Truncated element of the formal Weyl algebra in canonical order,
/// sum of c t^j E^i with every power of t to the left of E (E = t d/dt).
///
/// t_shift records the power of t that was cleared on the left when the
/// operator came from d/dt form: the original operator is t^{-t_shift} times
/// this one. It is bookkeeping only and never enters the arithmetic on
/// coefficients.
class WeylOperator {
public:
    WeylOperator() = default;
    /// Zero entries are dropped, entries with j > truncation discarded.
    WeylOperator(CoeffMap terms, int truncation, int t_shift = 0);

    static WeylOperator from_pseudopolynomial(const PseudoPolynomial& p, int truncation);

    const CoeffMap& terms() const { return terms_; }
    int order() const { return max_i(terms_); }
    int truncation() const { return truncation_; }
    int t_shift() const { return t_shift_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const LatticePoint& pt) const;

    /// Some term has no t factor.
    bool is_canonical() const;
    /// Strips the common power t^k from the left (k = min j), adding -k to t_shift.
    WeylOperator normalized() const;
    WeylOperator with_t_shift(int s) const { return WeylOperator(terms_, truncation_, s); }

    friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

private:
    CoeffMap terms_;
    int truncation_ = 0;
    int t_shift_ = 0;
};

/// Normal-ordered product of coefficient tables through t^jmax, using
/// E^a t^k = t^k (E + k)^a.
CoeffMap weyl_product(const CoeffMap& left, const CoeffMap& right, int jmax);

/// Composition L o M in canonical form; truncation is the minimum, shifts add.
WeylOperator normal_order_mul(const WeylOperator& l, const WeylOperator& m);

/// The pseudopolynomial with the same coefficient table.
PseudoPolynomial pseudosymbol(const WeylOperator& l);
inline WeylOperator from_pseudopolynomial(const PseudoPolynomial& p, int truncation) {
    return WeylOperator::from_pseudopolynomial(p, truncation);
}

/// Throw std::invalid_argument for the zero operator.
AdmissiblePolygon operator_polygon(const WeylOperator& l);
std::vector<Slope> operator_spectrum(const WeylOperator& l);
bool is_fuchsian(const WeylOperator& l);

/// Leading quasihomogeneous part of the pseudosymbol.
QHPart operator_leading_part(const WeylOperator& l, const Slope& w);

/// One single-slope factor per slope, ascending, composing to l through its
/// truncation. The leftmost factor carries the leading scale and l's t_shift.
std::vector<WeylOperator> weyl_factor_slopes(const WeylOperator& l);

/// l = m * n for single-slope l with characteristic polynomial s1 s2 (up to
/// scale); throws SplitError on gcd(s1, s2) != 1, a mismatched split, or a
/// multi-slope operator, and HomologicalObstruction when a weight step fails
/// (for slope 0 this happens on integer-resonant roots).
std::pair<WeylOperator, WeylOperator> weyl_factor_characteristic(const WeylOperator& l, const UniPoly& s1,
                                                                 const UniPoly& s2);

struct MonicFactor {
    WeylOperator op;
    Slope slope;
    CharPoly charpoly;
};

/// Slope split followed by coprime splits along the squarefree blocks of each
/// characteristic polynomial. Each factor's characteristic polynomial is a
/// power of one block: a single root when that root is rational, otherwise a
/// Q-irreducible-free block that is not split further.
std::vector<MonicFactor> factor_monic(const WeylOperator& l);

/// l minus the left-to-right composition of the factors, through the smallest
/// truncation involved. Empty iff the factorization is valid.
WeylOperator verify_factorization(const WeylOperator& l, const std::vector<WeylOperator>& factors);

}  // namespace weylfact
