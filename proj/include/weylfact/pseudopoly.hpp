#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "weylfact/newton.hpp"
#include "weylfact/rational.hpp"
#include "weylfact/unipoly.hpp"

namespace weylfact {

/// Sparse coefficient table (i,j) -> c for sums of c t^j xi^i. No zero entries.
using CoeffMap = std::map<LatticePoint, Rational>;

/// Adds c at pt, erasing the entry if it cancels.
void accumulate(CoeffMap& m, const LatticePoint& pt, const Rational& c);
CoeffMap add_maps(const CoeffMap& a, const CoeffMap& b, const Rational& scale_b = 1);
/// Drops entries with j > jmax.
CoeffMap clip(const CoeffMap& m, int jmax);
/// Largest i in the table, -1 when empty.
int max_i(const CoeffMap& m);

/// Element of Q[xi] (x) Q[[t]] known exactly through t^truncation.
class PseudoPolynomial {
public:
    PseudoPolynomial() = default;
    /// Zero entries are dropped and entries with j > truncation are discarded.
    PseudoPolynomial(CoeffMap terms, int truncation);

    static PseudoPolynomial constant(const Rational& c, int truncation);
    static PseudoPolynomial monomial(const Rational& c, LatticePoint pt, int truncation);
    /// p(xi) constant in t.
    static PseudoPolynomial from_unipoly(const UniPoly& p, int truncation);

    const CoeffMap& terms() const { return terms_; }
    int truncation() const { return truncation_; }
    /// max i over the support; -1 for zero.
    int degree() const { return max_i(terms_); }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const LatticePoint& pt) const;
    std::set<LatticePoint> support() const;
    /// Coefficient p_j(xi) of t^j.
    UniPoly taylor_coefficient(int j) const;
    PseudoPolynomial with_truncation(int truncation) const;

    friend bool operator==(const PseudoPolynomial&, const PseudoPolynomial&) = default;

private:
    CoeffMap terms_;
    int truncation_ = 0;
};

/// Truncation of the result is the minimum of the inputs.
PseudoPolynomial pp_add(const PseudoPolynomial& a, const PseudoPolynomial& b);
PseudoPolynomial pp_sub(const PseudoPolynomial& a, const PseudoPolynomial& b);
PseudoPolynomial pp_mul(const PseudoPolynomial& a, const PseudoPolynomial& b);
PseudoPolynomial pp_scale(const PseudoPolynomial& a, const Rational& c);

/// Commutative product of coefficient tables, clipped at j <= jmax.
CoeffMap commutative_product(const CoeffMap& a, const CoeffMap& b, int jmax);

/// Throws std::invalid_argument for the zero pseudopolynomial.
AdmissiblePolygon newton_polygon(const PseudoPolynomial& p);

/// Terms of a single w-weight: every key satisfies j - w i = weight_value.
struct QHPart {
    Slope weight_param;
    Rational weight_value;
    CoeffMap terms;

    bool is_zero() const { return terms.empty(); }
    PseudoPolynomial to_pseudopolynomial(int truncation) const;

    friend bool operator==(const QHPart&, const QHPart&) = default;
};

/// Builds a QHPart from an arbitrary table; throws std::invalid_argument if
/// the weights are mixed.
QHPart make_qh_part(const Slope& w, const Rational& weight, CoeffMap terms);

/// Quasihomogeneous components by ascending weight; their sum is p.
std::vector<QHPart> qh_decompose(const PseudoPolynomial& p, const Slope& w);

/// The component of minimal weight. Throws std::invalid_argument for zero p.
QHPart leading_part(const PseudoPolynomial& p, const Slope& w);

/// A quasihomogeneous part written as scale * t^j xi^i * sigma(mu), where
/// mu = t^p xi^q is the weight-zero generator for w = p/q and sigma is monic
/// with sigma(0) != 0.
struct CharPoly {
    Slope slope;
    LatticePoint monomial_prefix;
    UniPoly sigma;
    Rational scale;

    /// lambda^k * sigma when the prefix equals mu^k, i.e. the characteristic
    /// polynomial with its zero roots restored. Throws std::logic_error when the
    /// prefix is not a power of mu.
    UniPoly full_sigma() const;

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

/// Throws std::invalid_argument for a zero part.
CharPoly characteristic_polynomial(const QHPart& part);

/// Inverse of characteristic_polynomial.
QHPart reconstruct(const CharPoly& cp);

/// scale * s(mu) as a weight-zero part for the slope w.
QHPart part_from_sigma(const Slope& w, const UniPoly& s, const Rational& scale = 1);

/// Single-slope factors in ascending slope order whose product equals p through
/// its truncation. The leading coefficient scale stays in the leftmost factor.
std::vector<PseudoPolynomial> factor_by_slopes(const PseudoPolynomial& p);

/// Splits a single-slope p as p1 * p2 with characteristic polynomials s1, s2
/// (up to scale). Throws SplitError when gcd(s1, s2) != 1, when s1 * s2 does not
/// match the characteristic polynomial of p, or when p is not single-slope.
std::pair<PseudoPolynomial, PseudoPolynomial> factor_by_characteristic(const PseudoPolynomial& p,
                                                                      const UniPoly& s1,
                                                                      const UniPoly& s2);

}  // namespace weylfact
