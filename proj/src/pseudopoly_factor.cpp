#include <stdexcept>

#include "weylfact/errors.hpp"
#include "weylfact/homological.hpp"
#include "weylfact/pseudopoly.hpp"

namespace weylfact {

namespace {

QHPart unit_seed(const Slope& w) {
    return QHPart{w, Rational(0), CoeffMap{{{0, 0}, Rational(1)}}};
}

}  // namespace

std::vector<PseudoPolynomial> factor_by_slopes(const PseudoPolynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("factorization of the zero pseudopolynomial");
    }
    const int n_trunc = p.truncation();
    std::vector<PseudoPolynomial> factors;
    CoeffMap current = p.terms();
    AdmissiblePolygon polygon = newton_polygon(p);
    while (polygon.breakpoints().size() > 2) {
        const SlopeComponent first = single_slope_decomposition(polygon).front();
        const Slope& w = first.slope;
        HomologicalData h{w, first.polygon, drop_first_edge(polygon),
                          leading_part(PseudoPolynomial(current, n_trunc), w), unit_seed(w)};
        auto lifted = lift_factorization(current, n_trunc, h, commutative_product,
                                         [&h](const Rational&) { return h; });
        factors.emplace_back(std::move(lifted.left), n_trunc);
        current = std::move(lifted.right);
        AdmissiblePolygon rest = newton_polygon(PseudoPolynomial(current, n_trunc));
        if (rest != h.right_polygon) {
            throw std::logic_error("right factor polygon differs from the Minkowski complement");
        }
        polygon = std::move(rest);
    }
    factors.emplace_back(std::move(current), n_trunc);
    return factors;
}

std::pair<PseudoPolynomial, PseudoPolynomial> factor_by_characteristic(const PseudoPolynomial& p,
                                                                      const UniPoly& s1,
                                                                      const UniPoly& s2) {
    if (p.is_zero()) {
        throw std::invalid_argument("factorization of the zero pseudopolynomial");
    }
    const AdmissiblePolygon polygon = newton_polygon(p);
    const auto spectrum = poincare_spectrum(polygon);
    if (spectrum.size() != 1) {
        throw SplitError("characteristic split needs a single-slope pseudopolynomial");
    }
    if (s1.is_zero() || s2.is_zero()) {
        throw SplitError("characteristic factors must be nonzero");
    }
    if (!poly_gcd(s1, s2).is_constant()) {
        throw SplitError("resonant split refused: gcd(" + s1.to_string() + ", " + s2.to_string() +
                         ") = " + poly_gcd(s1, s2).to_string());
    }
    const Slope w = spectrum.front();
    const CharPoly cp = characteristic_polynomial(leading_part(p, w));
    const UniPoly full = cp.full_sigma();
    if ((s1 * s2).monic() != full) {
        throw SplitError("split " + s1.to_string() + " * " + s2.to_string() +
                         " does not match the characteristic polynomial " + full.to_string());
    }
    const int q = static_cast<int>(w.q());
    HomologicalData h{w,
                      AdmissiblePolygon::single_slope(w, q * s1.degree()),
                      AdmissiblePolygon::single_slope(w, q * s2.degree()),
                      part_from_sigma(w, s1.monic(), cp.scale),
                      part_from_sigma(w, s2.monic())};
    const int n_trunc = p.truncation();
    auto lifted = lift_factorization(p.terms(), n_trunc, h, commutative_product,
                                     [&h](const Rational&) { return h; });
    return {PseudoPolynomial(std::move(lifted.left), n_trunc), PseudoPolynomial(std::move(lifted.right), n_trunc)};
}

}  // namespace weylfact
