#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "weylfact/rational.hpp"

namespace weylfact {

/// Exponent pair of the monomial t^j xi^i (or t^j E^i).
struct LatticePoint {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Nonnegative rational p/q in lowest terms.
class Slope {
public:
    Slope() = default;
    Slope(long p, long q);
    explicit Slope(const Rational& value);

    long p() const { return p_; }
    long q() const { return q_; }
    Rational value() const { return Rational(p_, q_); }

    /// q * wgt(i,j) = q*j - p*i, an integer proxy for the weight j - (p/q) i.
    long scaled_weight(const LatticePoint& pt) const { return q_ * pt.j - p_ * pt.i; }
    Rational weight(const LatticePoint& pt) const { return Rational(scaled_weight(pt), q_); }

    std::string to_string() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    long p_ = 0;
    long q_ = 1;
};

/// Epigraph of a convex, nondecreasing, piecewise-affine lattice function on
/// [0, width], stored by the vertices of its graph. The two vertical rays are
/// implicit.
class AdmissiblePolygon {
public:
    /// The width-0 polygon (the upward ray over the origin).
    AdmissiblePolygon();
    /// Validates the admissibility invariants; throws std::invalid_argument.
    explicit AdmissiblePolygon(std::vector<LatticePoint> breakpoints);

    /// Single edge from the origin to (width, slope*width); the endpoint must be a lattice point.
    static AdmissiblePolygon single_slope(const Slope& slope, int width);

    int width() const { return breakpoints_.back().i; }
    const std::vector<LatticePoint>& breakpoints() const { return breakpoints_; }
    /// Edge slopes, strictly increasing.
    std::vector<Slope> edge_slopes() const;

    friend bool operator==(const AdmissiblePolygon&, const AdmissiblePolygon&) = default;

    std::string to_string() const;

private:
    std::vector<LatticePoint> breakpoints_;
};

/// Newton polygon of a finite support: lower convex hull of the support and the
/// origin, extended upward. Throws std::invalid_argument on an empty support or
/// when `width` is not the largest i-coordinate.
AdmissiblePolygon polygon_from_support(const std::set<LatticePoint>& points, int width);

/// Gap function value; throws std::out_of_range outside [0, width].
Rational gap_eval(const AdmissiblePolygon& d, const Rational& i);

bool contains(const AdmissiblePolygon& d, const LatticePoint& p);

/// Distinct edge slopes in ascending order; empty iff width is 0.
std::vector<Slope> poincare_spectrum(const AdmissiblePolygon& d);

AdmissiblePolygon minkowski_sum(const AdmissiblePolygon& a, const AdmissiblePolygon& b);

/// Minimum of wgt(i,j) = j - w i over the polygon (attained at a breakpoint).
Rational min_weight(const AdmissiblePolygon& d, const Slope& w);

struct SlopeComponent {
    AdmissiblePolygon polygon;
    Slope slope;
    /// Number of indecomposable copies: lattice segments on the edge.
    int multiplicity = 1;

    friend bool operator==(const SlopeComponent&, const SlopeComponent&) = default;
};

/// One single-slope summand per edge, in ascending slope order.
std::vector<SlopeComponent> single_slope_decomposition(const AdmissiblePolygon& d);

/// The polygon left after removing the leftmost edge (width-0 polygon if there is none).
AdmissiblePolygon drop_first_edge(const AdmissiblePolygon& d);

}  // namespace weylfact
