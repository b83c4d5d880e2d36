#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "weylfact/errors.hpp"
#include "weylfact/matrix.hpp"
#include "weylfact/newton.hpp"
#include "weylfact/pseudopoly.hpp"
#include "weylfact/unipoly.hpp"

namespace weylfact {

/// Lattice points of a polygon with a fixed w-weight, bounded by j <= jmax.
struct GradedSlice {
    AdmissiblePolygon polygon;
    Slope weight_param;
    Rational weight_value;
    /// Ascending in i.
    std::vector<LatticePoint> basis;
};

GradedSlice slice_basis(const AdmissiblePolygon& d, const Slope& w, const Rational& alpha, int jmax);

/// Data (w, left polygon, right polygon, left seed, right seed) of the
/// homological operator (U, V) -> Q U + R V.
struct HomologicalData {
    Slope weight_param;
    AdmissiblePolygon left_polygon;
    AdmissiblePolygon right_polygon;
    QHPart left_seed;
    QHPart right_seed;

    Rational left_weight() const { return left_seed.weight_value; }
    Rational right_weight() const { return right_seed.weight_value; }
};

/// Checks the seed/polygon invariants; throws std::invalid_argument.
void validate(const HomologicalData& h);

/// Matrix of the homological operator at weight gamma together with the slice
/// bases indexing its columns (U slice, then V slice) and rows (target slice).
struct HomSystem {
    Matrix matrix;
    GradedSlice u_slice;  ///< Cs_{gamma - left weight}(right polygon)
    GradedSlice v_slice;  ///< Cs_{gamma - right weight}(left polygon)
    GradedSlice target;   ///< Cs_gamma(left + right)
};

HomSystem hom_matrix(const HomologicalData& h, const Rational& gamma, int jmax);

/// Solves Q U + R V = W exactly with smallest-column pivoting (free unknowns
/// zero). Throws HomologicalObstruction when W is not in the image.
std::pair<QHPart, QHPart> hom_solve(const HomologicalData& h, const Rational& gamma, const QHPart& w_part,
                                    int jmax);

/// Matrix of (u, v) -> q u + r v from polys of degree < deg r times degree < deg q
/// into degree < deg q + deg r.
Matrix sylvester_matrix(const UniPoly& q, const UniPoly& r);
bool sylvester_bijective(const UniPoly& q, const UniPoly& r);

/// rhs = q + r p0 with deg q < d: q is the remainder, r the quotient.
std::pair<UniPoly, UniPoly> fuchsian_division_step(const UniPoly& p0, const UniPoly& rhs, int d);

/// Product of coefficient tables clipped at j <= jmax.
using ProductFn = std::function<CoeffMap(const CoeffMap&, const CoeffMap&, int)>;

/// Homological data for the step at a given target weight.
using DataAtWeight = std::function<HomologicalData(const Rational& gamma)>;

struct LiftResult {
    CoeffMap left;
    CoeffMap right;
};

/// Solves target = left * right through t^jmax by the weight recursion: seeds
/// fixed at the minimal weight, then one homological solve per weight in
/// ascending order, each fed by the residual target - left * right.
///
/// `product` is the multiplication of the algebra (commutative or normal
/// ordered); `data_at` supplies the homological data used at each weight.
/// Throws HomologicalObstruction from the first unsolvable weight.
LiftResult lift_factorization(const CoeffMap& target, int jmax, const HomologicalData& seeds,
                              const ProductFn& product, const DataAtWeight& data_at);

}  // namespace weylfact
