#pragma once

// Reference computations and random inputs shared by the unit and acceptance
// tests. The oracles avoid the library's algorithms on purpose: products by
// the action on monomials t^a, hulls by brute-force gap evaluation, division
// and gcd on plain coefficient vectors, determinants by Bareiss elimination.

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "weylfact/newton.hpp"
#include "weylfact/pseudopoly.hpp"
#include "weylfact/rational.hpp"

namespace oracle {

using weylfact::CoeffMap;
using weylfact::Integer;
using weylfact::LatticePoint;
using weylfact::Rational;

/// Ascending coefficients, no trailing zeros (empty = 0).
using Poly = std::vector<Rational>;

Poly trim(Poly p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
/// p(x + s), by expanding every power.
Poly shift_arg(const Poly& p, const Rational& s);
/// Schoolbook division, a = q b + r.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool coprime(Poly a, Poly b);

Integer bareiss_determinant(std::vector<std::vector<Integer>> m);
/// Sylvester matrix of integer polynomials laid out as rows of q and r shifts.
std::vector<std::vector<Integer>> sylvester_rows(const Poly& q, const Poly& r);

/// sum_i c_ij a^i for each j: the action of t^j E^i on t^a is a^i t^(a+j).
CoeffMap weyl_product_by_action(const CoeffMap& l, const CoeffMap& m, int jmax);
CoeffMap commutative_product_naive(const CoeffMap& a, const CoeffMap& b, int jmax);

/// Breakpoints of the lower boundary of the hull of support + origin, read off
/// the gap function at every integer abscissa.
std::vector<LatticePoint> hull_breakpoints(const std::set<LatticePoint>& support);

/// Coefficient polynomial of t^j.
Poly taylor(const CoeffMap& m, int j);
CoeffMap from_taylor(const std::vector<Poly>& polys);

/// Split of l = M N with M = p0 + sum t^k m_k (deg m_k < d), N = 1 + ...,
/// by dividing each Taylor coefficient by p0 (shifted by j in the Weyl case).
std::pair<CoeffMap, CoeffMap> fuchsian_long_division(const CoeffMap& l, int jmax, bool weyl);

}  // namespace oracle

namespace gen {

using weylfact::CoeffMap;
using weylfact::Rational;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi);
    bool coin() { return uniform(0, 1) == 1; }
    /// Nonzero p/q with |p| <= num_max, 1 <= q <= den_max.
    Rational nonzero_rational(int num_max, int den_max);
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// At most `monomials` terms with i <= deg, j <= jmax and integer coefficients
/// in [-cmax, cmax], always with a j = 0 term and a term of degree deg.
CoeffMap random_canonical(Rng& rng, int deg, int jmax, int monomials, int cmax);

/// Distinct nonzero rationals.
std::vector<Rational> distinct_roots(Rng& rng, int count, int num_max, int den_max);

/// t^p xi^q - root plus `noise` random terms of positive weight inside the
/// single-slope polygon of width q (j <= jmax).
CoeffMap slope_generator(Rng& rng, long p, long q, const Rational& root, int noise, int jmax);

}  // namespace gen
