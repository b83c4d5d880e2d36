#include "weylfact/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylfact/errors.hpp"
#include "weylfact/homological.hpp"

namespace weylfact {

WeylOperator::WeylOperator(CoeffMap terms, int truncation, int t_shift)
    : truncation_(truncation), t_shift_(t_shift) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
    for (auto& [pt, c] : terms) {
        if (pt.i < 0 || pt.j < 0) {
            throw std::invalid_argument("negative exponent in Weyl operator");
        }
        if (pt.j <= truncation && !c.is_zero()) {
            terms_.emplace(pt, std::move(c));
        }
    }
}

WeylOperator WeylOperator::from_pseudopolynomial(const PseudoPolynomial& p, int truncation) {
    return WeylOperator(p.terms(), std::min(truncation, p.truncation()));
}

Rational WeylOperator::coeff(const LatticePoint& pt) const {
    auto it = terms_.find(pt);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool WeylOperator::is_canonical() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& e) { return e.first.j == 0; });
}

WeylOperator WeylOperator::normalized() const {
    if (terms_.empty()) {
        return *this;
    }
    int k = terms_.begin()->first.j;
    for (const auto& entry : terms_) {
        k = std::min(k, entry.first.j);
    }
    CoeffMap shifted;
    for (const auto& [pt, c] : terms_) {
        shifted.emplace(LatticePoint{pt.i, pt.j - k}, c);
    }
    return WeylOperator(std::move(shifted), truncation_ - k, t_shift_ - k);
}

CoeffMap weyl_product(const CoeffMap& left, const CoeffMap& right, int jmax) {
    if (left.empty() || right.empty()) {
        return {};
    }
    const int ni = max_i(left) + max_i(right) + 1;
    const int nj = jmax + 1;
    std::vector<Rational> dense(static_cast<std::size_t>(ni) * static_cast<std::size_t>(nj));
    std::vector<bool> touched(dense.size(), false);
    for (const auto& [pb, cb] : right) {
        if (pb.j > jmax) continue;
        const Integer shift(pb.j);
        for (const auto& [pa, ca] : left) {
            const int j = pa.j + pb.j;
            if (j > jmax) continue;
            const Rational c = ca * cb;
            // t^ja E^ia t^jb E^ib = t^(ja+jb) sum_k C(ia,k) jb^(ia-k) E^(k+ib)
            Integer binom_pow(1);
            for (int k = pa.i; k >= 0; --k) {
                std::size_t idx = static_cast<std::size_t>(k + pb.i) * nj + j;
                dense[idx] += c * Rational(binom_pow);
                touched[idx] = true;
                if (pb.j == 0) break;
                if (k > 0) {
                    binom_pow = binom_pow * shift * k / (pa.i - k + 1);
                }
            }
        }
    }
    CoeffMap out;
    for (int i = 0; i < ni; ++i) {
        for (int j = 0; j < nj; ++j) {
            std::size_t idx = static_cast<std::size_t>(i) * nj + j;
            if (touched[idx] && !dense[idx].is_zero()) {
                out.emplace(LatticePoint{i, j}, std::move(dense[idx]));
            }
        }
    }
    return out;
}

WeylOperator normal_order_mul(const WeylOperator& l, const WeylOperator& m) {
    const int n = std::min(l.truncation(), m.truncation());
    return WeylOperator(weyl_product(l.terms(), m.terms(), n), n, l.t_shift() + m.t_shift());
}

PseudoPolynomial pseudosymbol(const WeylOperator& l) {
    return PseudoPolynomial(l.terms(), l.truncation());
}

AdmissiblePolygon operator_polygon(const WeylOperator& l) {
    if (l.is_zero()) {
        throw std::invalid_argument("Newton polygon of the zero operator");
    }
    return newton_polygon(pseudosymbol(l));
}

std::vector<Slope> operator_spectrum(const WeylOperator& l) {
    return poincare_spectrum(operator_polygon(l));
}

bool is_fuchsian(const WeylOperator& l) {
    const auto spectrum = operator_spectrum(l);
    return spectrum.empty() || (spectrum.size() == 1 && spectrum.front() == Slope(0, 1));
}

QHPart operator_leading_part(const WeylOperator& l, const Slope& w) {
    return leading_part(pseudosymbol(l), w);
}

namespace {

void require_canonical(const WeylOperator& l) {
    if (l.is_zero()) {
        throw std::invalid_argument("factorization of the zero operator");
    }
    if (!l.is_canonical()) {
        throw std::invalid_argument("operator has a common left factor t^k; normalize it first");
    }
}

UniPoly seed_as_unipoly(const QHPart& seed) {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(max_i(seed.terms), 0)) + 1);
    for (const auto& [pt, v] : seed.terms) {
        c[static_cast<std::size_t>(pt.i)] = v;
    }
    return UniPoly(std::move(c));
}

/// For slope 0 the left seed acts on t^k as Q*(E + k); every other slope sees
/// only commutative data at the target weight.
DataAtWeight weyl_data(const HomologicalData& h) {
    if (h.weight_param != Slope(0, 1)) {
        return [h](const Rational&) { return h; };
    }
    const UniPoly q = seed_as_unipoly(h.left_seed);
    return [h, q](const Rational& gamma) {
        HomologicalData shifted = h;
        const Rational s = gamma - h.left_weight();
        UniPoly qs = q.shifted(s);
        shifted.left_seed.terms.clear();
        for (int k = 0; k <= qs.degree(); ++k) {
            accumulate(shifted.left_seed.terms, {k, 0}, qs.coeff(k));
        }
        return shifted;
    };
}

QHPart unit_seed(const Slope& w) {
    return QHPart{w, Rational(0), CoeffMap{{{0, 0}, Rational(1)}}};
}

}  // namespace

std::vector<WeylOperator> weyl_factor_slopes(const WeylOperator& l) {
    require_canonical(l);
    const int n_trunc = l.truncation();
    std::vector<WeylOperator> factors;
    CoeffMap current = l.terms();
    AdmissiblePolygon polygon = operator_polygon(l);
    while (polygon.breakpoints().size() > 2) {
        const SlopeComponent first = single_slope_decomposition(polygon).front();
        const Slope& w = first.slope;
        HomologicalData h{w, first.polygon, drop_first_edge(polygon),
                          leading_part(PseudoPolynomial(current, n_trunc), w), unit_seed(w)};
        auto lifted = lift_factorization(current, n_trunc, h, weyl_product, weyl_data(h));
        factors.emplace_back(std::move(lifted.left), n_trunc);
        current = std::move(lifted.right);
        AdmissiblePolygon rest = newton_polygon(PseudoPolynomial(current, n_trunc));
        if (rest != h.right_polygon) {
            throw std::logic_error("right factor polygon differs from the Minkowski complement");
        }
        polygon = std::move(rest);
    }
    factors.emplace_back(std::move(current), n_trunc);
    factors.front() = factors.front().with_t_shift(l.t_shift());
    return factors;
}

std::pair<WeylOperator, WeylOperator> weyl_factor_characteristic(const WeylOperator& l, const UniPoly& s1,
                                                                 const UniPoly& s2) {
    require_canonical(l);
    const auto spectrum = operator_spectrum(l);
    if (spectrum.size() != 1) {
        throw SplitError("characteristic split needs a single-slope operator");
    }
    if (s1.is_zero() || s2.is_zero()) {
        throw SplitError("characteristic factors must be nonzero");
    }
    const UniPoly g = poly_gcd(s1, s2);
    if (!g.is_constant()) {
        throw SplitError("resonant split refused: gcd(" + s1.to_string() + ", " + s2.to_string() +
                         ") = " + g.to_string());
    }
    const Slope w = spectrum.front();
    const CharPoly cp = characteristic_polynomial(operator_leading_part(l, w));
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
    const int n_trunc = l.truncation();
    auto lifted = lift_factorization(l.terms(), n_trunc, h, weyl_product, weyl_data(h));
    return {WeylOperator(std::move(lifted.left), n_trunc, l.t_shift()),
            WeylOperator(std::move(lifted.right), n_trunc)};
}

namespace {

/// Left roots exceeding right roots by a positive integer make the slope-0
/// recursion singular at that weight.
bool integer_resonant(const UniPoly& left, const UniPoly& right, int jmax) {
    for (int g = 1; g <= jmax; ++g) {
        if (!poly_gcd(left.shifted(Rational(g)), right).is_constant()) return true;
    }
    return false;
}

MonicFactor make_factor(WeylOperator op, const Slope& w) {
    CharPoly cp = characteristic_polynomial(operator_leading_part(op, w));
    return MonicFactor{std::move(op), w, std::move(cp)};
}

}  // namespace

std::vector<MonicFactor> factor_monic(const WeylOperator& l) {
    std::vector<MonicFactor> out;
    for (WeylOperator& f : weyl_factor_slopes(l)) {
        const auto spectrum = operator_spectrum(f);
        const Slope w = spectrum.empty() ? Slope(0, 1) : spectrum.front();
        const CharPoly cp = characteristic_polynomial(operator_leading_part(f, w));
        std::vector<UniPoly> blocks;
        for (const auto& b : squarefree_coprime_split(cp.full_sigma())) {
            blocks.push_back(pow(b.factor, static_cast<unsigned>(b.multiplicity)));
        }
        WeylOperator rest = std::move(f);
        while (blocks.size() > 1) {
            std::size_t pick = 0;
            if (w == Slope(0, 1)) {
                for (std::size_t k = 0; k < blocks.size(); ++k) {
                    UniPoly others = UniPoly::constant(1);
                    for (std::size_t m = 0; m < blocks.size(); ++m) {
                        if (m != k) others = others * blocks[m];
                    }
                    if (!integer_resonant(blocks[k], others, rest.truncation())) {
                        pick = k;
                        break;
                    }
                }
            }
            UniPoly others = UniPoly::constant(1);
            for (std::size_t m = 0; m < blocks.size(); ++m) {
                if (m != pick) others = others * blocks[m];
            }
            auto [left, right] = weyl_factor_characteristic(rest, blocks[pick], others);
            out.push_back(make_factor(std::move(left), w));
            rest = std::move(right);
            blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        out.push_back(make_factor(std::move(rest), w));
    }
    return out;
}

WeylOperator verify_factorization(const WeylOperator& l, const std::vector<WeylOperator>& factors) {
    int n = l.truncation();
    for (const auto& f : factors) {
        n = std::min(n, f.truncation());
    }
    CoeffMap product{{{0, 0}, Rational(1)}};
    for (const auto& f : factors) {
        product = weyl_product(product, f.terms(), n);
    }
    return WeylOperator(add_maps(clip(l.terms(), n), product, Rational(-1)), n);
}

}  // namespace weylfact
