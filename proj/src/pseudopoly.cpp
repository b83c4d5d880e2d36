#include "weylfact/pseudopoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylfact {

void accumulate(CoeffMap& m, const LatticePoint& pt, const Rational& c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = m.try_emplace(pt, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m.erase(it);
        }
    }
}

CoeffMap add_maps(const CoeffMap& a, const CoeffMap& b, const Rational& scale_b) {
    CoeffMap out = a;
    for (const auto& [pt, c] : b) {
        accumulate(out, pt, c * scale_b);
    }
    return out;
}

CoeffMap clip(const CoeffMap& m, int jmax) {
    CoeffMap out;
    for (const auto& [pt, c] : m) {
        if (pt.j <= jmax) out.emplace(pt, c);
    }
    return out;
}

int max_i(const CoeffMap& m) {
    int best = -1;
    for (const auto& entry : m) {
        best = std::max(best, entry.first.i);
    }
    return best;
}

PseudoPolynomial::PseudoPolynomial(CoeffMap terms, int truncation) : truncation_(truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("negative truncation");
    }
    for (auto& [pt, c] : terms) {
        if (pt.i < 0 || pt.j < 0) {
            throw std::invalid_argument("negative exponent in pseudopolynomial");
        }
        if (pt.j <= truncation && !c.is_zero()) {
            terms_.emplace(pt, std::move(c));
        }
    }
}

PseudoPolynomial PseudoPolynomial::constant(const Rational& c, int truncation) {
    return PseudoPolynomial(CoeffMap{{{0, 0}, c}}, truncation);
}

PseudoPolynomial PseudoPolynomial::monomial(const Rational& c, LatticePoint pt, int truncation) {
    return PseudoPolynomial(CoeffMap{{pt, c}}, truncation);
}

PseudoPolynomial PseudoPolynomial::from_unipoly(const UniPoly& p, int truncation) {
    CoeffMap m;
    for (int k = 0; k <= p.degree(); ++k) {
        accumulate(m, {k, 0}, p.coeff(k));
    }
    return PseudoPolynomial(std::move(m), truncation);
}

Rational PseudoPolynomial::coeff(const LatticePoint& pt) const {
    auto it = terms_.find(pt);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<LatticePoint> PseudoPolynomial::support() const {
    std::set<LatticePoint> s;
    for (const auto& entry : terms_) {
        s.insert(entry.first);
    }
    return s;
}

UniPoly PseudoPolynomial::taylor_coefficient(int j) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(), 0)) + 1);
    for (const auto& [pt, v] : terms_) {
        if (pt.j == j) c[static_cast<std::size_t>(pt.i)] = v;
    }
    return UniPoly(std::move(c));
}

PseudoPolynomial PseudoPolynomial::with_truncation(int truncation) const {
    return PseudoPolynomial(terms_, truncation);
}

PseudoPolynomial pp_add(const PseudoPolynomial& a, const PseudoPolynomial& b) {
    int n = std::min(a.truncation(), b.truncation());
    return PseudoPolynomial(add_maps(a.terms(), b.terms()), n);
}

PseudoPolynomial pp_sub(const PseudoPolynomial& a, const PseudoPolynomial& b) {
    int n = std::min(a.truncation(), b.truncation());
    return PseudoPolynomial(add_maps(a.terms(), b.terms(), Rational(-1)), n);
}

PseudoPolynomial pp_scale(const PseudoPolynomial& a, const Rational& c) {
    CoeffMap m;
    for (const auto& [pt, v] : a.terms()) {
        accumulate(m, pt, v * c);
    }
    return PseudoPolynomial(std::move(m), a.truncation());
}

CoeffMap commutative_product(const CoeffMap& a, const CoeffMap& b, int jmax) {
    if (a.empty() || b.empty()) {
        return {};
    }
    const int ni = max_i(a) + max_i(b) + 1;
    const int nj = jmax + 1;
    std::vector<Rational> dense(static_cast<std::size_t>(ni) * static_cast<std::size_t>(nj));
    std::vector<bool> touched(dense.size(), false);
    for (const auto& [pa, ca] : a) {
        if (pa.j > jmax) continue;
        for (const auto& [pb, cb] : b) {
            int j = pa.j + pb.j;
            if (j > jmax) continue;
            std::size_t idx = static_cast<std::size_t>(pa.i + pb.i) * nj + j;
            dense[idx] += ca * cb;
            touched[idx] = true;
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

PseudoPolynomial pp_mul(const PseudoPolynomial& a, const PseudoPolynomial& b) {
    int n = std::min(a.truncation(), b.truncation());
    return PseudoPolynomial(commutative_product(a.terms(), b.terms(), n), n);
}

AdmissiblePolygon newton_polygon(const PseudoPolynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("Newton polygon of the zero pseudopolynomial");
    }
    return polygon_from_support(p.support(), p.degree());
}

PseudoPolynomial QHPart::to_pseudopolynomial(int truncation) const {
    return PseudoPolynomial(terms, truncation);
}

QHPart make_qh_part(const Slope& w, const Rational& weight, CoeffMap terms) {
    for (const auto& entry : terms) {
        if (w.weight(entry.first) != weight) {
            throw std::invalid_argument("term of the wrong weight in a quasihomogeneous part");
        }
    }
    return QHPart{w, weight, std::move(terms)};
}

std::vector<QHPart> qh_decompose(const PseudoPolynomial& p, const Slope& w) {
    std::map<long, CoeffMap> by_weight;
    for (const auto& [pt, c] : p.terms()) {
        by_weight[w.scaled_weight(pt)].emplace(pt, c);
    }
    std::vector<QHPart> out;
    for (auto& [sw, terms] : by_weight) {
        out.push_back(QHPart{w, Rational(sw, w.q()), std::move(terms)});
    }
    return out;
}

QHPart leading_part(const PseudoPolynomial& p, const Slope& w) {
    if (p.is_zero()) {
        throw std::invalid_argument("leading part of the zero pseudopolynomial");
    }
    return qh_decompose(p, w).front();
}

UniPoly CharPoly::full_sigma() const {
    const long q = slope.q();
    const long p = slope.p();
    if (monomial_prefix.i % q != 0) {
        throw std::logic_error("prefix is not a power of the weight-zero generator");
    }
    long k = monomial_prefix.i / q;
    if (monomial_prefix.j != k * p) {
        throw std::logic_error("prefix is not a power of the weight-zero generator");
    }
    return UniPoly::monomial(1, static_cast<int>(k)) * sigma;
}

CharPoly characteristic_polynomial(const QHPart& part) {
    if (part.is_zero()) {
        throw std::invalid_argument("characteristic polynomial of a zero part");
    }
    const Slope& w = part.weight_param;
    // Terms lie on one line of slope p/q; the leftmost one is the monomial prefix.
    const LatticePoint prefix = part.terms.begin()->first;
    std::vector<Rational> coeffs;
    for (const auto& [pt, c] : part.terms) {
        int di = pt.i - prefix.i;
        if (di % w.q() != 0) {
            throw std::invalid_argument("part is not quasihomogeneous");
        }
        long k = di / w.q();
        if (pt.j - prefix.j != k * w.p()) {
            throw std::invalid_argument("part is not quasihomogeneous");
        }
        if (coeffs.size() <= static_cast<std::size_t>(k)) {
            coeffs.resize(static_cast<std::size_t>(k) + 1);
        }
        coeffs[static_cast<std::size_t>(k)] = c;
    }
    UniPoly raw(std::move(coeffs));
    Rational scale = raw.leading();
    return CharPoly{w, prefix, raw.monic(), scale};
}

QHPart reconstruct(const CharPoly& cp) {
    CoeffMap terms;
    for (int k = 0; k <= cp.sigma.degree(); ++k) {
        LatticePoint pt{cp.monomial_prefix.i + k * static_cast<int>(cp.slope.q()),
                        cp.monomial_prefix.j + k * static_cast<int>(cp.slope.p())};
        accumulate(terms, pt, cp.sigma.coeff(k) * cp.scale);
    }
    return QHPart{cp.slope, cp.slope.weight(cp.monomial_prefix), std::move(terms)};
}

QHPart part_from_sigma(const Slope& w, const UniPoly& s, const Rational& scale) {
    return reconstruct(CharPoly{w, {0, 0}, s, scale});
}

}  // namespace weylfact
