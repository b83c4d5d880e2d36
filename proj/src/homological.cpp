#include "weylfact/homological.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylfact {

namespace {

std::string obstruction_message(const Rational& gamma, std::size_t rank, std::size_t rows) {
    std::ostringstream os;
    os << "homological obstruction at weight " << gamma << ": operator rank " << rank << " < " << rows
       << " target dimensions and the right-hand side is not in the image";
    return os.str();
}

}  // namespace

HomologicalObstruction::HomologicalObstruction(Rational gamma, std::size_t rank, std::size_t rows,
                                               std::vector<Rational> residual)
    : MathError(obstruction_message(gamma, rank, rows)),
      gamma_(std::move(gamma)),
      rank_(rank),
      rows_(rows),
      residual_(std::move(residual)) {}

GradedSlice slice_basis(const AdmissiblePolygon& d, const Slope& w, const Rational& alpha, int jmax) {
    GradedSlice slice{d, w, alpha, {}};
    const Rational step = w.value();
    for (int i = 0; i <= d.width(); ++i) {
        Rational j = alpha + step * Rational(i);
        if (!j.is_integer() || j.sign() < 0 || j > Rational(jmax)) continue;
        LatticePoint pt{i, static_cast<int>(j.numerator().get_si())};
        if (contains(d, pt)) {
            slice.basis.push_back(pt);
        }
    }
    return slice;
}

void validate(const HomologicalData& h) {
    if (h.left_seed.is_zero() || h.right_seed.is_zero()) {
        throw std::invalid_argument("homological seeds must be nonzero");
    }
    if (h.left_seed.weight_param != h.weight_param || h.right_seed.weight_param != h.weight_param) {
        throw std::invalid_argument("seed weight parameter mismatch");
    }
    if (h.left_weight() != min_weight(h.left_polygon, h.weight_param) ||
        h.right_weight() != min_weight(h.right_polygon, h.weight_param)) {
        throw std::invalid_argument("seed weights must be the minimal weights of their polygons");
    }
    for (const auto& entry : h.left_seed.terms) {
        if (!contains(h.left_polygon, entry.first)) {
            throw std::invalid_argument("left seed support outside its polygon");
        }
    }
    for (const auto& entry : h.right_seed.terms) {
        if (!contains(h.right_polygon, entry.first)) {
            throw std::invalid_argument("right seed support outside its polygon");
        }
    }
}

HomSystem hom_matrix(const HomologicalData& h, const Rational& gamma, int jmax) {
    const Slope& w = h.weight_param;
    HomSystem sys;
    sys.u_slice = slice_basis(h.right_polygon, w, gamma - h.left_weight(), jmax);
    sys.v_slice = slice_basis(h.left_polygon, w, gamma - h.right_weight(), jmax);
    sys.target = slice_basis(minkowski_sum(h.left_polygon, h.right_polygon), w, gamma, jmax);

    std::map<LatticePoint, std::size_t> row_of;
    for (std::size_t r = 0; r < sys.target.basis.size(); ++r) {
        row_of.emplace(sys.target.basis[r], r);
    }
    const std::size_t nu = sys.u_slice.basis.size();
    sys.matrix = Matrix(sys.target.basis.size(), nu + sys.v_slice.basis.size());

    auto fill_column = [&](std::size_t col, const CoeffMap& seed, const LatticePoint& m) {
        for (const auto& [pt, c] : seed) {
            LatticePoint image{pt.i + m.i, pt.j + m.j};
            if (image.j > jmax) continue;
            auto it = row_of.find(image);
            if (it == row_of.end()) {
                throw std::logic_error("homological image outside the target slice");
            }
            sys.matrix(it->second, col) += c;
        }
    };
    for (std::size_t k = 0; k < nu; ++k) {
        fill_column(k, h.left_seed.terms, sys.u_slice.basis[k]);
    }
    for (std::size_t k = 0; k < sys.v_slice.basis.size(); ++k) {
        fill_column(nu + k, h.right_seed.terms, sys.v_slice.basis[k]);
    }
    return sys;
}

std::pair<QHPart, QHPart> hom_solve(const HomologicalData& h, const Rational& gamma, const QHPart& w_part,
                                    int jmax) {
    const Slope& w = h.weight_param;
    HomSystem sys = hom_matrix(h, gamma, jmax);
    std::map<LatticePoint, std::size_t> row_of;
    for (std::size_t r = 0; r < sys.target.basis.size(); ++r) {
        row_of.emplace(sys.target.basis[r], r);
    }
    std::vector<Rational> rhs(sys.target.basis.size());
    for (const auto& [pt, c] : w_part.terms) {
        if (pt.j > jmax) continue;
        if (w.weight(pt) != gamma) {
            throw std::invalid_argument("right-hand side has the wrong weight");
        }
        auto it = row_of.find(pt);
        if (it == row_of.end()) {
            throw std::invalid_argument("right-hand side outside the sum of the polygons");
        }
        rhs[it->second] = c;
    }
    InconsistentSystem failure;
    auto sol = solve_smallest_pivot(sys.matrix, rhs, &failure);
    if (!sol) {
        throw HomologicalObstruction(gamma, failure.rank, sys.target.basis.size(), failure.residual);
    }
    QHPart u{w, gamma - h.left_weight(), {}};
    QHPart v{w, gamma - h.right_weight(), {}};
    const std::size_t nu = sys.u_slice.basis.size();
    for (std::size_t k = 0; k < nu; ++k) {
        accumulate(u.terms, sys.u_slice.basis[k], sol->x[k]);
    }
    for (std::size_t k = 0; k < sys.v_slice.basis.size(); ++k) {
        accumulate(v.terms, sys.v_slice.basis[k], sol->x[nu + k]);
    }
    return {std::move(u), std::move(v)};
}

Matrix sylvester_matrix(const UniPoly& q, const UniPoly& r) {
    if (q.is_zero() || r.is_zero()) {
        throw std::invalid_argument("Sylvester matrix of a zero polynomial");
    }
    const int n = q.degree();
    const int m = r.degree();
    const auto size = static_cast<std::size_t>(n + m);
    Matrix s(size, size);
    for (int k = 0; k < m; ++k) {
        for (int e = 0; e <= n; ++e) {
            s(static_cast<std::size_t>(k + e), static_cast<std::size_t>(k)) = q.coeff(e);
        }
    }
    for (int k = 0; k < n; ++k) {
        for (int e = 0; e <= m; ++e) {
            s(static_cast<std::size_t>(k + e), static_cast<std::size_t>(m + k)) = r.coeff(e);
        }
    }
    return s;
}

bool sylvester_bijective(const UniPoly& q, const UniPoly& r) {
    Matrix s = sylvester_matrix(q, r);
    return rank(s) == s.rows();
}

std::pair<UniPoly, UniPoly> fuchsian_division_step(const UniPoly& p0, const UniPoly& rhs, int d) {
    if (p0.is_zero() || p0.degree() != d) {
        throw std::invalid_argument("division step needs deg p0 = d");
    }
    auto [quot, rem] = poly_divmod(rhs, p0);
    return {rem, quot};
}

LiftResult lift_factorization(const CoeffMap& target, int jmax, const HomologicalData& seeds,
                              const ProductFn& product, const DataAtWeight& data_at) {
    validate(seeds);
    const Slope& w = seeds.weight_param;
    const int n = seeds.left_polygon.width() + seeds.right_polygon.width();
    const Rational gamma_star = seeds.left_weight() + seeds.right_weight();
    const long scaled_star = (gamma_star * Rational(w.q())).numerator().get_si();

    CoeffMap left = clip(seeds.left_seed.terms, jmax);
    CoeffMap right = clip(seeds.right_seed.terms, jmax);
    CoeffMap residual = add_maps(clip(target, jmax), product(left, right, jmax), Rational(-1));
    for (const auto& entry : residual) {
        if (w.scaled_weight(entry.first) <= scaled_star) {
            throw std::invalid_argument("seeds do not reproduce the leading part of the target");
        }
    }

    std::set<long> weights;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= jmax; ++j) {
            long sw = w.scaled_weight({i, j});
            if (sw > scaled_star) weights.insert(sw);
        }
    }

    for (long sw : weights) {
        QHPart rhs{w, Rational(sw, w.q()), {}};
        for (const auto& [pt, c] : residual) {
            if (w.scaled_weight(pt) == sw) rhs.terms.emplace(pt, c);
        }
        if (rhs.is_zero()) continue;
        auto [u, v] = hom_solve(data_at(rhs.weight_value), rhs.weight_value, rhs, jmax);
        CoeffMap new_right = add_maps(right, u.terms);
        CoeffMap delta = add_maps(product(left, u.terms, jmax), product(v.terms, new_right, jmax));
        residual = add_maps(residual, delta, Rational(-1));
        left = add_maps(left, v.terms);
        right = std::move(new_right);
        for (const auto& entry : residual) {
            if (w.scaled_weight(entry.first) <= sw) {
                throw std::logic_error("weight step left a residual at or below its own weight");
            }
        }
    }
    if (!residual.empty()) {
        throw std::logic_error("weight recursion finished with a nonzero residual");
    }
    return {std::move(left), std::move(right)};
}

}  // namespace weylfact
