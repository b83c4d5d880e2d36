#include "weylfact/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylfact {

Slope::Slope(long p, long q) {
    if (q <= 0 || p < 0) {
        throw std::invalid_argument("slope must be a nonnegative fraction with positive denominator");
    }
    long g = std::gcd(p, q);
    p_ = p / g;
    q_ = q / g;
}

Slope::Slope(const Rational& value) {
    if (value.sign() < 0) {
        throw std::invalid_argument("negative slope");
    }
    if (!value.numerator().fits_slong_p() || !value.denominator().fits_slong_p()) {
        throw std::invalid_argument("slope out of range");
    }
    p_ = value.numerator().get_si();
    q_ = value.denominator().get_si();
}

std::string Slope::to_string() const {
    if (q_ == 1) {
        return std::to_string(p_);
    }
    return std::to_string(p_) + "/" + std::to_string(q_);
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    return a.p_ * b.q_ <=> b.p_ * a.q_;
}

AdmissiblePolygon::AdmissiblePolygon() : breakpoints_{{0, 0}} {}

AdmissiblePolygon::AdmissiblePolygon(std::vector<LatticePoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
    if (breakpoints_.empty() || breakpoints_.front() != LatticePoint{0, 0}) {
        throw std::invalid_argument("admissible polygon must start at the origin");
    }
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        const auto& a = breakpoints_[k - 1];
        const auto& b = breakpoints_[k];
        if (b.i <= a.i) {
            throw std::invalid_argument("breakpoint abscissae must strictly increase");
        }
        if (b.j < a.j) {
            throw std::invalid_argument("gap function must be nondecreasing");
        }
        if (k >= 2) {
            const auto& o = breakpoints_[k - 2];
            // slope(o,a) < slope(a,b)
            long lhs = static_cast<long>(a.j - o.j) * (b.i - a.i);
            long rhs = static_cast<long>(b.j - a.j) * (a.i - o.i);
            if (lhs >= rhs) {
                throw std::invalid_argument("edge slopes must strictly increase");
            }
        }
    }
}

AdmissiblePolygon AdmissiblePolygon::single_slope(const Slope& slope, int width) {
    if (width < 0) {
        throw std::invalid_argument("negative width");
    }
    if (width == 0) {
        return {};
    }
    if ((static_cast<long>(width) * slope.p()) % slope.q() != 0) {
        throw std::invalid_argument("single-slope endpoint is not a lattice point");
    }
    int top = static_cast<int>(static_cast<long>(width) * slope.p() / slope.q());
    return AdmissiblePolygon({{0, 0}, {width, top}});
}

std::vector<Slope> AdmissiblePolygon::edge_slopes() const {
    std::vector<Slope> out;
    for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
        out.emplace_back(breakpoints_[k].j - breakpoints_[k - 1].j,
                         breakpoints_[k].i - breakpoints_[k - 1].i);
    }
    return out;
}

std::string AdmissiblePolygon::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
        os << (k ? "," : "") << "(" << breakpoints_[k].i << "," << breakpoints_[k].j << ")";
    }
    os << "]";
    return os.str();
}

AdmissiblePolygon polygon_from_support(const std::set<LatticePoint>& points, int width) {
    if (points.empty()) {
        throw std::invalid_argument("Newton polygon of an empty support");
    }
    std::map<int, int> lowest;
    lowest[0] = 0;
    int max_i = 0;
    for (const auto& p : points) {
        if (p.i < 0 || p.j < 0 || p.i > width) {
            throw std::invalid_argument("support point outside the strip [0, width]");
        }
        max_i = std::max(max_i, p.i);
        auto [it, inserted] = lowest.emplace(p.i, p.j);
        if (!inserted) it->second = std::min(it->second, p.j);
    }
    if (max_i != width) {
        throw std::invalid_argument("width does not match the support");
    }
    std::vector<LatticePoint> hull;
    for (const auto& [i, j] : lowest) {
        LatticePoint b{i, j};
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            long cross = static_cast<long>(a.i - o.i) * (b.j - o.j) -
                         static_cast<long>(a.j - o.j) * (b.i - o.i);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(b);
    }
    return AdmissiblePolygon(std::move(hull));
}

Rational gap_eval(const AdmissiblePolygon& d, const Rational& i) {
    if (i.sign() < 0 || i > Rational(d.width())) {
        throw std::out_of_range("gap function argument outside [0, width]");
    }
    const auto& bp = d.breakpoints();
    for (std::size_t k = 1; k < bp.size(); ++k) {
        if (i <= Rational(bp[k].i)) {
            const auto& a = bp[k - 1];
            const auto& b = bp[k];
            return Rational(a.j) + Rational(b.j - a.j, b.i - a.i) * (i - Rational(a.i));
        }
    }
    return Rational(bp.back().j);
}

bool contains(const AdmissiblePolygon& d, const LatticePoint& p) {
    if (p.i < 0 || p.i > d.width()) {
        return false;
    }
    return Rational(p.j) >= gap_eval(d, Rational(p.i));
}

std::vector<Slope> poincare_spectrum(const AdmissiblePolygon& d) {
    return d.edge_slopes();
}

AdmissiblePolygon minkowski_sum(const AdmissiblePolygon& a, const AdmissiblePolygon& b) {
    struct Edge {
        int di;
        int dj;
    };
    auto edges_of = [](const AdmissiblePolygon& p) {
        std::vector<Edge> e;
        const auto& bp = p.breakpoints();
        for (std::size_t k = 1; k < bp.size(); ++k) {
            e.push_back({bp[k].i - bp[k - 1].i, bp[k].j - bp[k - 1].j});
        }
        return e;
    };
    auto ea = edges_of(a);
    auto eb = edges_of(b);
    std::vector<Edge> merged;
    std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(merged),
               [](const Edge& x, const Edge& y) {
                   return static_cast<long>(x.dj) * y.di < static_cast<long>(y.dj) * x.di;
               });
    std::vector<LatticePoint> bp{{0, 0}};
    for (const auto& e : merged) {
        if (bp.size() >= 2) {
            const auto& o = bp[bp.size() - 2];
            auto& last = bp.back();
            if (static_cast<long>(last.j - o.j) * e.di == static_cast<long>(e.dj) * (last.i - o.i)) {
                last.i += e.di;
                last.j += e.dj;
                continue;
            }
        }
        bp.push_back({bp.back().i + e.di, bp.back().j + e.dj});
    }
    return AdmissiblePolygon(std::move(bp));
}

Rational min_weight(const AdmissiblePolygon& d, const Slope& w) {
    long best = 0;
    for (const auto& p : d.breakpoints()) {
        best = std::min(best, w.scaled_weight(p));
    }
    return Rational(best, w.q());
}

std::vector<SlopeComponent> single_slope_decomposition(const AdmissiblePolygon& d) {
    std::vector<SlopeComponent> out;
    const auto& bp = d.breakpoints();
    for (std::size_t k = 1; k < bp.size(); ++k) {
        int di = bp[k].i - bp[k - 1].i;
        int dj = bp[k].j - bp[k - 1].j;
        Slope s(dj, di);
        out.push_back({AdmissiblePolygon({{0, 0}, {di, dj}}), s, std::gcd(di, dj)});
    }
    return out;
}

AdmissiblePolygon drop_first_edge(const AdmissiblePolygon& d) {
    const auto& bp = d.breakpoints();
    if (bp.size() <= 2) {
        return {};
    }
    std::vector<LatticePoint> rest;
    for (std::size_t k = 1; k < bp.size(); ++k) {
        rest.push_back({bp[k].i - bp[1].i, bp[k].j - bp[1].j});
    }
    return AdmissiblePolygon(std::move(rest));
}

}  // namespace weylfact
