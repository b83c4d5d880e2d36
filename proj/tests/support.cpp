#include "support.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

Poly trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t x = 0; x < a.size(); ++x) {
        for (std::size_t y = 0; y < b.size(); ++y) out[x + y] += a[x] * b[y];
    }
    return trim(out);
}

Poly sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return trim(out);
}

Poly shift_arg(const Poly& p, const Rational& s) {
    Poly out;
    Poly power{Rational(1)};  // (x + s)^k
    const Poly lin{s, Rational(1)};
    for (std::size_t k = 0; k < p.size(); ++k) {
        Poly term = power;
        for (auto& c : term) c *= p[k];
        Poly acc(std::max(out.size(), term.size()));
        for (std::size_t m = 0; m < out.size(); ++m) acc[m] += out[m];
        for (std::size_t m = 0; m < term.size(); ++m) acc[m] += term[m];
        out = std::move(acc);
        power = mul(power, lin);
    }
    return trim(out);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    Poly bb = trim(b);
    if (bb.empty()) throw std::domain_error("oracle division by zero");
    Poly r = trim(a);
    if (r.size() < bb.size()) return {{}, r};
    Poly q(r.size() - bb.size() + 1);
    while (!r.empty() && r.size() >= bb.size()) {
        std::size_t shift = r.size() - bb.size();
        Rational c = r.back() / bb.back();
        q[shift] = c;
        for (std::size_t k = 0; k < bb.size(); ++k) r[shift + k] -= c * bb[k];
        r = trim(r);
    }
    return {trim(q), r};
}

bool coprime(Poly a, Poly b) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Integer(1);
    Integer sign(1);
    Integer prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0) ++swap;
            if (swap == n) return Integer(0);
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Integer>> sylvester_rows(const Poly& q, const Poly& r) {
    const std::size_t n = q.size() - 1;
    const std::size_t m = r.size() - 1;
    std::vector<std::vector<Integer>> rows(n + m, std::vector<Integer>(n + m, Integer(0)));
    auto as_int = [](const Rational& c) {
        if (!c.is_integer()) throw std::invalid_argument("integer coefficients expected");
        return c.numerator();
    };
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t e = 0; e <= n; ++e) rows[k][k + e] = as_int(q[e]);
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t e = 0; e <= m; ++e) rows[m + k][k + e] = as_int(r[e]);
    }
    return rows;
}

namespace {

int order_of(const CoeffMap& m) {
    int n = 0;
    for (const auto& e : m) n = std::max(n, e.first.i);
    return n;
}

/// Apply sum c t^j E^i to sum_e v_e t^e.
std::map<int, Rational> act(const CoeffMap& op, const std::map<int, Rational>& f) {
    std::map<int, Rational> out;
    for (const auto& [e, v] : f) {
        for (const auto& [pt, c] : op) {
            out[e + pt.j] += c * weylfact::pow(Rational(e), static_cast<unsigned>(pt.i)) * v;
        }
    }
    return out;
}

/// Coefficients of the polynomial of degree <= n through (x_k, y_k), x_k = 0..n.
Poly interpolate(const std::vector<Rational>& ys) {
    const std::size_t n = ys.size();
    Poly out;
    for (std::size_t k = 0; k < n; ++k) {
        Poly basis{Rational(1)};
        Rational denom(1);
        for (std::size_t m = 0; m < n; ++m) {
            if (m == k) continue;
            basis = mul(basis, Poly{Rational(-static_cast<long>(m)), Rational(1)});
            denom *= Rational(static_cast<long>(k) - static_cast<long>(m));
        }
        Rational scale = ys[k] / denom;
        if (out.size() < basis.size()) out.resize(basis.size());
        for (std::size_t m = 0; m < basis.size(); ++m) out[m] += basis[m] * scale;
    }
    return trim(out);
}

}  // namespace

CoeffMap weyl_product_by_action(const CoeffMap& l, const CoeffMap& m, int jmax) {
    const int n = order_of(l) + order_of(m);
    // values[j][a] = coefficient of t^(a+j) in (L M) t^a
    std::vector<std::vector<Rational>> values(static_cast<std::size_t>(jmax) + 1,
                                              std::vector<Rational>(static_cast<std::size_t>(n) + 1));
    for (int a = 0; a <= n; ++a) {
        auto image = act(l, act(m, {{a, Rational(1)}}));
        for (const auto& [e, v] : image) {
            int j = e - a;
            if (j <= jmax) values[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] = v;
        }
    }
    CoeffMap out;
    for (int j = 0; j <= jmax; ++j) {
        Poly p = interpolate(values[static_cast<std::size_t>(j)]);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!p[i].is_zero()) out.emplace(LatticePoint{static_cast<int>(i), j}, p[i]);
        }
    }
    return out;
}

CoeffMap commutative_product_naive(const CoeffMap& a, const CoeffMap& b, int jmax) {
    std::map<LatticePoint, Rational> acc;
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            if (pa.j + pb.j <= jmax) acc[{pa.i + pb.i, pa.j + pb.j}] += ca * cb;
        }
    }
    CoeffMap out;
    for (auto& [pt, c] : acc) {
        if (!c.is_zero()) out.emplace(pt, c);
    }
    return out;
}

std::vector<LatticePoint> hull_breakpoints(const std::set<LatticePoint>& support) {
    std::vector<LatticePoint> pts(support.begin(), support.end());
    pts.push_back({0, 0});
    int width = 0;
    for (const auto& p : pts) width = std::max(width, p.i);
    std::vector<Rational> chi(static_cast<std::size_t>(width) + 1);
    for (int x = 0; x <= width; ++x) {
        bool have = false;
        Rational best;
        for (const auto& p : pts) {
            for (const auto& q : pts) {
                if (p.i > x || q.i < x) continue;
                Rational v = p.i == q.i ? Rational(p.j)
                                        : Rational(p.j) + Rational(q.j - p.j) * Rational(x - p.i) / Rational(q.i - p.i);
                if (!have || v < best) {
                    best = v;
                    have = true;
                }
            }
        }
        chi[static_cast<std::size_t>(x)] = best;
    }
    std::vector<LatticePoint> out;
    auto at = [&chi](int x) { return chi[static_cast<std::size_t>(x)]; };
    for (int x = 0; x <= width; ++x) {
        bool keep = x == 0 || x == width || (at(x) - at(x - 1) != at(x + 1) - at(x));
        if (keep) {
            if (!at(x).is_integer()) throw std::logic_error("non-lattice breakpoint");
            out.push_back({x, static_cast<int>(at(x).numerator().get_si())});
        }
    }
    return out;
}

Poly taylor(const CoeffMap& m, int j) {
    Poly p;
    for (const auto& [pt, c] : m) {
        if (pt.j != j) continue;
        if (p.size() <= static_cast<std::size_t>(pt.i)) p.resize(static_cast<std::size_t>(pt.i) + 1);
        p[static_cast<std::size_t>(pt.i)] = c;
    }
    return trim(p);
}

CoeffMap from_taylor(const std::vector<Poly>& polys) {
    CoeffMap out;
    for (std::size_t j = 0; j < polys.size(); ++j) {
        for (std::size_t i = 0; i < polys[j].size(); ++i) {
            if (!polys[j][i].is_zero()) {
                out.emplace(LatticePoint{static_cast<int>(i), static_cast<int>(j)}, polys[j][i]);
            }
        }
    }
    return out;
}

std::pair<CoeffMap, CoeffMap> fuchsian_long_division(const CoeffMap& l, int jmax, bool weyl) {
    const Poly p0 = taylor(l, 0);
    std::vector<Poly> left{p0};
    std::vector<Poly> right{Poly{Rational(1)}};
    for (int j = 1; j <= jmax; ++j) {
        Poly rhs = taylor(l, j);
        for (int k = 1; k < j; ++k) {
            const Poly& mk = left[static_cast<std::size_t>(k)];
            Poly shifted = weyl ? shift_arg(mk, Rational(j - k)) : mk;
            rhs = sub(rhs, mul(shifted, right[static_cast<std::size_t>(j - k)]));
        }
        const Poly divisor = weyl ? shift_arg(p0, Rational(j)) : p0;
        auto [q, r] = divmod(rhs, divisor);
        right.push_back(q);
        left.push_back(r);
    }
    return {from_taylor(left), from_taylor(right)};
}

}  // namespace oracle

namespace gen {

int Rng::uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Rational Rng::nonzero_rational(int num_max, int den_max) {
    int p = 0;
    while (p == 0) p = uniform(-num_max, num_max);
    return Rational(p, uniform(1, den_max));
}

CoeffMap random_canonical(Rng& rng, int deg, int jmax, int monomials, int cmax) {
    auto coeff = [&]() {
        int c = 0;
        while (c == 0) c = rng.uniform(-cmax, cmax);
        return Rational(c);
    };
    CoeffMap m;
    m.emplace(weylfact::LatticePoint{rng.uniform(0, deg), 0}, coeff());
    m.emplace(weylfact::LatticePoint{deg, rng.uniform(0, jmax)}, coeff());
    while (static_cast<int>(m.size()) < monomials) {
        m.emplace(weylfact::LatticePoint{rng.uniform(0, deg), rng.uniform(0, jmax)}, coeff());
        if (rng.uniform(0, 3) == 0) break;
    }
    return m;
}

std::vector<Rational> distinct_roots(Rng& rng, int count, int num_max, int den_max) {
    std::vector<Rational> roots;
    while (static_cast<int>(roots.size()) < count) {
        Rational r = rng.nonzero_rational(num_max, den_max);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    return roots;
}

CoeffMap slope_generator(Rng& rng, long p, long q, const Rational& root, int noise, int jmax) {
    CoeffMap m;
    weylfact::accumulate(m, {static_cast<int>(q), static_cast<int>(p)}, Rational(1));
    weylfact::accumulate(m, {0, 0}, -root);
    const weylfact::Slope w(p, q);
    for (int k = 0; k < noise; ++k) {
        int i = rng.uniform(0, static_cast<int>(q));
        int j = rng.uniform(0, jmax);
        if (w.scaled_weight({i, j}) <= 0) continue;
        weylfact::accumulate(m, {i, j}, rng.nonzero_rational(4, 3));
    }
    return m;
}

}  // namespace gen
