#include "weylfact/expr.hpp"

#include <algorithm>
#include <sstream>

namespace weylfact {

DerivationExpr DerivationExpr::number(const Rational& v) {
    DerivationExpr e;
    e.kind = Kind::Number;
    e.value = v;
    return e;
}

DerivationExpr DerivationExpr::symbol(Kind k) {
    DerivationExpr e;
    e.kind = k;
    return e;
}

DerivationExpr DerivationExpr::binary(Kind k, DerivationExpr a, DerivationExpr b) {
    DerivationExpr e;
    e.kind = k;
    e.children.push_back(std::move(a));
    e.children.push_back(std::move(b));
    return e;
}

DerivationExpr DerivationExpr::power(DerivationExpr base, unsigned exponent) {
    DerivationExpr e;
    e.kind = Kind::Pow;
    e.exponent = exponent;
    e.children.push_back(std::move(base));
    return e;
}

DerivationExpr DerivationExpr::negate(DerivationExpr a) {
    DerivationExpr e;
    e.kind = Kind::Neg;
    e.children.push_back(std::move(a));
    return e;
}

CoeffMap laurent_product(const CoeffMap& left, const CoeffMap& right) {
    CoeffMap out;
    for (const auto& [pb, cb] : right) {
        const Integer k(pb.j);
        for (const auto& [pa, ca] : left) {
            const Rational c = ca * cb;
            Integer binom_pow(1);
            for (int m = pa.i; m >= 0; --m) {
                accumulate(out, {m + pb.i, pa.j + pb.j}, c * Rational(binom_pow));
                if (pb.j == 0) break;
                if (m > 0) {
                    binom_pow = binom_pow * k * m / (pa.i - m + 1);
                }
            }
        }
    }
    return out;
}

CoeffMap laurent_expand(const DerivationExpr& e) {
    using K = DerivationExpr::Kind;
    switch (e.kind) {
        case K::Number: {
            CoeffMap m;
            accumulate(m, {0, 0}, e.value);
            return m;
        }
        case K::T:
            return CoeffMap{{{0, 1}, Rational(1)}};
        case K::E:
            return CoeffMap{{{1, 0}, Rational(1)}};
        case K::D:
            // d/dt = t^-1 E
            return CoeffMap{{{1, -1}, Rational(1)}};
        case K::Add:
            return add_maps(laurent_expand(e.children[0]), laurent_expand(e.children[1]));
        case K::Sub:
            return add_maps(laurent_expand(e.children[0]), laurent_expand(e.children[1]), Rational(-1));
        case K::Mul:
            return laurent_product(laurent_expand(e.children[0]), laurent_expand(e.children[1]));
        case K::Neg:
            return add_maps({}, laurent_expand(e.children[0]), Rational(-1));
        case K::Pow: {
            const CoeffMap base = laurent_expand(e.children[0]);
            CoeffMap out{{{0, 0}, Rational(1)}};
            for (unsigned k = 0; k < e.exponent; ++k) {
                out = laurent_product(out, base);
            }
            return out;
        }
    }
    return {};
}

WeylOperator normalize_laurent(const CoeffMap& m, int truncation) {
    if (m.empty()) {
        return WeylOperator({}, truncation, 0);
    }
    int low = m.begin()->first.j;
    for (const auto& entry : m) {
        low = std::min(low, entry.first.j);
    }
    CoeffMap shifted;
    for (const auto& [pt, c] : m) {
        shifted.emplace(LatticePoint{pt.i, pt.j - low}, c);
    }
    return WeylOperator(std::move(shifted), truncation, -low);
}

WeylOperator from_derivation_form(const DerivationExpr& e, int truncation) {
    return normalize_laurent(laurent_expand(e), truncation);
}

namespace {

std::string monomial_text(int i, int j) {
    std::string s;
    auto append = [&s](const std::string& sym, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += sym;
        if (e > 1) s += "^" + std::to_string(e);
    };
    append("t", j);
    append("E", i);
    return s;
}

}  // namespace

std::string print_operator(const CoeffMap& terms) {
    if (terms.empty()) {
        return "0";
    }
    std::vector<std::pair<LatticePoint, Rational>> sorted(terms.begin(), terms.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.first.j != b.first.j) return a.first.j > b.first.j;
        return a.first.i > b.first.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [pt, c] : sorted) {
        if (pt.j < 0) {
            throw std::invalid_argument("negative power of t has no canonical text");
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        const std::string mono = monomial_text(pt.i, pt.j);
        if (mono.empty()) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag.to_string() << "*" << mono;
        }
    }
    return os.str();
}

}  // namespace weylfact
