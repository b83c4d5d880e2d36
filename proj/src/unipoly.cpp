#include "weylfact/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylfact {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(const Rational& c, int degree) {
    if (degree < 0) {
        throw std::invalid_argument("negative monomial degree");
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_root(const Rational& root) {
    return UniPoly({-root, Rational(1)});
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly result = constant(1);
    for (const auto& r : roots) {
        result = result * linear_root(r);
    }
    return result;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k > degree()) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) {
        return {};
    }
    return *this * leading().inverse();
}

UniPoly UniPoly::shifted(const Rational& s) const {
    // Horner in the shifted variable: p(l+s) = (...(a_n (l+s) + a_{n-1})(l+s) ...).
    UniPoly step({s, Rational(1)});
    UniPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * step + constant(*it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) {
        x *= c;
    }
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
    return a * Rational(-1);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!mag.is_one()) {
            os << mag << "*";
        }
        os << var;
        if (k > 1) {
            os << "^" << k;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> poly_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (a.degree() < b.degree()) {
        return {UniPoly(), a};
    }
    std::vector<Rational> rem = a.coefficients();
    const auto& div = b.coefficients();
    const int db = b.degree();
    const Rational lead_inv = b.leading().inverse();
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (int m = 0; m <= db; ++m) {
            rem[static_cast<std::size_t>(k - db + m)] -= c * div[static_cast<std::size_t>(m)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) {
        throw std::domain_error("gcd of two zero polynomials");
    }
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("polynomial division is not exact");
    }
    return q;
}

namespace {

// Yun's algorithm: returns a_1, a_2, ... with s = lc * prod a_k^k, a_k monic squarefree.
std::vector<UniPoly> yun_squarefree(const UniPoly& s) {
    std::vector<UniPoly> out;
    UniPoly ds = s.derivative();
    UniPoly c = poly_gcd(s, ds);
    UniPoly w = exact_quotient(s, c);
    UniPoly y = exact_quotient(ds, c);
    UniPoly z = y - w.derivative();
    while (!w.is_constant()) {
        UniPoly g = poly_gcd(w, z);
        out.push_back(g);
        w = exact_quotient(w, g);
        y = exact_quotient(z, g);
        z = y - w.derivative();
    }
    return out;
}

void append_divisors_from(const std::vector<std::pair<Integer, int>>& primes, std::size_t idx,
                          const Integer& acc, std::vector<Integer>& out) {
    if (idx == primes.size()) {
        out.push_back(acc);
        return;
    }
    Integer power = 1;
    for (int e = 0; e <= primes[idx].second; ++e) {
        append_divisors_from(primes, idx + 1, acc * power, out);
        power *= primes[idx].first;
    }
}

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& v) {
            Integer r = (v * v + c) % n;
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        primes.push_back(n);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

// Positive divisors of |n|, n != 0.
std::vector<Integer> divisors(Integer n) {
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    std::vector<Integer> primes;
    for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
        while (n % p == 0) {
            primes.push_back(Integer(p));
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Integer, int>> grouped;
    for (const auto& p : primes) {
        if (!grouped.empty() && grouped.back().first == p) {
            ++grouped.back().second;
        } else {
            grouped.emplace_back(p, 1);
        }
    }
    std::vector<Integer> out;
    append_divisors_from(grouped, 0, Integer(1), out);
    std::sort(out.begin(), out.end());
    return out;
}

// Integer primitive coefficients of a nonzero polynomial.
std::vector<Integer> integer_coefficients(const UniPoly& s) {
    Integer l = 1;
    for (const auto& c : s.coefficients()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
    }
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : s.coefficients()) {
        Integer v = c.numerator() * (l / c.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    for (auto& v : out) {
        v /= content;
    }
    return out;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const UniPoly& s) {
    if (s.is_zero()) {
        throw std::domain_error("rational roots of the zero polynomial");
    }
    std::vector<RootMultiplicity> out;
    UniPoly rest = s;
    int zero_mult = 0;
    while (!rest.is_zero() && rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        rest = exact_quotient(rest, UniPoly::monomial(1, 1));
        ++zero_mult;
    }
    if (zero_mult > 0) {
        out.push_back({Rational(0), zero_mult});
    }
    if (rest.degree() >= 1) {
        auto ints = integer_coefficients(rest);
        auto num_divs = divisors(ints.front());
        auto den_divs = divisors(ints.back());
        std::vector<Rational> candidates;
        for (const auto& p : num_divs) {
            for (const auto& q : den_divs) {
                Integer g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                candidates.emplace_back(p, q);
                candidates.emplace_back(Integer(-p), q);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        for (const auto& r : candidates) {
            if (rest.degree() < 1) break;
            int mult = 0;
            while (rest.degree() >= 1 && rest.evaluate(r).is_zero()) {
                rest = exact_quotient(rest, UniPoly::linear_root(r));
                ++mult;
            }
            if (mult > 0) {
                out.push_back({r, mult});
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root < b.root; });
    return out;
}

bool block_order_less(const UniPoly& a, const UniPoly& b) {
    bool a_lin = a.degree() == 1;
    bool b_lin = b.degree() == 1;
    if (a_lin != b_lin) {
        return a_lin;
    }
    if (a_lin) {
        Rational ra = -a.coeff(0) / a.coeff(1);
        Rational rb = -b.coeff(0) / b.coeff(1);
        if (ra != rb) return ra < rb;
    }
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    const auto& ca = a.coefficients();
    const auto& cb = b.coefficients();
    return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

std::vector<FactorMultiplicity> squarefree_coprime_split(const UniPoly& s) {
    if (s.is_zero()) {
        throw std::domain_error("squarefree split of the zero polynomial");
    }
    std::vector<FactorMultiplicity> out;
    if (s.is_constant()) {
        return out;
    }
    auto layers = yun_squarefree(s);
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const int mult = static_cast<int>(k) + 1;
        UniPoly rest = layers[k];
        if (rest.is_constant()) continue;
        for (const auto& rm : rational_roots(rest)) {
            UniPoly lin = UniPoly::linear_root(rm.root);
            out.push_back({lin, mult});
            rest = exact_quotient(rest, lin);
        }
        if (!rest.is_constant()) {
            out.push_back({rest.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorMultiplicity& a, const FactorMultiplicity& b) {
        return block_order_less(a.factor, b.factor);
    });
    return out;
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
    UniPoly out = UniPoly::constant(1);
    for (unsigned k = 0; k < exponent; ++k) {
        out = out * base;
    }
    return out;
}

}  // namespace weylfact
