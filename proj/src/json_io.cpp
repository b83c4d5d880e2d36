#include "weylfact/json_io.hpp"

#include <stdexcept>

namespace weylfact {

Json rational_to_json(const Rational& r) {
    return r.to_fraction_string();
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long>());
    }
    throw std::invalid_argument("rational must be a \"num/den\" string");
}

Json slope_to_json(const Slope& s) {
    return Json::array({std::to_string(s.p()), std::to_string(s.q())});
}

Json poly_to_json(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coefficients()) {
        out.push_back(rational_to_json(c));
    }
    return out;
}

Json polygon_to_json(const AdmissiblePolygon& d) {
    Json bps = Json::array();
    for (const auto& b : d.breakpoints()) {
        bps.push_back(Json::array({b.i, b.j}));
    }
    return Json{{"width", d.width()}, {"breakpoints", bps}};
}

AdmissiblePolygon polygon_from_json(const Json& j) {
    std::vector<LatticePoint> bps;
    for (const auto& b : j.at("breakpoints")) {
        bps.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
    }
    AdmissiblePolygon d(std::move(bps));
    if (j.contains("width") && j.at("width").get<int>() != d.width()) {
        throw std::invalid_argument("polygon width does not match its breakpoints");
    }
    return d;
}

namespace {

Json terms_to_json(const CoeffMap& m) {
    Json terms = Json::array();
    for (const auto& [pt, c] : m) {
        terms.push_back(Json{{"i", pt.i}, {"j", pt.j}, {"c", rational_to_json(c)}});
    }
    return terms;
}

CoeffMap terms_from_json(const Json& j) {
    CoeffMap m;
    for (const auto& t : j.at("terms")) {
        accumulate(m, {t.at("i").get<int>(), t.at("j").get<int>()}, rational_from_json(t.at("c")));
    }
    return m;
}

}  // namespace

Json pseudopoly_to_json(const PseudoPolynomial& p) {
    return Json{{"degree", p.degree()}, {"truncation", p.truncation()}, {"terms", terms_to_json(p.terms())}};
}

PseudoPolynomial pseudopoly_from_json(const Json& j) {
    return PseudoPolynomial(terms_from_json(j), j.at("truncation").get<int>());
}

Json operator_to_json(const WeylOperator& l) {
    return Json{{"degree", l.order()},
                {"truncation", l.truncation()},
                {"terms", terms_to_json(l.terms())},
                {"t_shift", l.t_shift()},
                {"order", l.order()}};
}

WeylOperator operator_from_json(const Json& j) {
    const int shift = j.contains("t_shift") ? j.at("t_shift").get<int>() : 0;
    return WeylOperator(terms_from_json(j), j.at("truncation").get<int>(), shift);
}

}  // namespace weylfact
