#pragma once

// JSON serialization of the exact scalar types: cyclotomic numbers as
// {order, coeffs[]} with an approximate complex field, Laurent polynomials
// as exponent -> coefficient maps, and matrices as nested arrays.

#include <json.hpp>
#include <string>

#include "skeinlab/cyclotomic.hpp"
#include "skeinlab/matrix.hpp"
#include "skeinlab/ratfunc.hpp"

namespace skeinlab {

using json = nlohmann::json;

inline std::string rational_str(const Rational& r) { return r.str(); }

inline json to_json(const QRoot& a) {
    return json{{"order", a.order}, {"exponent", a.exponent}};
}

inline json to_json(const CycloNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rational_str(c));
    const auto a = x.approx();
    return json{{"order", x.order()},
                {"coeffs", coeffs},
                {"approx", {a.real(), a.imag()}}};
}

inline json to_json(const LaurentPoly& p) {
    json o = json::object();
    for (const auto& [e, c] : p.coeffs()) o[std::to_string(e)] = rational_str(c);
    return o;
}

inline json to_json(const RatFunc& f) {
    return json{{"numerator", to_json(f.num())}, {"denominator", to_json(f.den())}};
}

template <typename S>
json to_json(const Matrix<S>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename S>
json to_json(const std::vector<S>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

}  // namespace skeinlab
