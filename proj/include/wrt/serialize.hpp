#pragma once

// JSON forms of the exact ring elements. Big integers travel as decimal strings;
// plain JSON integers are accepted on input.

#include "wrt/cyc_rational.hpp"
#include "wrt/laurent_poly.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace wrt {

using json = nlohmann::json;

inline mpz_class bigint_from_json(const json& j) {
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer: " + j.get<std::string>());
        return z;
    }
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    throw std::invalid_argument("expected integer or decimal string");
}

inline json to_json(const CyclotomicInteger& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    return {{"r", x.r()}, {"coeffs", coeffs}};
}

inline CyclotomicInteger cyclotomic_from_json(const json& j) {
    const int r = j.at("r").get<int>();
    std::vector<mpz_class> c;
    for (const auto& e : j.at("coeffs")) c.push_back(bigint_from_json(e));
    if (c.size() != static_cast<std::size_t>(r - 1))
        throw std::invalid_argument("cyclotomic integer needs r-1 coefficients");
    return CyclotomicInteger::from_coeffs(r, c);
}

inline json to_json(const LaurentPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back(json::array({e, c.get_str()}));
    return out;
}

inline LaurentPoly laurent_from_json(const json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j) terms.emplace_back(t.at(0).get<int>(), bigint_from_json(t.at(1)));
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace wrt
