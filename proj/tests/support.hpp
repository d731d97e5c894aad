#pragma once

#include <random>
#include <string>
#include <vector>

#include "susp/parser.hpp"

namespace susp::testing {

inline Polynomial P(const std::string& text, const Context& ctx) { return parse_polynomial(text, ctx); }

inline std::vector<Polynomial> Ps(const std::vector<std::string>& texts, const Context& ctx) {
    std::vector<Polynomial> out;
    for (const auto& t : texts) out.push_back(parse_polynomial(t, ctx));
    return out;
}

inline Rational random_rational(std::mt19937& rng, int span = 5, int max_den = 3) {
    std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
    return make_rational(num(rng), den(rng));
}

/// Random polynomial with at most `terms` terms of total degree <= max_degree.
inline Polynomial random_polynomial(std::mt19937& rng, const Context& ctx, unsigned max_degree, std::size_t terms,
                                    bool integer_coeffs = false) {
    std::vector<Term> ts;
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, ctx->size() - 1);
    for (std::size_t i = 0; i < terms; ++i) {
        Exponents e(ctx->size(), 0);
        const unsigned d = deg(rng);
        for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
        ts.push_back({e, integer_coeffs ? random_rational(rng, 5, 1) : random_rational(rng)});
    }
    return Polynomial(ctx, std::move(ts));
}

inline std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < n; ++i) pt.push_back(random_rational(rng, 7, 4));
    return pt;
}

}  // namespace susp::testing
