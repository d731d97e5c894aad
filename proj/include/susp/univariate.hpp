#pragma once

#include <optional>
#include <vector>

#include "susp/polynomial.hpp"

namespace susp {

/// Index of the single variable occurring in p, nullopt for constants.
/// Throws ShapeError if more than one variable occurs.
inline std::optional<std::size_t> univariate_index(const Polynomial& p) {
    const auto vars = p.occurring_variables();
    if (vars.size() > 1) throw ShapeError("polynomial '" + to_string(p) + "' is not univariate");
    if (vars.empty()) return std::nullopt;
    return vars.front();
}

/// Coefficients c[k] of var^k; p must not involve other variables.
inline std::vector<Rational> dense_coefficients(const Polynomial& p, std::size_t var) {
    std::vector<Rational> c;
    for (const auto& t : p.terms()) {
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (i != var && t.exps[i] != 0) throw ShapeError("polynomial is not univariate");
        const auto k = t.exps[var];
        if (c.size() <= k) c.resize(k + 1, Rational(0));
        c[k] = t.coeff;
    }
    return c;
}

inline Polynomial from_dense(const Context& ctx, std::size_t var, const std::vector<Rational>& c) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        Exponents e(ctx->size(), 0);
        e[var] = static_cast<std::uint32_t>(k);
        terms.push_back({std::move(e), c[k]});
    }
    return Polynomial(ctx, std::move(terms));
}

namespace detail {

inline void trim(std::vector<Rational>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
inline std::vector<Rational> dense_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        const Rational factor = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

inline std::vector<Rational> dense_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = dense_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& x : a) x /= lead;
    }
    return a;
}

}  // namespace detail

/// Monic gcd of two univariate polynomials in the same variable.
inline Polynomial univariate_gcd(const Polynomial& p, const Polynomial& q) {
    const Context ctx = common_context(p.context(), q.context());
    const Polynomial a = p.embed(ctx), b = q.embed(ctx);
    auto va = univariate_index(a);
    auto vb = univariate_index(b);
    if (va && vb && *va != *vb) throw ShapeError("gcd operands are univariate in different variables");
    const std::size_t var = va ? *va : (vb ? *vb : 0);
    if (ctx->size() == 0) {
        // Constants only.
        if (a.is_zero() && b.is_zero()) return Polynomial(ctx);
        return Polynomial::constant(ctx, Rational(1));
    }
    return from_dense(ctx, var, detail::dense_gcd(dense_coefficients(a, var), dense_coefficients(b, var)));
}

/// True iff f has no multiple roots over the algebraic closure, i.e.
/// gcd(f, f') is constant (characteristic zero).
inline bool is_squarefree(const Polynomial& f) {
    auto var = univariate_index(f);
    if (!var) throw DegreeError("squarefree test needs a nonconstant polynomial");
    return univariate_gcd(f, partial_derivative(f, *var)).is_constant();
}

/// Returns a * f(b*y + c) for univariate f.
inline Polynomial substitute_affine(const Polynomial& f, const Rational& a, const Rational& b, const Rational& c) {
    if (sgn(a) == 0 || sgn(b) == 0) throw InvalidTransformationError("affine substitution needs a != 0 and b != 0");
    auto var = univariate_index(f);
    const Context& ctx = f.context();
    if (!var) {
        if (ctx->size() == 0) return a * f;
        var = 0;
    }
    const auto coeffs = dense_coefficients(f, *var);
    const Polynomial inner = b * Polynomial::variable(ctx, *var) + c;
    // Horner evaluation at b*y + c.
    Polynomial acc(ctx);
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * inner + coeffs[k];
    return a * acc;
}

}  // namespace susp
