#pragma once

#include <utility>
#include <vector>

#include "susp/polynomial.hpp"

namespace susp {

namespace detail {

// p viewed as a polynomial in `var` with coefficients in the remaining
// variables. The coefficients stay in p's context with var's exponent zeroed.
using VarPoly = std::vector<Polynomial>;

inline VarPoly split_by_variable(const Polynomial& p, std::size_t var) {
    const auto deg = p.degree(var);
    VarPoly out(deg < 0 ? 0 : static_cast<std::size_t>(deg) + 1, Polynomial(p.context()));
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : p.terms()) {
        Term c = t;
        c.exps[var] = 0;
        buckets[t.exps[var]].push_back(std::move(c));
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = Polynomial(p.context(), std::move(buckets[k]));
    return out;
}

inline void trim(VarPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline long deg(const VarPoly& a) { return static_cast<long>(a.size()) - 1; }

// Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b.
inline VarPoly pseudo_remainder(VarPoly a, const VarPoly& b) {
    const long db = deg(b);
    const Polynomial& lb = b.back();
    long e = deg(a) - db + 1;
    trim(a);
    while (!a.empty() && deg(a) >= db) {
        const Polynomial la = a.back();
        const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
        for (auto& c : a) c = lb * c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        trim(a);
        --e;
    }
    if (e > 0) {
        const Polynomial factor = lb.pow(static_cast<unsigned>(e));
        for (auto& c : a) c = factor * c;
    }
    return a;
}

inline void check_resultant_operands(const Polynomial& p, const Polynomial& q, std::size_t var) {
    if (p.degree(var) < 1 || q.degree(var) < 1)
        throw ShapeError("resultant needs positive degree in '" + p.context()->name(var) + "' for both operands");
}

}  // namespace detail

/// Resultant with respect to `var` by the subresultant pseudo-remainder
/// sequence. The result lives in the common context and is free of `var`.
inline Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
    const Context ctx = common_context(p.context(), q.context());
    if (var >= ctx->size()) throw ContextError("variable index out of range");
    Polynomial pa = p.embed(ctx), qa = q.embed(ctx);
    detail::check_resultant_operands(pa, qa, var);

    detail::VarPoly a = detail::split_by_variable(pa, var);
    detail::VarPoly b = detail::split_by_variable(qa, var);
    const Polynomial one = Polynomial::constant(ctx, Rational(1));
    Rational sign(1);
    if (detail::deg(a) < detail::deg(b)) {
        std::swap(a, b);
        if (detail::deg(a) % 2 == 1 && detail::deg(b) % 2 == 1) sign = -sign;
    }
    Polynomial g = one, h = one;
    while (true) {
        const long da = detail::deg(a), db = detail::deg(b);
        const long delta = da - db;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        detail::VarPoly r = detail::pseudo_remainder(a, b);
        if (r.empty()) return Polynomial(ctx);
        a = std::move(b);
        const Polynomial divisor = g * h.pow(static_cast<unsigned>(delta));
        for (auto& c : r) c = divide_exact(c, divisor);
        b = std::move(r);
        g = a.back();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0)
            h = divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
        if (detail::deg(b) == 0) {
            const long dA = detail::deg(a);
            const Polynomial res =
                divide_exact(b.back().pow(static_cast<unsigned>(dA)), h.pow(static_cast<unsigned>(dA - 1)));
            return sign * res;
        }
    }
}

inline Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var) {
    return resultant(p, q, common_context(p.context(), q.context())->index_of(var));
}

/// Determinant of the Sylvester matrix, by fraction-free (Bareiss)
/// elimination. Independent of the pseudo-remainder route above.
inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, std::size_t var) {
    const Context ctx = common_context(p.context(), q.context());
    if (var >= ctx->size()) throw ContextError("variable index out of range");
    Polynomial pa = p.embed(ctx), qa = q.embed(ctx);
    detail::check_resultant_operands(pa, qa, var);
    const auto a = detail::split_by_variable(pa, var);
    const auto b = detail::split_by_variable(qa, var);
    const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;

    std::vector<std::vector<Polynomial>> mat(size, std::vector<Polynomial>(size, Polynomial(ctx)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k) mat[row][row + k] = a[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k) mat[n + row][row + k] = b[n - k];

    Polynomial prev = Polynomial::constant(ctx, Rational(1));
    Rational sign(1);
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pivot = k;
        while (pivot < size && mat[pivot][k].is_zero()) ++pivot;
        if (pivot == size) return Polynomial(ctx);
        if (pivot != k) {
            std::swap(mat[pivot], mat[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j)
                mat[i][j] = divide_exact(mat[k][k] * mat[i][j] - mat[i][k] * mat[k][j], prev);
            mat[i][k] = Polynomial(ctx);
        }
        prev = mat[k][k];
    }
    return sign * mat[size - 1][size - 1];
}

inline Polynomial sylvester_resultant(const Polynomial& p, const Polynomial& q, std::string_view var) {
    return sylvester_resultant(p, q, common_context(p.context(), q.context())->index_of(var));
}

}  // namespace susp
