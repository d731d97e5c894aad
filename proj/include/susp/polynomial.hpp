#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "susp/context.hpp"
#include "susp/errors.hpp"
#include "susp/rational.hpp"

namespace susp {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Graded reverse lexicographic comparison: true iff a > b.
inline bool grevlex_greater(const Exponents& a, const Exponents& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_greater(a, b); }
};

inline bool divides(const Exponents& d, const Exponents& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Caller guarantees b divides a.
inline Exponents operator-(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline bool coprime(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

struct Term {
    Exponents exps;
    Rational coeff;

    friend bool operator==(const Term& a, const Term& b) {
        return a.exps == b.exps && a.coeff == b.coeff;
    }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending grevlex order of the context's
/// variables, with no zero coefficients and no repeated monomials; the zero
/// polynomial has no terms. Every constructor normalizes and enforces the
/// context's safety limits.
class Polynomial {
public:
    explicit Polynomial(Context ctx) : ctx_(std::move(ctx)) {}

    Polynomial(Context ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
        normalize();
    }

    static Polynomial constant(Context ctx, const Rational& c) {
        Polynomial p(ctx);
        if (sgn(c) != 0) p.terms_.push_back({Exponents(p.ctx_->size(), 0), c});
        return p;
    }

    static Polynomial variable(Context ctx, std::size_t index, std::uint32_t power = 1) {
        if (index >= ctx->size()) throw ContextError("variable index out of range");
        Exponents e(ctx->size(), 0);
        e[index] = power;
        Polynomial p(ctx);
        p.terms_.push_back({std::move(e), Rational(1)});
        p.check_limits();
        return p;
    }

    static Polynomial variable(Context ctx, std::string_view name) {
        const auto i = ctx->index_of(name);
        return variable(std::move(ctx), i);
    }

    static Polynomial monomial(Context ctx, Exponents exps, const Rational& c) {
        if (exps.size() != ctx->size()) throw ContextError("exponent vector length mismatch");
        return Polynomial(std::move(ctx), {Term{std::move(exps), c}});
    }

    const Context& context() const noexcept { return ctx_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && susp::total_degree(terms_.front().exps) == 0);
    }

    Rational constant_value() const {
        if (!is_constant()) throw DegreeError("polynomial is not constant");
        return terms_.empty() ? Rational(0) : terms_.front().coeff;
    }

    /// Constant term (coefficient of the unit monomial).
    Rational constant_term() const {
        if (!terms_.empty() && susp::total_degree(terms_.back().exps) == 0) return terms_.back().coeff;
        return Rational(0);
    }

    /// Total degree; -1 for the zero polynomial.
    long total_degree() const noexcept {
        // Grevlex is degree-graded, so the first term has maximal degree.
        return terms_.empty() ? -1 : static_cast<long>(susp::total_degree(terms_.front().exps));
    }

    /// Degree in one variable; -1 for the zero polynomial.
    long degree(std::size_t var) const {
        if (var >= ctx_->size()) throw ContextError("variable index out of range");
        long d = terms_.empty() ? -1 : 0;
        for (const auto& t : terms_) d = std::max<long>(d, t.exps[var]);
        return d;
    }

    long degree(std::string_view name) const { return degree(ctx_->index_of(name)); }

    /// Indices of variables that occur with positive exponent.
    std::vector<std::size_t> occurring_variables() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            for (const auto& t : terms_) {
                if (t.exps[i] != 0) {
                    out.push_back(i);
                    break;
                }
            }
        }
        return out;
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw DegreeError("zero polynomial has no leading term");
        return terms_.front();
    }

    /// Re-express over `target`, which must contain every name of this
    /// polynomial's context.
    Polynomial embed(const Context& target) const {
        if (target == ctx_ || target->same_names(*ctx_)) {
            Polynomial p(*this);
            p.ctx_ = target;
            return p;
        }
        std::vector<std::size_t> map(ctx_->size());
        for (std::size_t i = 0; i < ctx_->size(); ++i) {
            auto j = target->find(ctx_->name(i));
            if (!j) throw ContextError("cannot embed: variable '" + ctx_->name(i) + "' missing from target context");
            map[i] = *j;
        }
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Exponents e(target->size(), 0);
            for (std::size_t i = 0; i < t.exps.size(); ++i) e[map[i]] = t.exps[i];
            out.push_back({std::move(e), t.coeff});
        }
        return Polynomial(target, std::move(out));
    }

    Polynomial operator-() const {
        Polynomial p(*this);
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        const Context ctx = common_context(a.ctx_, b.ctx_);
        if (a.ctx_ != ctx && !a.ctx_->same_names(*ctx)) return a.embed(ctx) * b;
        if (b.ctx_ != ctx && !b.ctx_->same_names(*ctx)) return a * b.embed(ctx);
        std::map<Exponents, Rational, GrevlexGreater> acc;
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                auto [it, inserted] = acc.try_emplace(s.exps + t.exps, s.coeff * t.coeff);
                if (!inserted) it->second += s.coeff * t.coeff;
            }
            if (acc.size() > ctx->limits().max_terms)
                throw ResourceError("term count exceeds limit of " + std::to_string(ctx->limits().max_terms));
        }
        Polynomial p(ctx);
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (sgn(c) != 0) p.terms_.push_back({e, std::move(c)});
        p.check_limits();
        return p;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        if (sgn(c) == 0) return Polynomial(p.ctx_);
        Polynomial r(p);
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned exponent) const {
        Polynomial result = constant(ctx_, Rational(1));
        Polynomial base = *this;
        while (exponent > 0) {
            if (exponent & 1u) result *= base;
            exponent >>= 1u;
            if (exponent > 0) base *= base;
        }
        return result;
    }

    /// Equality is by value over a common context.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.ctx_ == b.ctx_ || a.ctx_->same_names(*b.ctx_)) return a.terms_ == b.terms_;
        return (a - b).is_zero();
    }

    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return (1 / terms_.front().coeff) * (*this);
    }

private:
    static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
        const Context ctx = common_context(a.ctx_, b.ctx_);
        if (a.ctx_ != ctx && !a.ctx_->same_names(*ctx)) return combine(a.embed(ctx), b, subtract);
        if (b.ctx_ != ctx && !b.ctx_->same_names(*ctx)) return combine(a, b.embed(ctx), subtract);
        Polynomial r(ctx);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && grevlex_greater(a.terms_[i].exps, b.terms_[j].exps))) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grevlex_greater(b.terms_[j].exps, a.terms_[i].exps)) {
                Term t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                Rational c = a.terms_[i].coeff;
                if (subtract) c -= b.terms_[j].coeff;
                else c += b.terms_[j].coeff;
                if (sgn(c) != 0) r.terms_.push_back({a.terms_[i].exps, std::move(c)});
                ++i;
                ++j;
            }
        }
        r.check_limits();
        return r;
    }

    void normalize() {
        std::map<Exponents, Rational, GrevlexGreater> acc;
        for (auto& t : terms_) {
            if (t.exps.size() != ctx_->size()) throw ContextError("exponent vector length mismatch");
            auto [it, inserted] = acc.try_emplace(std::move(t.exps), t.coeff);
            if (!inserted) it->second += t.coeff;
        }
        terms_.clear();
        for (auto& [e, c] : acc)
            if (sgn(c) != 0) terms_.push_back({e, std::move(c)});
        check_limits();
    }

    void check_limits() const {
        const auto& lim = ctx_->limits();
        if (terms_.size() > lim.max_terms)
            throw ResourceError("term count " + std::to_string(terms_.size()) + " exceeds limit of " +
                                std::to_string(lim.max_terms));
        if (total_degree() > static_cast<long>(lim.max_degree))
            throw ResourceError("total degree " + std::to_string(total_degree()) + " exceeds limit of " +
                                std::to_string(lim.max_degree));
    }

    Context ctx_;
    std::vector<Term> terms_;
};

inline Polynomial operator+(const Polynomial& p, const Rational& c) {
    return p + Polynomial::constant(p.context(), c);
}
inline Polynomial operator-(const Polynomial& p, const Rational& c) {
    return p - Polynomial::constant(p.context(), c);
}

inline Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
    if (var >= p.context()->size()) throw ContextError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        if (t.exps[var] == 0) continue;
        Term d{t.exps, t.coeff * t.exps[var]};
        d.exps[var] -= 1;
        out.push_back(std::move(d));
    }
    return Polynomial(p.context(), std::move(out));
}

inline Polynomial partial_derivative(const Polynomial& p, std::string_view name) {
    return partial_derivative(p, p.context()->index_of(name));
}

/// Value at a point given in context order.
inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.context()->size())
        throw ContextError("point has " + std::to_string(point.size()) + " coordinates, context has " +
                           std::to_string(p.context()->size()));
    Rational sum(0);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0) v *= pow(point[i], static_cast<long>(t.exps[i]));
        sum += v;
    }
    return sum;
}

/// Value at a point given by name; every context variable must be assigned.
inline Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
    std::vector<Rational> coords;
    coords.reserve(p.context()->size());
    for (const auto& name : p.context()->names()) {
        auto it = point.find(name);
        if (it == point.end()) throw ContextError("no value assigned to variable '" + name + "'");
        coords.push_back(it->second);
    }
    return evaluate(p, coords);
}

/// Replaces variable i of p's context by images[i]. All images must share a
/// context, which becomes the result's context.
inline Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
    if (images.size() != p.context()->size())
        throw ContextError("substitution needs one image per variable");
    if (images.empty()) return p;
    Context target = images.front().context();
    for (const auto& im : images) target = common_context(target, im.context());
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };
    Polynomial result(target);
    for (const auto& t : p.terms()) {
        Polynomial term = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] != 0) term *= power_of(i, t.exps[i]);
        result += term;
    }
    return result;
}

/// Exact quotient p / q over the rationals; throws if q does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw DomainError("division by the zero polynomial");
    const Context ctx = common_context(p.context(), q.context());
    const Polynomial a = p.embed(ctx), b = q.embed(ctx);
    if (b.is_constant()) return (1 / b.constant_value()) * a;
    const Term& lead = b.leading_term();
    std::map<Exponents, Rational, GrevlexGreater> work;
    for (const auto& t : a.terms()) work.emplace(t.exps, t.coeff);
    std::vector<Term> quotient;
    while (!work.empty()) {
        auto it = work.begin();
        if (!divides(lead.exps, it->first)) throw DomainError("polynomial division is not exact");
        Term qt{it->first - lead.exps, it->second / lead.coeff};
        for (const auto& t : b.terms()) {
            auto [jt, inserted] = work.try_emplace(t.exps + qt.exps, -qt.coeff * t.coeff);
            if (!inserted) {
                jt->second -= qt.coeff * t.coeff;
                if (sgn(jt->second) == 0) work.erase(jt);
            }
        }
        quotient.push_back(std::move(qt));
        if (work.size() > ctx->limits().max_terms) throw ResourceError("division exceeded term limit");
    }
    return Polynomial(ctx, std::move(quotient));
}

/// Canonical text form, e.g. "-x^2*y - x + 1/2". Parsable back by the
/// expression parser.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = sgn(t.coeff) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(t.coeff);
        std::string mono;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            if (t.exps[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.context()->name(i);
            if (t.exps[i] > 1) mono += "^" + std::to_string(t.exps[i]);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace susp
