#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stop_token>
#include <string>
#include <vector>

#include "susp/polynomial.hpp"

namespace susp {

/// Admissible monomial order over the variable positions of a context.
///
/// Lexicographic treats the first variable as largest. Block(split) compares
/// the first `split` variables by grevlex, then breaks ties by grevlex on the
/// rest; it eliminates the first block.
class MonomialOrder {
public:
    enum class Kind { Lex, Grevlex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
    static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

    Kind kind() const noexcept { return kind_; }
    std::size_t split() const noexcept { return split_; }

    std::string name() const {
        switch (kind_) {
            case Kind::Lex: return "lex";
            case Kind::Grevlex: return "grevlex";
            case Kind::Block: return "block(" + std::to_string(split_) + ")";
        }
        return "?";
    }

    /// True iff a > b.
    bool greater(const Exponents& a, const Exponents& b) const {
        switch (kind_) {
            case Kind::Lex:
                for (std::size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] > b[i];
                return false;
            case Kind::Grevlex:
                return grevlex_greater(a, b);
            case Kind::Block: {
                const std::size_t s = std::min(split_, a.size());
                if (auto c = grevlex_range(a, b, 0, s); c != 0) return c > 0;
                return grevlex_range(a, b, s, a.size()) > 0;
            }
        }
        return false;
    }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Block || a.split_ == b.split_);
    }

private:
    MonomialOrder(Kind k, std::size_t split) : kind_(k), split_(split) {}

    // Grevlex restricted to positions [lo, hi): +1 if a > b, -1 if a < b, 0 if equal.
    static int grevlex_range(const Exponents& a, const Exponents& b, std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = hi; i-- > lo;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }

    Kind kind_;
    std::size_t split_;
};

struct GroebnerOptions {
    std::stop_token stop{};
};

namespace detail {

struct OrderGreater {
    const MonomialOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const { return order->greater(a, b); }
};

// Terms sorted descending under some order; front() is the leading term.
using SortedTerms = std::vector<Term>;

inline SortedTerms sorted_terms(const Polynomial& p, const MonomialOrder& order) {
    SortedTerms t(p.terms().begin(), p.terms().end());
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return order.greater(a.exps, b.exps); });
    return t;
}

inline void make_monic(SortedTerms& t) {
    if (t.empty()) return;
    const Rational lead = t.front().coeff;
    if (lead == 1) return;
    for (auto& x : t) x.coeff /= lead;
}

inline void check_stop(const GroebnerOptions& opts) {
    if (opts.stop.stop_requested()) throw CancelledError("Groebner computation cancelled");
}

// Full reduction of f modulo the divisors (each nonempty, any order of
// preference: the first divisor whose leading monomial divides wins).
inline SortedTerms reduce(const SortedTerms& f, const std::vector<const SortedTerms*>& divisors,
                          const MonomialOrder& order, const Limits& limits, const GroebnerOptions& opts) {
    std::map<Exponents, Rational, OrderGreater> work(OrderGreater{&order});
    for (const auto& t : f) work.emplace(t.exps, t.coeff);
    SortedTerms remainder;
    std::size_t steps = 0;
    while (!work.empty()) {
        if ((++steps & 0xff) == 0) check_stop(opts);
        auto it = work.begin();
        const SortedTerms* hit = nullptr;
        for (const auto* d : divisors) {
            if (divides(d->front().exps, it->first)) {
                hit = d;
                break;
            }
        }
        if (!hit) {
            remainder.push_back({it->first, it->second});
            work.erase(it);
            continue;
        }
        const Rational factor = it->second / hit->front().coeff;
        const Exponents shift = it->first - hit->front().exps;
        work.erase(it);
        for (std::size_t k = 1; k < hit->size(); ++k) {
            const Term& t = (*hit)[k];
            Exponents e = t.exps + shift;
            if (total_degree(e) > limits.max_degree)
                throw ResourceError("reduction exceeded total degree limit of " + std::to_string(limits.max_degree));
            auto [jt, inserted] = work.try_emplace(std::move(e), -factor * t.coeff);
            if (!inserted) {
                jt->second -= factor * t.coeff;
                if (sgn(jt->second) == 0) work.erase(jt);
            }
        }
        if (work.size() + remainder.size() > limits.max_terms)
            throw ResourceError("reduction exceeded term limit of " + std::to_string(limits.max_terms));
    }
    return remainder;
}

inline SortedTerms s_polynomial(const SortedTerms& f, const SortedTerms& g, const MonomialOrder& order,
                                const Limits& limits) {
    const Exponents l = lcm(f.front().exps, g.front().exps);
    if (total_degree(l) > limits.max_degree)
        throw ResourceError("S-polynomial exceeds total degree limit of " + std::to_string(limits.max_degree));
    const Exponents sf = l - f.front().exps, sg = l - g.front().exps;
    std::map<Exponents, Rational, OrderGreater> acc(OrderGreater{&order});
    for (const auto& t : f) acc[t.exps + sf] += t.coeff / f.front().coeff;
    for (const auto& t : g) acc[t.exps + sg] -= t.coeff / g.front().coeff;
    SortedTerms out;
    for (auto& [e, c] : acc)
        if (sgn(c) != 0) out.push_back({e, c});
    return out;
}

inline Polynomial to_polynomial(const Context& ctx, const SortedTerms& t) {
    return Polynomial(ctx, std::vector<Term>(t.begin(), t.end()));
}

inline Context common_context_of(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw ShapeError("generator list must be nonempty");
    Context ctx = gens.front().context();
    for (const auto& g : gens) ctx = common_context(ctx, g.context());
    return ctx;
}

}  // namespace detail

/// Leading exponent vector of a nonzero polynomial under `order`.
inline Exponents leading_exponents(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) throw DegreeError("zero polynomial has no leading term");
    const Exponents* best = &p.terms().front().exps;
    for (const auto& t : p.terms())
        if (order.greater(t.exps, *best)) best = &t.exps;
    return *best;
}

/// Remainder of f on division by `basis` under `order`: no term of the
/// result is divisible by a leading monomial of the basis, and f minus the
/// result lies in the ideal of the basis.
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                              const MonomialOrder& order, const GroebnerOptions& opts = {}) {
    Context ctx = f.context();
    for (const auto& g : basis) ctx = common_context(ctx, g.context());
    std::vector<detail::SortedTerms> divs;
    for (const auto& g : basis)
        if (!g.is_zero()) divs.push_back(detail::sorted_terms(g.embed(ctx), order));
    std::vector<const detail::SortedTerms*> ptrs;
    for (const auto& d : divs) ptrs.push_back(&d);
    return detail::to_polynomial(
        ctx, detail::reduce(detail::sorted_terms(f.embed(ctx), order), ptrs, order, ctx->limits(), opts));
}

/// Reduced Groebner basis: monic generators sorted by ascending leading
/// monomial. The zero ideal has no generators.
class GroebnerBasis {
public:
    GroebnerBasis(Context ctx, MonomialOrder order, std::vector<Polynomial> generators)
        : ctx_(std::move(ctx)), order_(order), generators_(std::move(generators)) {}

    const Context& context() const noexcept { return ctx_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return generators_.size(); }

    bool is_unit() const { return generators_.size() == 1 && generators_.front().is_constant(); }

    Polynomial normal_form(const Polynomial& f, const GroebnerOptions& opts = {}) const {
        return susp::normal_form(f.embed(ctx_), generators_, order_, opts);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.order_ == b.order_ && a.generators_ == b.generators_;
    }

private:
    Context ctx_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
};

/// Buchberger's algorithm with the coprime-leading-monomial and chain
/// criteria; pairs are selected by smallest lcm (normal strategy).
inline GroebnerBasis groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                                    const GroebnerOptions& opts = {}) {
    using detail::SortedTerms;
    const Context ctx = detail::common_context_of(gens);
    const Limits& limits = ctx->limits();

    std::vector<SortedTerms> basis;
    auto unit_basis = [&] {
        return GroebnerBasis(ctx, order, {Polynomial::constant(ctx, Rational(1))});
    };
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return unit_basis();
        auto t = detail::sorted_terms(g.embed(ctx), order);
        detail::make_monic(t);
        basis.push_back(std::move(t));
    }
    if (basis.empty()) return GroebnerBasis(ctx, order, {});

    using Pair = std::pair<std::size_t, std::size_t>;  // (i, j) with i < j
    std::set<Pair> pending;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

    auto lead = [&](std::size_t i) -> const Exponents& { return basis[i].front().exps; };
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return pending.count(a < b ? Pair{a, b} : Pair{b, a}) != 0;
    };

    while (!pending.empty()) {
        detail::check_stop(opts);
        auto best = pending.begin();
        Exponents best_lcm = lcm(lead(best->first), lead(best->second));
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Exponents l = lcm(lead(it->first), lead(it->second));
            if (order.greater(best_lcm, l)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        const auto [i, j] = *best;
        pending.erase(best);

        if (coprime(lead(i), lead(j))) continue;
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            chain = divides(lead(k), best_lcm) && !is_pending(i, k) && !is_pending(j, k);
        }
        if (chain) continue;

        SortedTerms s = detail::s_polynomial(basis[i], basis[j], order, limits);
        std::vector<const SortedTerms*> ptrs;
        for (const auto& b : basis) ptrs.push_back(&b);
        SortedTerms r = detail::reduce(s, ptrs, order, limits, opts);
        if (r.empty()) continue;
        if (total_degree(r.front().exps) == 0) return unit_basis();
        detail::make_monic(r);
        basis.push_back(std::move(r));
        if (basis.size() > limits.max_terms) throw ResourceError("Groebner basis grew beyond the term limit");
        const std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.insert({k, n});
    }

    // Minimize: drop elements whose leading monomial is divisible by another's.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !divides(lead(j), lead(i))) continue;
            redundant = lead(j) != lead(i) || j < i;
        }
        if (!redundant) keep.push_back(i);
    }
    // Inter-reduce tails against the other minimal elements.
    std::vector<SortedTerms> reduced;
    for (std::size_t i : keep) {
        std::vector<const SortedTerms*> others;
        for (std::size_t j : keep)
            if (j != i) others.push_back(&basis[j]);
        SortedTerms r = detail::reduce(basis[i], others, order, limits, opts);
        detail::make_monic(r);
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const SortedTerms& a, const SortedTerms& b) { return order.greater(b.front().exps, a.front().exps); });
    std::vector<Polynomial> out;
    out.reserve(reduced.size());
    for (const auto& r : reduced) out.push_back(detail::to_polynomial(ctx, r));
    return GroebnerBasis(ctx, order, std::move(out));
}

/// True iff 1 lies in the ideal, i.e. the generators have no common zero
/// over the algebraic closure.
inline bool contains_unit(const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {}) {
    return groebner_basis(gens, MonomialOrder::grevlex(), opts).is_unit();
}

/// Cofactors h with sum h_i * gens_i = 1, or nothing when the ideal is
/// proper. Runs a grevlex Buchberger that carries each basis element's
/// representation in terms of the inputs, so it is slower than
/// contains_unit and meant for auditing.
inline std::optional<std::vector<Polynomial>> unit_certificate(const std::vector<Polynomial>& gens,
                                                               const GroebnerOptions& opts = {}) {
    const Context ctx = detail::common_context_of(gens);
    const Limits& limits = ctx->limits();
    const std::size_t m = gens.size();
    struct Tracked {
        Polynomial f;
        std::vector<Polynomial> rep;
    };
    auto scaled = [&](Tracked t) {
        const Rational lc = t.f.leading_term().coeff;
        const Rational inv = 1 / lc;
        t.f = inv * t.f;
        for (auto& h : t.rep) h = inv * h;
        return t;
    };
    // Top-reduces t until its leading monomial is not divisible by any
    // basis element's; the representation follows every step.
    auto top_reduce = [&](Tracked t, const std::vector<Tracked>& basis) {
        std::size_t steps = 0;
        while (!t.f.is_zero()) {
            if ((++steps & 0x3f) == 0) detail::check_stop(opts);
            const Term lt = t.f.leading_term();
            const Tracked* hit = nullptr;
            for (const auto& b : basis)
                if (divides(b.f.leading_term().exps, lt.exps)) {
                    hit = &b;
                    break;
                }
            if (!hit) break;
            const Term& bl = hit->f.leading_term();
            const Polynomial q = Polynomial::monomial(ctx, lt.exps - bl.exps, lt.coeff / bl.coeff);
            t.f -= q * hit->f;
            for (std::size_t i = 0; i < m; ++i) t.rep[i] -= q * hit->rep[i];
        }
        return t;
    };

    std::vector<Tracked> basis;
    for (std::size_t i = 0; i < m; ++i) {
        Tracked t{gens[i].embed(ctx), std::vector<Polynomial>(m, Polynomial(ctx))};
        t.rep[i] = Polynomial::constant(ctx, Rational(1));
        if (t.f.is_zero()) continue;
        if (t.f.is_constant()) return scaled(std::move(t)).rep;
        basis.push_back(scaled(std::move(t)));
    }
    if (basis.empty()) return std::nullopt;

    std::deque<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < basis.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pending.emplace_back(i, j);
    while (!pending.empty()) {
        detail::check_stop(opts);
        const auto [i, j] = pending.front();
        pending.pop_front();
        const Exponents& li = basis[i].f.leading_term().exps;
        const Exponents& lj = basis[j].f.leading_term().exps;
        if (coprime(li, lj)) continue;
        const Exponents l = lcm(li, lj);
        if (total_degree(l) > limits.max_degree)
            throw ResourceError("S-polynomial exceeds total degree limit of " + std::to_string(limits.max_degree));
        const Polynomial ui = Polynomial::monomial(ctx, l - li, Rational(1));
        const Polynomial uj = Polynomial::monomial(ctx, l - lj, Rational(1));
        Tracked s{ui * basis[i].f - uj * basis[j].f, std::vector<Polynomial>(m, Polynomial(ctx))};
        for (std::size_t k = 0; k < m; ++k) s.rep[k] = ui * basis[i].rep[k] - uj * basis[j].rep[k];
        Tracked r = top_reduce(std::move(s), basis);
        if (r.f.is_zero()) continue;
        if (r.f.is_constant()) return scaled(std::move(r)).rep;
        basis.push_back(scaled(std::move(r)));
        if (basis.size() > limits.max_terms) throw ResourceError("Groebner basis grew beyond the term limit");
        const std::size_t n = basis.size() - 1;
        for (std::size_t k = 0; k < n; ++k) pending.emplace_back(k, n);
    }
    return std::nullopt;
}

inline bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens,
                             const GroebnerOptions& opts = {}) {
    std::vector<Polynomial> all(gens);
    all.push_back(f);
    const Context ctx = detail::common_context_of(all);
    std::vector<Polynomial> embedded;
    for (const auto& g : gens) embedded.push_back(g.embed(ctx));
    return groebner_basis(embedded, MonomialOrder::grevlex(), opts).normal_form(f.embed(ctx), opts).is_zero();
}

/// Inverse of the polynomial map y -> (p_1(y), ..., p_n(y)), if that map is
/// an automorphism of affine n-space.
///
/// Tag variables t_1..t_n are appended after the y's and the reduced lex
/// basis of (t_i - p_i(y)) is computed. The map is invertible exactly when
/// that basis is {y_i - g_i(t)}; the g_i are returned over a context holding
/// only the tag variables.
inline std::optional<std::vector<Polynomial>> invert_polynomial_map(const std::vector<Polynomial>& ps,
                                                                    const GroebnerOptions& opts = {}) {
    const Context source = detail::common_context_of(ps);
    const std::size_t n = source->size();
    if (ps.size() != n)
        throw ShapeError("map inversion needs as many polynomials (" + std::to_string(ps.size()) +
                         ") as variables (" + std::to_string(n) + ")");
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < n; ++i) tags.push_back(fresh_name(*source, "t" + std::to_string(i + 1)));
    const Context joint = extend_context(source, tags);

    std::vector<Polynomial> ideal;
    for (std::size_t i = 0; i < n; ++i)
        ideal.push_back(Polynomial::variable(joint, n + i) - ps[i].embed(joint));
    const GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::lex(), opts);
    if (gb.size() != n) return std::nullopt;

    const Context tag_ctx = make_context(tags, source->limits());
    std::vector<std::optional<Polynomial>> inverse(n);
    for (const auto& g : gb.generators()) {
        // Expected shape: y_i - g_i(t), with y_i the lex-leading monomial.
        const Exponents lead = leading_exponents(g, MonomialOrder::lex());
        std::optional<std::size_t> yi;
        for (std::size_t k = 0; k < n; ++k) {
            if (lead[k] == 0) continue;
            if (yi || lead[k] != 1) return std::nullopt;
            yi = k;
        }
        if (!yi || total_degree(lead) != 1 || inverse[*yi]) return std::nullopt;
        std::vector<Term> tail;
        for (const auto& t : g.terms()) {
            if (t.exps == lead) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (t.exps[k] != 0) return std::nullopt;
            tail.push_back({Exponents(t.exps.begin() + static_cast<long>(n), t.exps.end()), -t.coeff});
        }
        inverse[*yi] = Polynomial(tag_ctx, std::move(tail));
    }
    std::vector<Polynomial> out;
    for (auto& g : inverse) out.push_back(std::move(*g));
    return out;
}

}  // namespace susp
