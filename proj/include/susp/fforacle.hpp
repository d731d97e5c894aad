#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "susp/groebner.hpp"

namespace susp {

struct OracleLimits {
    std::size_t max_variables = 4;
    std::uint64_t max_evaluations = 10'000'000;
};

inline std::vector<std::uint64_t> default_oracle_primes() { return {5, 7, 11, 13}; }

struct ModularTerm {
    Exponents exps;
    std::uint64_t coeff;
};

/// Generators reduced coefficient-wise into F_p.
struct ModularSystem {
    std::uint64_t prime = 0;
    std::size_t variables = 0;
    std::vector<std::vector<ModularTerm>> generators;
    /// Terms whose coefficient vanished mod p.
    std::size_t vanished_terms = 0;
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
        e >>= 1u;
    }
    return r;
}

}  // namespace detail

/// Reduces the generators mod p. A prime dividing some coefficient
/// denominator is rejected rather than patched.
inline ModularSystem reduce_mod_p(const std::vector<Polynomial>& gens, std::uint64_t p,
                                  const OracleLimits& limits = {}) {
    if (!detail::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    const Context ctx = detail::common_context_of(gens);
    if (ctx->size() > limits.max_variables)
        throw ResourceError("oracle supports at most " + std::to_string(limits.max_variables) + " variables, got " +
                            std::to_string(ctx->size()));
    ModularSystem sys;
    sys.prime = p;
    sys.variables = ctx->size();
    const Integer modulus(static_cast<unsigned long>(p));
    for (const auto& g : gens) {
        std::vector<ModularTerm> terms;
        const Polynomial embedded = g.embed(ctx);
        for (const auto& t : embedded.terms()) {
            const Integer den = t.coeff.get_den();
            if (mpz_divisible_p(den.get_mpz_t(), modulus.get_mpz_t()))
                throw PrimeRejectedError("prime " + std::to_string(p) + " divides the denominator of coefficient " +
                                         t.coeff.get_str());
            Integer num_mod, den_mod;
            mpz_mod(num_mod.get_mpz_t(), t.coeff.get_num().get_mpz_t(), modulus.get_mpz_t());
            mpz_mod(den_mod.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
            const std::uint64_t n = num_mod.get_ui(), d = den_mod.get_ui();
            const std::uint64_t c = n * detail::mod_pow(d, p - 2, p) % p;
            if (c == 0) {
                ++sys.vanished_terms;
                continue;
            }
            terms.push_back({t.exps, c});
        }
        sys.generators.push_back(std::move(terms));
    }
    return sys;
}

/// Exact number of points of F_p^n where every generator vanishes.
inline std::uint64_t count_common_zeros(const ModularSystem& sys, const OracleLimits& limits = {}) {
    const std::uint64_t p = sys.prime;
    const std::size_t n = sys.variables;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (total > limits.max_evaluations / p)
            throw ResourceError("exhaustive search over " + std::to_string(p) + "^" + std::to_string(n) +
                                " points exceeds the evaluation budget");
        total *= p;
    }
    std::uint32_t max_exp = 0;
    for (const auto& g : sys.generators)
        for (const auto& t : g)
            for (auto e : t.exps) max_exp = std::max(max_exp, e);
    // powers[v][e] = v^e mod p
    std::vector<std::vector<std::uint64_t>> powers(p, std::vector<std::uint64_t>(max_exp + 1));
    for (std::uint64_t v = 0; v < p; ++v) {
        powers[v][0] = 1;
        for (std::uint32_t e = 1; e <= max_exp; ++e) powers[v][e] = powers[v][e - 1] * v % p;
    }
    std::vector<std::uint64_t> point(n, 0);
    std::uint64_t zeros = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        bool all_vanish = true;
        for (const auto& g : sys.generators) {
            std::uint64_t acc = 0;
            for (const auto& t : g) {
                std::uint64_t v = t.coeff;
                for (std::size_t i = 0; i < n; ++i) v = v * powers[point[i]][t.exps[i]] % p;
                acc = (acc + v) % p;
            }
            if (acc != 0) {
                all_vanish = false;
                break;
            }
        }
        if (all_vanish) ++zeros;
        for (std::size_t i = 0; i < n; ++i) {
            if (++point[i] < p) break;
            point[i] = 0;
        }
    }
    return zeros;
}

struct PrimeCount {
    std::uint64_t prime = 0;
    std::optional<std::uint64_t> zeros;  // empty when the prime was rejected
};

struct EmptinessCrossCheck {
    bool unit = false;
    std::vector<PrimeCount> counts;
    /// False when a unit-ideal verdict meets a common zero mod a good prime,
    /// or when no cofactor certificate exists for it; either is a bug.
    bool consistent = true;
    /// Nonunit verdict with zeros found mod at least one prime.
    bool corroborated = false;
    /// Unit verdicts only: a cofactor certificate was computed within limits.
    bool certified = false;
};

namespace detail {

inline bool divides_some_denominator(const std::vector<Polynomial>& polys, std::uint64_t p) {
    const Integer modulus(static_cast<unsigned long>(p));
    for (const auto& f : polys)
        for (const auto& t : f.terms())
            if (mpz_divisible_p(t.coeff.get_den().get_mpz_t(), modulus.get_mpz_t())) return true;
    return false;
}

}  // namespace detail

/// Audits a unit-ideal verdict that was already computed. For a unit verdict
/// a certificate 1 = sum h_i f_i is computed first; a prime is good when it
/// divides no denominator of the f_i or the h_i, and then the identity
/// survives reduction mod p, so no common zero may exist there. Primes that
/// only avoid the input denominators are not enough: {5x, x - 1} is the unit
/// ideal over Q yet has the zero x = 1 mod 5. A nonunit verdict asserts
/// nothing; zeros mod p only corroborate it.
inline EmptinessCrossCheck check_unit_verdict(const std::vector<Polynomial>& gens, bool unit,
                                              const std::vector<std::uint64_t>& primes,
                                              const OracleLimits& limits = {}) {
    EmptinessCrossCheck out;
    out.unit = unit;
    std::optional<std::vector<Polynomial>> certificate;
    if (unit) {
        try {
            certificate = unit_certificate(gens);
            if (certificate) {
                const Context ctx = detail::common_context_of(gens);
                Polynomial sum(ctx);
                for (std::size_t i = 0; i < gens.size(); ++i) sum += (*certificate)[i] * gens[i].embed(ctx);
                out.certified = sum == Polynomial::constant(ctx, Rational(1));
            }
            if (!out.certified) {
                out.consistent = false;
                certificate.reset();
            }
        } catch (const ResourceError&) {
            // Too large to certify: no prime can be trusted, so none is audited.
        }
    }
    for (auto p : primes) {
        PrimeCount pc{p, std::nullopt};
        if (unit && (!certificate || detail::divides_some_denominator(*certificate, p))) {
            out.counts.push_back(pc);
            continue;
        }
        try {
            pc.zeros = count_common_zeros(reduce_mod_p(gens, p, limits), limits);
        } catch (const PrimeRejectedError&) {
            out.counts.push_back(pc);
            continue;
        }
        if (unit && *pc.zeros != 0) out.consistent = false;
        if (!unit && *pc.zeros != 0) out.corroborated = true;
        out.counts.push_back(pc);
    }
    return out;
}

inline EmptinessCrossCheck cross_check_emptiness(const std::vector<Polynomial>& gens,
                                                 const std::vector<std::uint64_t>& primes,
                                                 const OracleLimits& limits = {}, const GroebnerOptions& opts = {}) {
    return check_unit_verdict(gens, contains_unit(gens, opts), primes, limits);
}

}  // namespace susp
