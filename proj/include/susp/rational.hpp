#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "susp/errors.hpp"

namespace susp {

/// Exact rational scalar. GMP keeps the fraction canonical: the
/// denominator is positive and coprime to the numerator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow(const Rational& base, long exponent) {
    Rational result(1);
    Rational b = base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                   : static_cast<unsigned long>(exponent);
    if (exponent < 0) b = 1 / b;
    while (e > 0) {
        if (e & 1u) result *= b;
        b *= b;
        e >>= 1u;
    }
    return result;
}

/// Exact rational k-th root of r, if one exists. For even k only the
/// nonnegative root is returned.
inline std::optional<Rational> rational_root(const Rational& r, unsigned long k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return r;
    if (sgn(r) == 0) return Rational(0);
    const bool negative = sgn(r) < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    Integer num = abs(r.get_num());
    Integer den = r.get_den();
    Integer num_root, den_root;
    if (mpz_root(num_root.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
    Rational root(num_root, den_root);
    root.canonicalize();
    if (negative) root = -root;
    return root;
}

}  // namespace susp
