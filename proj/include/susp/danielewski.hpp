#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "susp/univariate.hpp"

namespace susp {

/// The surface x z^n = f(y) in affine 3-space.
class DanielewskiSurface {
public:
    DanielewskiSurface(unsigned n, Polynomial f) : n_(n), f_(std::move(f)) {
        if (n_ < 1) throw DomainError("Danielewski exponent n must be positive");
        if (f_.is_constant()) throw DegreeError("Danielewski polynomial f must be nonconstant");
        var_ = *univariate_index(f_);
    }

    unsigned n() const noexcept { return n_; }
    const Polynomial& f() const noexcept { return f_; }
    std::size_t degree() const { return static_cast<std::size_t>(f_.degree(var_)); }
    std::vector<Rational> coefficients() const { return dense_coefficients(f_, var_); }

private:
    unsigned n_;
    Polynomial f_;
    std::size_t var_ = 0;
};

enum class DanielewskiLabel { AffinePlane, SL2_mod_T, HomogeneousNotSpace, NotHomogeneous };

inline const char* to_string(DanielewskiLabel l) {
    switch (l) {
        case DanielewskiLabel::AffinePlane: return "AffinePlane";
        case DanielewskiLabel::SL2_mod_T: return "SL2_mod_T";
        case DanielewskiLabel::HomogeneousNotSpace: return "HomogeneousNotSpace";
        case DanielewskiLabel::NotHomogeneous: return "NotHomogeneous";
    }
    return "?";
}

struct DanielewskiVerdict {
    bool homogeneous_variety = false;
    bool homogeneous_space = false;
    DanielewskiLabel label = DanielewskiLabel::NotHomogeneous;
    std::string reason;
};

inline DanielewskiVerdict classify(const DanielewskiSurface& s) {
    const std::size_t d = s.degree();
    if (d == 1) return {true, true, DanielewskiLabel::AffinePlane, "deg f = 1: the surface is the affine plane"};
    if (s.n() > 1)
        return {false, false, DanielewskiLabel::NotHomogeneous,
                "n = " + std::to_string(s.n()) + " > 1 and deg f = " + std::to_string(d) +
                    " >= 2: the locus z = 0 is invariant under all automorphisms"};
    if (!is_squarefree(s.f()))
        return {false, false, DanielewskiLabel::NotHomogeneous, "n = 1 and f has a multiple root: the surface is singular"};
    if (d == 2)
        return {true, true, DanielewskiLabel::SL2_mod_T, "n = 1, f squarefree of degree 2: the surface is SL2/T"};
    return {true, false, DanielewskiLabel::HomogeneousNotSpace,
            "n = 1, f squarefree of degree " + std::to_string(d) +
                " >= 3: homogeneous variety, not quasihomogeneous for any algebraic group"};
}

/// Rank of Pic for n = 1 and squarefree f: deg f - 1.
inline std::size_t picard_rank(const DanielewskiSurface& s) {
    if (s.n() != 1) throw UnsupportedCaseError("Picard rank is only known for n = 1");
    if (!is_squarefree(s.f())) throw UnsupportedCaseError("Picard rank is only known for squarefree f");
    return s.degree() - 1;
}

/// Certificate for f1(y) = a * f2(b*y + c) over the algebraic closure.
///
/// b is any root of b^root_degree = beta. The other two parameters follow
/// from b: a = a_scale * b^(-degree) and c = c_slope * b + c_shift. When
/// beta has a rational root, `direct` carries a fully rational triple.
struct IsomorphismWitness {
    struct Triple {
        Rational a, b, c;
    };

    std::size_t degree = 0;
    unsigned long root_degree = 1;
    Rational beta{1};
    Rational a_scale{1};
    Rational c_slope{0};
    Rational c_shift{0};
    std::optional<Triple> direct;

    Rational a_for(const Rational& b) const { return a_scale / pow(b, static_cast<long>(degree)); }
    Rational c_for(const Rational& b) const { return c_slope * b + c_shift; }
};

namespace detail {

// Coefficients of p(y + s).
inline std::vector<Rational> taylor_shift(const std::vector<Rational>& p, const Rational& s) {
    std::vector<Rational> out(p.size(), Rational(0));
    // Horner with the linear factor (y + s).
    for (std::size_t k = p.size(); k-- > 0;) {
        // out <- out * (y + s) + p[k]
        for (std::size_t i = out.size() - 1; i > 0; --i) out[i] = out[i - 1] + s * out[i];
        out[0] = s * out[0] + p[k];
    }
    return out;
}

/// Integers u with sum u_i m_i = gcd(m), by iterated extended Euclid.
inline std::vector<long> bezout_coefficients(const std::vector<long>& m) {
    std::vector<long> u(m.size(), 0);
    if (m.empty()) return u;
    long g = m[0];
    u[0] = 1;
    for (std::size_t i = 1; i < m.size(); ++i) {
        // Solve x*g + y*m[i] = gcd(g, m[i]).
        long old_r = g, r = m[i], old_x = 1, x = 0, old_y = 0, y = 1;
        while (r != 0) {
            const long q = old_r / r;
            std::tie(old_r, r) = std::pair{r, old_r - q * r};
            std::tie(old_x, x) = std::pair{x, old_x - q * x};
            std::tie(old_y, y) = std::pair{y, old_y - q * y};
        }
        for (std::size_t j = 0; j < i; ++j) u[j] *= old_x;
        u[i] = old_y;
        g = old_r;
    }
    return u;
}

struct RootForm {
    unsigned long root_degree;
    Rational beta;
};

/// Given ratios rho_i and exponents k_i, decides whether some b satisfies
/// b^k_i = rho_i for all i. On success b^g = beta with g = gcd(k). The
/// Bezout vector u must satisfy sum u_i (k_i / g) = 1.
inline std::optional<RootForm> root_form(const std::vector<Rational>& rho, const std::vector<long>& k,
                                         const std::vector<long>& u) {
    if (rho.empty()) return RootForm{1, Rational(1)};
    long g = 0;
    for (long ki : k) g = std::gcd(g, ki);
    Rational beta(1);
    for (std::size_t i = 0; i < rho.size(); ++i) beta *= pow(rho[i], u[i]);
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (pow(beta, k[i] / g) != rho[i]) return std::nullopt;
    return RootForm{static_cast<unsigned long>(g), beta};
}

struct Normalized {
    Rational lead;
    Rational shift;                 // sigma: m(y) = h(y + sigma)
    std::vector<Rational> depressed;  // h, monic with no y^(d-1) term
};

inline Normalized normalize_for_isomorphism(const std::vector<Rational>& f) {
    const std::size_t d = f.size() - 1;
    Normalized out;
    out.lead = f.back();
    std::vector<Rational> monic(f);
    for (auto& c : monic) c /= out.lead;
    out.shift = monic[d - 1] / static_cast<long>(d);
    out.depressed = taylor_shift(monic, -out.shift);
    return out;
}

}  // namespace detail

/// Decides whether two Danielewski surfaces are isomorphic, i.e. n1 = n2
/// and f1(y) = a f2(by + c) for some a, b != 0 and c over the algebraic
/// closure.
///
/// Both polynomials are made monic and depressed (the y^(d-1) coefficient
/// shifted away), which forces c; the remaining freedom is a scaling y -> by
/// that multiplies coefficient i by b^(d-i). Those constraints are solved
/// exactly in root form.
inline std::optional<IsomorphismWitness> isomorphic(const DanielewskiSurface& s1, const DanielewskiSurface& s2) {
    if (s1.n() != s2.n() || s1.degree() != s2.degree()) return std::nullopt;
    const std::size_t d = s1.degree();
    const auto n1 = detail::normalize_for_isomorphism(s1.coefficients());
    const auto n2 = detail::normalize_for_isomorphism(s2.coefficients());

    std::vector<Rational> rho;
    std::vector<long> k;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const bool nz1 = sgn(n1.depressed[i]) != 0, nz2 = sgn(n2.depressed[i]) != 0;
        if (nz1 != nz2) return std::nullopt;
        if (!nz1) continue;
        rho.push_back(n2.depressed[i] / n1.depressed[i]);
        k.push_back(static_cast<long>(d - i));
    }
    long g = 0;
    for (long ki : k) g = std::gcd(g, ki);
    std::vector<long> m;
    for (long ki : k) m.push_back(ki / g);
    const auto form = detail::root_form(rho, k, detail::bezout_coefficients(m));
    if (!form) return std::nullopt;

    IsomorphismWitness w;
    w.degree = d;
    w.root_degree = form->root_degree;
    w.beta = form->beta;
    w.a_scale = n1.lead / n2.lead;
    w.c_slope = n1.shift;
    w.c_shift = -n2.shift;
    if (auto b = rational_root(w.beta, w.root_degree)) w.direct = IsomorphismWitness::Triple{w.a_for(*b), *b, w.c_for(*b)};
    return w;
}

}  // namespace susp
