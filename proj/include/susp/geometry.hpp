#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "susp/groebner.hpp"
#include "susp/linalg.hpp"
#include "susp/resultant.hpp"

namespace susp {

/// Knobs shared by the decision procedures.
struct EngineOptions {
    GroebnerOptions groebner{};
    /// Largest minor order (codimension + 1) the tower check will enumerate.
    std::size_t max_minor_order = 4;
    /// Called after every unit-ideal decision with the generators and the
    /// verdict; lets callers audit verdicts against an independent oracle.
    std::function<void(const std::vector<Polynomial>&, bool)> on_unit_decision{};
};

/// Unit-ideal test that reports to the audit hook.
inline bool decide_unit(const std::vector<Polynomial>& gens, const EngineOptions& opts) {
    const bool unit = contains_unit(gens, opts.groebner);
    if (opts.on_unit_decision) opts.on_unit_decision(gens, unit);
    return unit;
}

/// Spec K[T_1..T_s]/(F_1..F_t). Affine space itself is the single generator 0.
struct AffineSchemePresentation {
    Context context;
    std::vector<Polynomial> generators;

    AffineSchemePresentation(Context ctx, std::vector<Polynomial> gens) : context(std::move(ctx)) {
        if (gens.empty()) throw ShapeError("a presentation needs at least one generator (use 0 for affine space)");
        for (auto& g : gens) generators.push_back(g.embed(context));
    }

    static AffineSchemePresentation affine_space(Context ctx) {
        Polynomial zero(ctx);
        return AffineSchemePresentation(std::move(ctx), {zero});
    }

    std::vector<Polynomial> nonzero_generators() const {
        std::vector<Polynomial> out;
        for (const auto& g : generators)
            if (!g.is_zero()) out.push_back(g);
        return out;
    }
};

/// Rows indexed by generators, columns by ambient variables.
struct JacobianMatrix {
    std::vector<std::vector<Polynomial>> entries;

    std::size_t rows() const noexcept { return entries.size(); }
    std::size_t cols() const noexcept { return entries.empty() ? 0 : entries.front().size(); }
    const Polynomial& at(std::size_t i, std::size_t j) const { return entries.at(i).at(j); }

    RationalMatrix evaluate_at(std::span<const Rational> point) const {
        RationalMatrix m;
        for (const auto& row : entries) {
            std::vector<Rational> r;
            for (const auto& e : row) r.push_back(susp::evaluate(e, point));
            m.push_back(std::move(r));
        }
        return m;
    }
};

inline JacobianMatrix jacobian(const std::vector<Polynomial>& gens, const Context& ctx) {
    JacobianMatrix j;
    for (const auto& g : gens) {
        std::vector<Polynomial> row;
        const Polynomial e = g.embed(ctx);
        for (std::size_t v = 0; v < ctx->size(); ++v) row.push_back(partial_derivative(e, v));
        j.entries.push_back(std::move(row));
    }
    return j;
}

inline JacobianMatrix jacobian(const AffineSchemePresentation& pres) {
    return jacobian(pres.generators, pres.context);
}

/// dim T_x = s - rank J(x) at a rational point of the scheme.
inline std::size_t tangent_dim_at(const AffineSchemePresentation& pres, std::span<const Rational> point) {
    for (const auto& g : pres.generators) {
        if (sgn(evaluate(g, point)) != 0)
            throw DomainError("point does not lie on the scheme: generator '" + to_string(g) + "' is nonzero there");
    }
    return pres.context->size() - rank(jacobian(pres).evaluate_at(point));
}

inline std::size_t tangent_dim_at(const AffineSchemePresentation& pres, const std::map<std::string, Rational>& point) {
    std::vector<Rational> coords;
    for (const auto& name : pres.context->names()) {
        auto it = point.find(name);
        if (it == point.end()) throw ContextError("no value assigned to variable '" + name + "'");
        coords.push_back(it->second);
    }
    return tangent_dim_at(pres, coords);
}

/// True iff f is a nonconstant function modulo the ideal of `gens`.
inline bool nonconstant_modulo(const Polynomial& f, const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
    std::vector<Polynomial> nz;
    for (const auto& g : gens)
        if (!g.is_zero()) nz.push_back(g.embed(f.context()));
    if (nz.empty()) return !f.is_constant();
    const GroebnerBasis gb = groebner_basis(nz, MonomialOrder::grevlex(), opts);
    // The empty variety carries no nonconstant functions.
    if (gb.is_unit()) return false;
    return !gb.normal_form(f, opts).is_constant();
}

/// Suspension {uv = f} over the scheme: the context gains u, v and the
/// generators gain uv - f.
inline AffineSchemePresentation suspension_ideal(const AffineSchemePresentation& pres, const Polynomial& f,
                                                 const std::string& u_name = "u", const std::string& v_name = "v",
                                                 const GroebnerOptions& opts = {}) {
    const Polynomial fe = f.embed(pres.context);
    if (!nonconstant_modulo(fe, pres.generators, opts))
        throw InvalidSuspensionError("suspension function '" + to_string(f) + "' is constant on the base");
    const Context ctx = extend_context(pres.context, {u_name, v_name});
    std::vector<Polynomial> gens;
    for (const auto& g : pres.nonzero_generators()) gens.push_back(g.embed(ctx));
    const std::size_t n = pres.context->size();
    gens.push_back(Polynomial::variable(ctx, n) * Polynomial::variable(ctx, n + 1) - fe.embed(ctx));
    return AffineSchemePresentation(ctx, std::move(gens));
}

/// Smoothness of the scheme Spec K[y]/(f): the ideal (f, df/dy_1, ...,
/// df/dy_n) must be the unit ideal. Repeated factors make it fail.
inline bool hypersurface_scheme_smooth(const Polynomial& f, const EngineOptions& opts = {}) {
    if (f.is_constant()) throw DegreeError("hypersurface smoothness needs a nonconstant polynomial");
    std::vector<Polynomial> gens{f};
    for (std::size_t i = 0; i < f.context()->size(); ++i) gens.push_back(partial_derivative(f, i));
    return decide_unit(gens, opts);
}

enum class DisjointMethod { Groebner, Resultant };

/// Whether {p = 0} and {q = 0} are disjoint over the algebraic closure.
///
/// The resultant route eliminates the first context variable. It only
/// applies when both operands have positive degree in that variable and at
/// least one of them has a constant leading coefficient there; otherwise the
/// two curves may meet at infinity and the resultant test is not decisive,
/// so MethodError is raised and callers should use the Groebner route.
inline bool disjoint_hypersurfaces(const Polynomial& p, const Polynomial& q, DisjointMethod method,
                                   const EngineOptions& opts = {}) {
    if (p.is_constant() || q.is_constant()) throw DegreeError("disjointness needs nonconstant polynomials");
    const Context ctx = common_context(p.context(), q.context());
    const Polynomial a = p.embed(ctx), b = q.embed(ctx);
    if (method == DisjointMethod::Groebner) return decide_unit({a, b}, opts);

    constexpr std::size_t var = 0;
    if (a.degree(var) < 1 || b.degree(var) < 1)
        throw MethodError("resultant method needs positive degree in '" + ctx->name(var) + "'");
    auto lead_constant = [&](const Polynomial& x) {
        return detail::split_by_variable(x, var).back().is_constant();
    };
    if (!lead_constant(a) && !lead_constant(b))
        throw MethodError("resultant method needs a constant leading coefficient in '" + ctx->name(var) + "'");
    const Polynomial r = resultant(a, b, var);
    return r.is_constant() && !r.is_zero();
}

/// Iterated suspension over affine space A^m.
///
/// Level i (1-based) lives over the base variables plus the suspension
/// pairs (u_1, v_1), ..., (u_{i-1}, v_{i-1}); its function f_i must be
/// nonconstant on Y_i = {u_j v_j = f_j, j < i}.
class SuspensionTower {
public:
    SuspensionTower(std::vector<std::string> base_names, std::vector<Polynomial> levels,
                    std::vector<std::pair<std::string, std::string>> suspension_names = {},
                    Limits limits = {}, const GroebnerOptions& opts = {}) {
        if (base_names.empty()) throw ShapeError("tower base must be affine space of dimension >= 1");
        if (suspension_names.empty()) {
            for (std::size_t i = 1; i <= levels.size(); ++i)
                suspension_names.emplace_back("u" + std::to_string(i), "v" + std::to_string(i));
        }
        if (suspension_names.size() != levels.size())
            throw ShapeError("tower needs one pair of suspension variable names per level");
        contexts_.push_back(make_context(base_names, limits));
        for (const auto& [u, v] : suspension_names)
            contexts_.push_back(extend_context(contexts_.back(), {u, v}));
        base_dim_ = base_names.size();
        suspension_names_ = std::move(suspension_names);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const Context& ctx = contexts_[i];
            if (!ctx->contains_all(*levels[i].context()))
                throw ContextError("level " + std::to_string(i + 1) + " function uses variables outside level " +
                                   std::to_string(i + 1));
            levels_.push_back(levels[i].embed(ctx));
        }
        for (std::size_t i = 1; i <= levels_.size(); ++i) {
            if (!nonconstant_modulo(levels_[i - 1], level_generators(i), opts))
                throw InvalidSuspensionError("level " + std::to_string(i) + " function '" + to_string(levels_[i - 1]) +
                                             "' is constant on Y_" + std::to_string(i));
        }
    }

    std::size_t base_dim() const noexcept { return base_dim_; }
    /// Number of suspension functions (k - 1 for Y_k).
    std::size_t level_count() const noexcept { return levels_.size(); }
    /// Dimension of the top variety Y_k.
    std::size_t dim() const noexcept { return base_dim_ + levels_.size(); }

    /// f_i, 1-based.
    const Polynomial& level_function(std::size_t i) const { return levels_.at(i - 1); }
    /// Ambient context of Y_i, 1 <= i <= k.
    const Context& level_context(std::size_t i) const { return contexts_.at(i - 1); }
    const Context& top_context() const { return contexts_.back(); }
    const std::vector<std::pair<std::string, std::string>>& suspension_names() const noexcept {
        return suspension_names_;
    }

    /// Generators u_j v_j - f_j (j < i) of the radical ideal of Y_i, over
    /// Y_i's context. Empty for the base.
    std::vector<Polynomial> level_generators(std::size_t i) const {
        const Context& ctx = level_context(i);
        std::vector<Polynomial> gens;
        for (std::size_t j = 1; j < i; ++j) {
            const std::size_t u = base_dim_ + 2 * (j - 1);
            gens.push_back(Polynomial::variable(ctx, u) * Polynomial::variable(ctx, u + 1) -
                           levels_[j - 1].embed(ctx));
        }
        return gens;
    }

    AffineSchemePresentation presentation(std::size_t i) const {
        auto gens = level_generators(i);
        if (gens.empty()) gens.push_back(Polynomial(level_context(i)));
        return AffineSchemePresentation(level_context(i), std::move(gens));
    }

private:
    std::size_t base_dim_ = 0;
    std::vector<Context> contexts_;
    std::vector<Polynomial> levels_;
    std::vector<std::pair<std::string, std::string>> suspension_names_;
};

/// Singular-locus ideal of Z_i = Spec K[Y_i]/(f_i) with Y_i of codimension
/// c = i - 1: the level generators, f_i and all (c+1)-minors of their
/// Jacobian. Z_i is smooth iff this is the unit ideal (given Y_i smooth).
inline std::vector<Polynomial> level_singularity_ideal(const SuspensionTower& tower, std::size_t i,
                                                       const EngineOptions& opts = {}) {
    const Context& ctx = tower.level_context(i);
    std::vector<Polynomial> gens = tower.level_generators(i);
    gens.push_back(tower.level_function(i));
    const std::size_t order = gens.size();
    if (order > opts.max_minor_order)
        throw ResourceError("level " + std::to_string(i) + " needs minors of order " + std::to_string(order) +
                            ", above the cap of " + std::to_string(opts.max_minor_order));
    const JacobianMatrix jac = jacobian(gens, ctx);
    std::vector<Polynomial> ideal = gens;
    for (const auto& cols : combinations(ctx->size(), order)) {
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 0; r < order; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t c : cols) row.push_back(jac.at(r, c));
            sub.push_back(std::move(row));
        }
        Polynomial minor = determinant(sub, ctx);
        if (!minor.is_zero()) ideal.push_back(std::move(minor));
    }
    return ideal;
}

/// Smoothness of Z_i, assuming levels below i were already verified.
inline bool level_scheme_smooth_unchecked(const SuspensionTower& tower, std::size_t i, const EngineOptions& opts) {
    return decide_unit(level_singularity_ideal(tower, i, opts), opts);
}

/// Enforces the inductive order of the tower check: level i may only be
/// examined after levels 1..i-1 were examined and found smooth.
class TowerChecker {
public:
    explicit TowerChecker(const SuspensionTower& tower, EngineOptions opts = {})
        : tower_(tower), opts_(std::move(opts)) {}

    bool check_level(std::size_t i) {
        if (i < 1 || i > tower_.level_count()) throw ShapeError("tower level index out of range");
        if (i > verified_ + 1)
            throw ProtocolError("level " + std::to_string(i) + " examined before level " + std::to_string(verified_ + 1) +
                                " was verified smooth");
        if (i <= verified_) return true;
        if (failed_ && *failed_ == i) return false;
        if (failed_) throw ProtocolError("level " + std::to_string(*failed_) + " already failed; higher levels are undefined");
        const bool ok = level_scheme_smooth_unchecked(tower_, i, opts_);
        if (ok) {
            verified_ = i;
        } else {
            failed_ = i;
        }
        return ok;
    }

    std::size_t verified_levels() const noexcept { return verified_; }

private:
    const SuspensionTower& tower_;
    EngineOptions opts_;
    std::size_t verified_ = 0;
    std::optional<std::size_t> failed_;
};

/// Single-level check; runs levels 1..i-1 first through a fresh checker
/// and raises ProtocolError if one of them is not smooth.
inline bool tower_level_scheme_smooth(const SuspensionTower& tower, std::size_t i, const EngineOptions& opts = {}) {
    TowerChecker checker(tower, opts);
    for (std::size_t j = 1; j < i; ++j) {
        if (!checker.check_level(j))
            throw ProtocolError("level " + std::to_string(j) + " is not smooth; level " + std::to_string(i) +
                                " is undefined");
    }
    return checker.check_level(i);
}

struct TowerSmoothness {
    bool smooth = true;
    std::optional<std::size_t> first_failing_level;
};

inline TowerSmoothness tower_smooth(const SuspensionTower& tower, const EngineOptions& opts = {}) {
    TowerChecker checker(tower, opts);
    for (std::size_t i = 1; i <= tower.level_count(); ++i) {
        if (!checker.check_level(i)) return {false, i};
    }
    return {};
}

/// Affine space is smooth, flexible and irreducible, so a tower over it is a
/// homogeneous variety exactly when it is smooth.
inline bool tower_homogeneous(const SuspensionTower& tower, const EngineOptions& opts = {}) {
    return tower_smooth(tower, opts).smooth;
}

}  // namespace susp
