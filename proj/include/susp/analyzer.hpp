#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "susp/danielewski.hpp"
#include "susp/fforacle.hpp"
#include "susp/geometry.hpp"

namespace susp {

/// Fixed set of decision rules a report may cite.
enum class Rule {
    SuspSmoothCriterion,
    IterSuspHomog,
    DanielewskiThmI,
    DanielewskiThmII,
    PicRankDanielewski,
    PicRankSuspension,
    PicDimObstruction,
    VariableWitness,
};

inline const char* rule_id(Rule r) {
    switch (r) {
        case Rule::SuspSmoothCriterion: return "susp-smooth-criterion";
        case Rule::IterSuspHomog: return "iter-susp-homog";
        case Rule::DanielewskiThmI: return "danielewski-thm-i";
        case Rule::DanielewskiThmII: return "danielewski-thm-ii";
        case Rule::PicRankDanielewski: return "pic-rank-danielewski";
        case Rule::PicRankSuspension: return "pic-rank-suspension";
        case Rule::PicDimObstruction: return "pic-dim-obstruction";
        case Rule::VariableWitness: return "variable-witness";
    }
    return "?";
}

struct Reason {
    std::string field;
    Rule rule;
    std::string detail;
};

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OracleSummary {
    std::vector<std::uint64_t> primes;
    std::size_t audited = 0;
    std::size_t skipped = 0;
    bool consistent = true;
};

struct Report {
    std::string kind;
    std::size_t dim = 0;
    std::optional<bool> smooth;
    std::optional<bool> homogeneous_variety;
    std::optional<long> picard_rank;
    std::optional<bool> homogeneous_space;
    std::optional<std::string> label;
    std::optional<std::size_t> first_failing_level;
    std::vector<Reason> reasons;
    std::vector<std::string> assumptions;
    std::vector<Check> checks;
    std::optional<OracleSummary> oracle;

    bool has_reason(const std::string& field) const {
        for (const auto& r : reasons)
            if (r.field == field) return true;
        return false;
    }

    /// Throws InconsistencyError if the report breaks its invariants.
    void validate() const {
        if (homogeneous_space == true && homogeneous_variety != true)
            throw InconsistencyError("report claims a homogeneous space that is not a homogeneous variety");
        auto need = [&](bool known, const char* field) {
            if (known && !has_reason(field))
                throw InconsistencyError(std::string("report field '") + field + "' has no reason");
        };
        need(smooth.has_value(), "smooth");
        need(homogeneous_variety.has_value(), "homogeneous_variety");
        need(picard_rank.has_value(), "picard_rank");
        need(homogeneous_space.has_value(), "homogeneous_space");
    }
};

/// uv = p_0(y) ... p_d(y) over affine space with coordinates y.
struct FactoredSuspension {
    Context context;
    std::vector<Polynomial> factors;
    std::optional<std::vector<Polynomial>> variable_witness;
    bool irreducibility_attested = false;

    FactoredSuspension(Context ctx, std::vector<Polynomial> fs, std::optional<std::vector<Polynomial>> witness,
                       bool attested)
        : context(std::move(ctx)), variable_witness(std::move(witness)), irreducibility_attested(attested) {
        if (context->size() < 1) throw ShapeError("factored suspension needs at least one base variable");
        if (fs.size() < 2) throw ShapeError("factored suspension needs p_0 and at least one more factor");
        for (auto& f : fs) {
            if (f.is_constant()) throw DegreeError("factor '" + to_string(f) + "' is constant");
            factors.push_back(f.embed(context));
        }
        if (variable_witness)
            for (auto& w : *variable_witness) w = w.embed(context);
    }

    std::size_t base_dim() const { return context->size(); }
    /// d, the number of factors beyond p_0.
    std::size_t d() const { return factors.size() - 1; }
    /// dim X = n for the hypersurface in A^{n+1}.
    std::size_t dim() const { return base_dim() + 1; }

    Polynomial product() const {
        Polynomial f = Polynomial::constant(context, Rational(1));
        for (const auto& p : factors) f *= p;
        return f;
    }
};

using VarietySpec = std::variant<SuspensionTower, DanielewskiSurface, FactoredSuspension>;

struct PicardObstructionResult {
    long rank = 0;
    long dim = 0;
    bool obstructed = false;
};

/// An affine homogeneous space has rk Pic <= dim, so rank > dim rules it out.
inline PicardObstructionResult picard_obstruction(long rank, long dim) {
    if (rank < 0) throw DomainError("Picard rank must be nonnegative");
    if (dim < 1) throw DomainError("dimension must be positive");
    return {rank, dim, rank > dim};
}

enum class WitnessStatus { Absent, Verified, Invalid };

struct FactoredVerification {
    bool smooth = false;
    bool homogeneous_variety = false;
    std::optional<long> picard_rank;
    std::optional<bool> homogeneous_space;
    WitnessStatus witness = WitnessStatus::Absent;
    std::string witness_detail;
    std::optional<std::pair<std::size_t, std::size_t>> proportional_pair;
    std::vector<Check> checks;
};

namespace detail {

inline bool proportional(const Polynomial& a, const Polynomial& b) { return a.monic() == b.monic(); }

inline std::string factor_label(std::size_t i) { return "p_" + std::to_string(i); }

inline FactoredVerification verify_factored(const FactoredSuspension& fs, const EngineOptions& opts) {
    FactoredVerification out;
    const auto& p = fs.factors;
    const std::size_t count = p.size();

    // (1) pairwise distinctness up to scalars
    bool distinct = true;
    for (std::size_t i = 0; i < count && distinct; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            if (proportional(p[i], p[j])) {
                distinct = false;
                out.proportional_pair = {i, j};
                out.checks.push_back({"distinct", false, factor_label(i) + " and " + factor_label(j) + " are proportional"});
                break;
            }
        }
    }
    if (distinct) out.checks.push_back({"distinct", true, "no two factors are proportional"});

    // (2) each component smooth
    bool components_smooth = true;
    for (std::size_t i = 0; i < count; ++i) {
        const bool ok = hypersurface_scheme_smooth(p[i], opts);
        components_smooth = components_smooth && ok;
        out.checks.push_back({"smooth " + factor_label(i), ok,
                              ok ? "{" + factor_label(i) + " = 0} is smooth"
                                 : "{" + factor_label(i) + " = 0} has a singular point"});
    }

    // (3) pairwise disjointness; the resultant route cross-checks Groebner when it applies
    bool disjoint = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const bool by_groebner = disjoint_hypersurfaces(p[i], p[j], DisjointMethod::Groebner, opts);
            std::string method = "groebner";
            try {
                const bool by_resultant = disjoint_hypersurfaces(p[i], p[j], DisjointMethod::Resultant, opts);
                if (by_resultant != by_groebner)
                    throw InconsistencyError("Groebner and resultant disagree on disjointness of " + factor_label(i) +
                                             " and " + factor_label(j));
                method = "groebner+resultant";
            } catch (const MethodError&) {
            }
            disjoint = disjoint && by_groebner;
            out.checks.push_back({"disjoint " + factor_label(i) + "," + factor_label(j), by_groebner,
                                  (by_groebner ? "no common zero (" : "common zero exists (") + method + ")"});
        }
    }

    // (4) factor-free smoothness of Spec K[y]/(prod p_i)
    const bool product_smooth = hypersurface_scheme_smooth(fs.product(), opts);
    out.checks.push_back({"smooth product", product_smooth,
                          product_smooth ? "(f, df/dy) is the unit ideal" : "(f, df/dy) has a common zero"});
    if (product_smooth != (distinct && components_smooth && disjoint))
        throw InconsistencyError("factor-free smoothness disagrees with the componentwise checks");
    out.smooth = product_smooth;
    out.homogeneous_variety = product_smooth;

    // (5) variable witness
    if (fs.variable_witness) {
        const auto& w = *fs.variable_witness;
        if (w.size() + 1 != fs.base_dim()) {
            out.witness = WitnessStatus::Invalid;
            out.witness_detail = "witness has " + std::to_string(w.size()) + " polynomials, expected " +
                                 std::to_string(fs.base_dim() - 1);
        } else {
            std::vector<Polynomial> coords{p[0]};
            coords.insert(coords.end(), w.begin(), w.end());
            if (invert_polynomial_map(coords, opts.groebner)) {
                out.witness = WitnessStatus::Verified;
                out.witness_detail = "p_0 with the witness is invertible, so p_0 is a variable";
            } else {
                out.witness = WitnessStatus::Invalid;
                out.witness_detail = "p_0 with the witness is not a polynomial automorphism";
            }
        }
        out.checks.push_back({"variable witness", out.witness == WitnessStatus::Verified, out.witness_detail});
    }

    if (out.smooth && out.witness == WitnessStatus::Verified && fs.irreducibility_attested) {
        out.picard_rank = static_cast<long>(fs.d());
        if (picard_obstruction(*out.picard_rank, static_cast<long>(fs.dim())).obstructed) out.homogeneous_space = false;
    }
    if (!out.smooth) out.homogeneous_space = false;
    return out;
}

}  // namespace detail

/// Runs distinctness, smoothness, disjointness, factor-free smoothness and
/// witness checks. Throws DistinctnessError on proportional factors and
/// WitnessInvalidError when the supplied witness does not invert.
inline FactoredVerification verify_factored_suspension(const FactoredSuspension& fs, const EngineOptions& opts = {}) {
    FactoredVerification v = detail::verify_factored(fs, opts);
    if (v.proportional_pair)
        throw DistinctnessError("factors " + detail::factor_label(v.proportional_pair->first) + " and " +
                                detail::factor_label(v.proportional_pair->second) + " are proportional");
    if (v.witness == WitnessStatus::Invalid) throw WitnessInvalidError(v.witness_detail);
    return v;
}

struct AnalyzeOptions {
    EngineOptions engine{};
    bool oracle_check = false;
    std::vector<std::uint64_t> oracle_primes = default_oracle_primes();
    OracleLimits oracle_limits{};
};

namespace detail {

inline void add(Report& r, const char* field, Rule rule, std::string detail) {
    r.reasons.push_back({field, rule, std::move(detail)});
}

inline void analyze_tower(const SuspensionTower& tower, const EngineOptions& opts, Report& r) {
    r.kind = "tower";
    r.dim = tower.dim();
    const std::size_t k = tower.level_count() + 1;
    try {
        const TowerSmoothness s = tower_smooth(tower, opts);
        r.smooth = s.smooth;
        r.homogeneous_variety = s.smooth;
        r.first_failing_level = s.first_failing_level;
        for (std::size_t i = 1; i < k; ++i) {
            const bool ok = !s.first_failing_level || i < *s.first_failing_level;
            if (s.first_failing_level && i > *s.first_failing_level) break;
            r.checks.push_back({"Z_" + std::to_string(i) + " smooth", ok,
                                ok ? "level ideal, f_" + std::to_string(i) + " and maximal minors have no common zero"
                                   : "common zero of level ideal, f_" + std::to_string(i) + " and maximal minors"});
        }
        if (s.smooth) {
            add(r, "smooth", Rule::SuspSmoothCriterion,
                "all " + std::to_string(k - 1) + " schemes Z_i are smooth over the smooth base A^" +
                    std::to_string(tower.base_dim()));
            add(r, "homogeneous_variety", Rule::IterSuspHomog,
                "smooth iterated suspension over the flexible base A^" + std::to_string(tower.base_dim()));
        } else {
            add(r, "smooth", Rule::SuspSmoothCriterion,
                "Z_" + std::to_string(*s.first_failing_level) + " is singular; first failing level: " +
                    std::to_string(*s.first_failing_level));
            add(r, "homogeneous_variety", Rule::IterSuspHomog, "a homogeneous variety is smooth; Y_" +
                                                                     std::to_string(k) + " is not");
            r.homogeneous_space = false;
            add(r, "homogeneous_space", Rule::IterSuspHomog, "not a homogeneous variety, hence not a homogeneous space");
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Resource && e.kind() != ErrorKind::Cancelled) throw;
        add(r, "smooth", Rule::SuspSmoothCriterion, std::string("undecided: ") + e.what());
    }
}

inline void analyze_danielewski(const DanielewskiSurface& s, const EngineOptions& opts, Report& r) {
    r.kind = "danielewski";
    r.dim = 2;
    const DanielewskiVerdict v = classify(s);
    r.label = to_string(v.label);

    try {
        const Context ctx = make_context({"x", "y", "z"}, s.f().context()->limits());
        // f is univariate, so sending every variable of its context to y is safe.
        const Polynomial fy = substitute(s.f(), std::vector<Polynomial>(s.f().context()->size(),
                                                                        Polynomial::variable(ctx, "y")));
        const Polynomial eq = Polynomial::variable(ctx, "x") * Polynomial::variable(ctx, "z").pow(s.n()) - fy;
        r.smooth = hypersurface_scheme_smooth(eq, opts);
        const std::string lhs = s.n() == 1 ? "x*z" : "x*z^" + std::to_string(s.n());
        add(r, "smooth", Rule::SuspSmoothCriterion,
            *r.smooth ? lhs + " - f(y) and its partials have no common zero" : lhs + " - f(y) has a singular point");
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Resource && e.kind() != ErrorKind::Cancelled) throw;
        add(r, "smooth", Rule::SuspSmoothCriterion, std::string("undecided: ") + e.what());
    }

    r.homogeneous_variety = v.homogeneous_variety;
    add(r, "homogeneous_variety", Rule::DanielewskiThmI, v.reason);
    r.homogeneous_space = v.homogeneous_space;
    add(r, "homogeneous_space", Rule::DanielewskiThmII, v.reason);

    if (s.n() == 1 && is_squarefree(s.f())) {
        r.picard_rank = static_cast<long>(picard_rank(s));
        add(r, "picard_rank", Rule::PicRankDanielewski,
            "Pic = Z^d with d = deg f - 1 = " + std::to_string(*r.picard_rank));
        const auto ob = picard_obstruction(*r.picard_rank, 2);
        if (ob.obstructed)
            add(r, "homogeneous_space", Rule::PicDimObstruction,
                "rank " + std::to_string(ob.rank) + " > dim " + std::to_string(ob.dim));
    }
}

inline void analyze_factored(const FactoredSuspension& fs, const EngineOptions& opts, Report& r) {
    r.kind = "factored_suspension";
    r.dim = fs.dim();
    if (fs.irreducibility_attested) r.assumptions.push_back("factors p_0..p_d are irreducible (user attestation)");
    FactoredVerification v;
    try {
        v = verify_factored(fs, opts);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Resource && e.kind() != ErrorKind::Cancelled) throw;
        add(r, "smooth", Rule::SuspSmoothCriterion, std::string("undecided: ") + e.what());
        return;
    }
    r.checks = v.checks;
    r.smooth = v.smooth;
    r.homogeneous_variety = v.homogeneous_variety;
    if (v.smooth) {
        add(r, "smooth", Rule::SuspSmoothCriterion,
            "factors distinct, components smooth and pairwise disjoint; Spec K[y]/(f) is smooth");
        add(r, "homogeneous_variety", Rule::IterSuspHomog,
            "smooth suspension over the flexible base A^" + std::to_string(fs.base_dim()));
    } else {
        std::string why = "Spec K[y]/(f) is singular";
        if (v.proportional_pair)
            why += " (" + factor_label(v.proportional_pair->first) + " and " +
                   factor_label(v.proportional_pair->second) + " are proportional)";
        add(r, "smooth", Rule::SuspSmoothCriterion, why);
        add(r, "homogeneous_variety", Rule::IterSuspHomog, "a homogeneous variety is smooth; X is not");
        add(r, "homogeneous_space", Rule::IterSuspHomog, "not a homogeneous variety, hence not a homogeneous space");
    }
    r.homogeneous_space = v.homogeneous_space;

    switch (v.witness) {
        case WitnessStatus::Absent:
            add(r, "picard_rank", Rule::VariableWitness, "no variable witness supplied; p_0 not certified as a variable");
            break;
        case WitnessStatus::Invalid:
            add(r, "picard_rank", Rule::VariableWitness, v.witness_detail);
            break;
        case WitnessStatus::Verified:
            add(r, "picard_rank", Rule::VariableWitness, v.witness_detail);
            break;
    }
    if (v.witness == WitnessStatus::Verified && v.smooth && !fs.irreducibility_attested)
        add(r, "picard_rank", Rule::PicRankSuspension, "irreducibility of the factors not attested");
    if (v.picard_rank) {
        add(r, "picard_rank", Rule::PicRankSuspension, "Pic = Z^d with d = " + std::to_string(*v.picard_rank));
        r.picard_rank = v.picard_rank;
        const auto ob = picard_obstruction(*v.picard_rank, static_cast<long>(fs.dim()));
        if (ob.obstructed)
            add(r, "homogeneous_space", Rule::PicDimObstruction,
                "rank " + std::to_string(ob.rank) + " > dim " + std::to_string(ob.dim));
    }
}

}  // namespace detail

/// Dispatches a variety description to the matching decision procedure and
/// assembles the report. With `oracle_check`, every unit-ideal verdict in at
/// most four variables is audited by exhaustive search mod small primes; a
/// contradiction raises InconsistencyError.
inline Report analyze(const VarietySpec& spec, const AnalyzeOptions& options = {}) {
    Report r;
    EngineOptions engine = options.engine;
    OracleSummary oracle;
    oracle.primes = options.oracle_primes;
    if (options.oracle_check) {
        auto previous = engine.on_unit_decision;
        engine.on_unit_decision = [&, previous](const std::vector<Polynomial>& gens, bool unit) {
            if (previous) previous(gens, unit);
            const std::size_t vars = gens.empty() ? 0 : detail::common_context_of(gens)->size();
            if (vars > options.oracle_limits.max_variables) {
                ++oracle.skipped;
                return;
            }
            const auto audit = check_unit_verdict(gens, unit, options.oracle_primes, options.oracle_limits);
            ++oracle.audited;
            if (!audit.consistent) {
                oracle.consistent = false;
                throw InconsistencyError("unit-ideal verdict contradicted by a common zero modulo a good prime");
            }
        };
    }
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, SuspensionTower>) detail::analyze_tower(s, engine, r);
            if constexpr (std::is_same_v<T, DanielewskiSurface>) detail::analyze_danielewski(s, engine, r);
            if constexpr (std::is_same_v<T, FactoredSuspension>) detail::analyze_factored(s, engine, r);
        },
        spec);
    if (options.oracle_check) r.oracle = oracle;
    r.validate();
    return r;
}

}  // namespace susp
