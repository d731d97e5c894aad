#pragma once

#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "susp/report_io.hpp"
#include "susp/spec_file.hpp"

namespace susp::cli {

/// Process exit codes.
enum Exit : int { Ok = 0, InputError = 1, ResourceLimit = 2, Inconsistent = 3 };

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Resource:
        case ErrorKind::Cancelled: return ResourceLimit;
        case ErrorKind::Inconsistency:
        case ErrorKind::Protocol: return Inconsistent;
        default: return InputError;
    }
}

struct GlobalFlags {
    std::string format = "text";
    bool oracle_check = false;
    long seed = 0;
    unsigned max_degree = Limits{}.max_degree;
    std::size_t max_terms = Limits{}.max_terms;

    Limits limits() const { return {max_degree, max_terms}; }
    ReportFormat report_format() const { return format == "json" ? ReportFormat::Json : ReportFormat::Text; }
};

namespace detail {

/// Degree limit default, taken from SUSP_MAX_DEGREE when that is a positive
/// integer.
inline unsigned default_max_degree(const std::function<const char*(const char*)>& getenv) {
    const char* v = getenv ? getenv("SUSP_MAX_DEGREE") : nullptr;
    if (!v || !*v) return Limits{}.max_degree;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0 || n > 1'000'000) throw SchemaError("SUSP_MAX_DEGREE must be a positive integer");
    return static_cast<unsigned>(n);
}

inline EngineOptions audited_engine(const GlobalFlags& flags, OracleSummary& summary) {
    EngineOptions engine;
    if (!flags.oracle_check) return engine;
    summary.primes = default_oracle_primes();
    engine.on_unit_decision = [&summary](const std::vector<Polynomial>& gens, bool unit) {
        const OracleLimits limits{};
        if (gens.empty() || susp::detail::common_context_of(gens)->size() > limits.max_variables) {
            ++summary.skipped;
            return;
        }
        ++summary.audited;
        if (!check_unit_verdict(gens, unit, summary.primes, limits).consistent) {
            summary.consistent = false;
            throw InconsistencyError("unit-ideal verdict contradicted by a common zero modulo a good prime");
        }
    };
    return engine;
}

inline void print_oracle(std::ostream& out, const GlobalFlags& flags, const OracleSummary& s) {
    if (!flags.oracle_check || flags.format == "json") return;
    out << "oracle: " << s.audited << " verdicts audited, " << s.skipped << " skipped, "
        << (s.consistent ? "consistent" : "INCONSISTENT") << "\n";
}

inline nlohmann::ordered_json oracle_json(const OracleSummary& s) {
    nlohmann::ordered_json o;
    o["primes"] = s.primes;
    o["audited"] = s.audited;
    o["skipped"] = s.skipped;
    o["consistent"] = s.consistent;
    return o;
}

inline DanielewskiSurface surface(unsigned n, const std::string& f, const Limits& limits) {
    if (f.empty()) throw SchemaError("--f is required");
    return DanielewskiSurface(n, parse_polynomial(f, make_context({"y"}, limits)));
}

inline int cmd_analyze(const std::string& path, const GlobalFlags& flags, std::ostream& out) {
    AnalyzeOptions options;
    options.oracle_check = flags.oracle_check;
    const VarietySpec spec = load_spec(path, flags.limits(), options.engine.groebner);
    out << emit_report(analyze(spec, options), flags.report_format());
    return Ok;
}

inline int cmd_classify(unsigned n, const std::string& f, const GlobalFlags& flags, std::ostream& out) {
    AnalyzeOptions options;
    options.oracle_check = flags.oracle_check;
    out << emit_report(analyze(surface(n, f, flags.limits()), options), flags.report_format());
    return Ok;
}

inline int cmd_picard(unsigned n, const std::string& f, const GlobalFlags& flags, std::ostream& out) {
    const auto s = surface(n, f, flags.limits());
    const std::size_t rank = picard_rank(s);
    if (flags.format == "json") {
        nlohmann::ordered_json j;
        j["picard_rank"] = rank;
        j["rule"] = rule_id(Rule::PicRankDanielewski);
        out << j.dump(2) << "\n";
    } else {
        out << "picard rank: " << rank << "\n";
    }
    return Ok;
}

inline int cmd_isom(unsigned n1, const std::string& f1, unsigned n2, const std::string& f2, const GlobalFlags& flags,
                    std::ostream& out) {
    const auto s1 = surface(n1, f1, flags.limits());
    const auto s2 = surface(n2, f2.empty() ? f1 : f2, flags.limits());
    const auto w = isomorphic(s1, s2);
    if (flags.format == "json") {
        nlohmann::ordered_json j;
        j["isomorphic"] = w.has_value();
        if (w) {
            nlohmann::ordered_json wj;
            wj["root_degree"] = w->root_degree;
            wj["beta"] = to_string(w->beta);
            wj["a_scale"] = to_string(w->a_scale);
            wj["c_slope"] = to_string(w->c_slope);
            wj["c_shift"] = to_string(w->c_shift);
            if (w->direct) {
                wj["direct"] = {{"a", to_string(w->direct->a)}, {"b", to_string(w->direct->b)},
                                {"c", to_string(w->direct->c)}};
            } else {
                wj["direct"] = nullptr;
            }
            j["witness"] = std::move(wj);
        }
        out << j.dump(2) << "\n";
        return Ok;
    }
    if (!w) {
        out << "not isomorphic\n";
        return Ok;
    }
    out << "isomorphic\n";
    // c = c_slope*b + c_shift, printed as a polynomial in b.
    const Context b_ctx = make_context({"b"});
    const Polynomial c = w->c_slope * Polynomial::variable(b_ctx, 0) + w->c_shift;
    out << "witness: f1(y) = a*f2(b*y + c) with b^" << w->root_degree << " = " << to_string(w->beta) << ", a = "
        << to_string(w->a_scale) << "/b^" << w->degree << ", c = " << to_string(c) << "\n";
    if (w->direct)
        out << "rational witness: a = " << to_string(w->direct->a) << ", b = " << to_string(w->direct->b)
            << ", c = " << to_string(w->direct->c) << "\n";
    return Ok;
}

inline int cmd_smooth(const std::string& f, const std::vector<std::string>& vars, const GlobalFlags& flags,
                      std::ostream& out) {
    const Polynomial p = parse_polynomial(f, make_context(vars, flags.limits()));
    OracleSummary summary;
    const bool smooth = hypersurface_scheme_smooth(p, audited_engine(flags, summary));
    if (flags.format == "json") {
        nlohmann::ordered_json j;
        j["smooth"] = smooth;
        if (flags.oracle_check) j["oracle"] = oracle_json(summary);
        out << j.dump(2) << "\n";
    } else {
        out << (smooth ? "smooth" : "not smooth") << "\n";
        print_oracle(out, flags, summary);
    }
    return Ok;
}

inline int cmd_groebner(const std::vector<std::string>& gens, const std::vector<std::string>& vars,
                        const std::string& order_name, const GlobalFlags& flags, std::ostream& out) {
    const Context ctx = make_context(vars, flags.limits());
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(parse_polynomial(g, ctx));
    const MonomialOrder order = order_name == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    const GroebnerBasis gb = groebner_basis(polys, order);
    OracleSummary summary;
    if (flags.oracle_check) {
        summary.primes = default_oracle_primes();
        const OracleLimits limits{};
        if (ctx->size() > limits.max_variables) {
            ++summary.skipped;
        } else {
            ++summary.audited;
            summary.consistent = check_unit_verdict(polys, gb.is_unit(), summary.primes, limits).consistent;
            if (!summary.consistent)
                throw InconsistencyError("unit basis contradicted by a common zero modulo a good prime");
        }
    }
    if (flags.format == "json") {
        nlohmann::ordered_json j;
        j["order"] = order.name();
        j["basis"] = nlohmann::ordered_json::array();
        for (const auto& g : gb.generators()) j["basis"].push_back(to_string(g));
        if (flags.oracle_check) j["oracle"] = oracle_json(summary);
        out << j.dump(2) << "\n";
    } else {
        for (const auto& g : gb.generators()) out << to_string(g) << "\n";
        print_oracle(out, flags, summary);
    }
    return Ok;
}

}  // namespace detail

/// Parses the command line and runs one command. Never throws; every
/// failure maps to an exit code and a message on `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::function<const char*(const char*)>& getenv = [](const char* name) {
                   return std::getenv(name);
               }) {
    try {
        GlobalFlags flags;
        flags.max_degree = detail::default_max_degree(getenv);

        CLI::App app{"Exact decision procedures for suspensions and Danielewski surfaces", "susp"};
        app.require_subcommand(1);
        app.fallthrough();
        app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        app.add_flag("--oracle-check", flags.oracle_check, "Audit unit-ideal verdicts modulo small primes");
        app.add_option("--seed", flags.seed, "Seed for randomized tooling");
        app.add_option("--max-degree", flags.max_degree, "Total degree limit")->check(CLI::PositiveNumber);
        app.add_option("--max-terms", flags.max_terms, "Term count limit")->check(CLI::PositiveNumber);

        std::string spec_path;
        auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a variety described by a JSON spec file");
        analyze_cmd->add_option("spec", spec_path, "Spec file")->required();

        unsigned n1 = 1, n2 = 1;
        std::string f1, f2;
        auto* dan = app.add_subcommand("danielewski", "Danielewski surfaces x*z^n = f(y)");
        dan->require_subcommand(1);
        auto* classify_cmd = dan->add_subcommand("classify", "Homogeneity classification");
        auto* picard_cmd = dan->add_subcommand("picard", "Picard rank");
        auto* isom_cmd = dan->add_subcommand("isom", "Isomorphism test between two surfaces");
        for (auto* sub : {classify_cmd, picard_cmd, isom_cmd}) {
            sub->fallthrough();
            sub->add_option("--n", n1, "Exponent n")->check(CLI::PositiveNumber);
            sub->add_option("--f", f1, "Polynomial f in y")->required();
        }
        isom_cmd->add_option("--n2", n2, "Exponent of the second surface")->check(CLI::PositiveNumber);
        isom_cmd->add_option("--f2", f2, "Polynomial of the second surface")->required();

        std::string smooth_f;
        std::vector<std::string> smooth_vars;
        auto* smooth_cmd = app.add_subcommand("smooth", "Smoothness of the hypersurface scheme {f = 0}");
        smooth_cmd->add_option("--f", smooth_f, "Polynomial")->required();
        smooth_cmd->add_option("--vars", smooth_vars, "Variables, in order")->required()->delimiter(',');

        std::vector<std::string> gb_gens, gb_vars;
        std::string gb_order = "grevlex";
        auto* gb_cmd = app.add_subcommand("groebner", "Reduced Groebner basis");
        gb_cmd->add_option("--gens", gb_gens, "Generators")->required();
        gb_cmd->add_option("--vars", gb_vars, "Variables, in order")->required()->delimiter(',');
        gb_cmd->add_option("--order", gb_order, "Monomial order")->check(CLI::IsMember({"lex", "grevlex"}));

        for (auto* sub : {analyze_cmd, dan, smooth_cmd, gb_cmd}) sub->fallthrough();

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::CallForHelp&) {
            out << app.help();
            return Ok;
        } catch (const CLI::CallForAllHelp&) {
            out << app.help("", CLI::AppFormatMode::All);
            return Ok;
        } catch (const CLI::ParseError& e) {
            err << "error: " << e.what() << "\n";
            return InputError;
        }

        if (*analyze_cmd) return detail::cmd_analyze(spec_path, flags, out);
        if (*classify_cmd) return detail::cmd_classify(n1, f1, flags, out);
        if (*picard_cmd) return detail::cmd_picard(n1, f1, flags, out);
        if (*isom_cmd) return detail::cmd_isom(n1, f1, n2, f2, flags, out);
        if (*smooth_cmd) return detail::cmd_smooth(smooth_f, smooth_vars, flags, out);
        if (*gb_cmd) return detail::cmd_groebner(gb_gens, gb_vars, gb_order, flags, out);
        err << "error: no command given\n";
        return InputError;
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return ResourceLimit;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return Inconsistent;
    }
}

}  // namespace susp::cli
