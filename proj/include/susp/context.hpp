#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "susp/errors.hpp"

namespace susp {

/// Safety limits that make runaway computations fail fast.
struct Limits {
    unsigned max_degree = 64;
    std::size_t max_terms = 100000;
};

/// Ordered list of distinct variable names. Immutable once built; shared by
/// every polynomial living over it.
class VariableContext {
public:
    explicit VariableContext(std::vector<std::string> names, Limits limits = {})
        : names_(std::move(names)), limits_(limits) {
        std::unordered_set<std::string> seen;
        for (const auto& n : names_) {
            if (n.empty()) throw ContextError("variable names must be nonempty");
            if (!seen.insert(n).second)
                throw ContextError("duplicate variable name '" + n + "'");
        }
    }

    const std::vector<std::string>& names() const noexcept { return names_; }
    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const Limits& limits() const noexcept { return limits_; }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        return std::nullopt;
    }

    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw ContextError("unknown variable '" + std::string(name) + "'");
    }

    bool contains_all(const VariableContext& other) const {
        for (const auto& n : other.names_)
            if (!find(n)) return false;
        return true;
    }

    bool same_names(const VariableContext& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    Limits limits_;
};

using Context = std::shared_ptr<const VariableContext>;

inline Context make_context(std::vector<std::string> names, Limits limits = {}) {
    return std::make_shared<const VariableContext>(std::move(names), limits);
}

/// Context with `extra` names appended after the names of `base`.
inline Context extend_context(const Context& base, const std::vector<std::string>& extra) {
    std::vector<std::string> names = base->names();
    names.insert(names.end(), extra.begin(), extra.end());
    return make_context(std::move(names), base->limits());
}

/// Common context for two operands: identical names, or one name list
/// containing the other. Anything else is a conflict.
inline Context common_context(const Context& a, const Context& b) {
    if (a == b || a->same_names(*b)) return a;
    if (a->contains_all(*b)) return a;
    if (b->contains_all(*a)) return b;
    throw ContextError("polynomials live over incompatible variable contexts");
}

/// A name not already used by `ctx`, built from `stem` by appending
/// underscores.
inline std::string fresh_name(const VariableContext& ctx, std::string stem) {
    while (ctx.find(stem)) stem += '_';
    return stem;
}

}  // namespace susp
