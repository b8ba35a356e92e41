#pragma once

#include "chowkernel/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowkernel {

/// Rewrite rule head_var^power -> replacement, applied before cap truncation.
/// The replacement must carry the head variable only in exponents < power,
/// so every application strictly reduces that exponent.
struct SubstitutionRule {
    std::string var;
    int power = 0;
    GradedPoly replacement;
};

/// A graded ring presentation: named degree-1 generators, nilpotency caps
/// (v^{cap+1} == 0), a top degree, and an integration table giving the value
/// of each surviving top-degree monomial. Models Chow rings of projective
/// spaces, their products, and hyperplane-power subrings of hypersurfaces.
class RingContext {
public:
    RingContext(std::vector<std::string> vars,
                std::map<std::string, std::optional<int>> caps, int dimension,
                std::map<Monomial, Rational> integration_table,
                std::vector<SubstitutionRule> substitutions = {})
        : vars_(std::move(vars)), caps_(std::move(caps)), dimension_(dimension),
          table_(std::move(integration_table)), subs_(std::move(substitutions)) {
        if (dimension_ < 0) throw std::domain_error("RingContext: negative dimension");
        for (const auto& v : vars_)
            if (!caps_.count(v)) caps_[v] = std::nullopt;
        for (const auto& rule : subs_) {
            if (!has_variable(rule.var))
                throw std::domain_error("RingContext: substitution head is not a variable");
            if (rule.power < 1)
                throw std::domain_error("RingContext: substitution head power must be >= 1");
            for (const auto& [m, c] : rule.replacement.terms())
                if (m.exponent(rule.var) >= rule.power)
                    throw std::domain_error(
                        "RingContext: substitution must reduce its head exponent");
        }
    }

    const std::vector<std::string>& variables() const { return vars_; }
    int dimension() const { return dimension_; }
    const std::map<Monomial, Rational>& integration_table() const { return table_; }
    const std::vector<SubstitutionRule>& substitutions() const { return subs_; }

    bool has_variable(const std::string& v) const {
        return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
    }

    std::optional<int> cap(const std::string& v) const {
        auto it = caps_.find(v);
        if (it == caps_.end()) throw std::domain_error("RingContext: unknown variable " + v);
        return it->second;
    }

    /// Applies substitutions to a fixpoint, then deletes terms exceeding any
    /// cap or the total degree bound. Idempotent.
    GradedPoly normal_form(const GradedPoly& p) const {
        for (const auto& v : p.variables())
            if (!has_variable(v))
                throw std::domain_error("normal_form: unknown variable " + v);
        GradedPoly cur = p;
        if (!subs_.empty()) {
            int fuel = 10000;
            bool changed = true;
            while (changed) {
                if (--fuel == 0) throw std::domain_error("normal_form: rewrite did not terminate");
                changed = false;
                GradedPoly next;
                for (const auto& [m, c] : cur.terms()) {
                    const SubstitutionRule* hit = nullptr;
                    for (const auto& rule : subs_)
                        if (m.exponent(rule.var) >= rule.power) {
                            hit = &rule;
                            break;
                        }
                    if (!hit) {
                        next.add_term(m, c);
                        continue;
                    }
                    changed = true;
                    const Monomial rest = m.divide_by(hit->var, hit->power);
                    for (const auto& [rm, rc] : hit->replacement.terms())
                        next.add_term(rest * rm, c * rc);
                }
                cur = next;
            }
        }
        GradedPoly out;
        for (const auto& [m, c] : cur.terms()) {
            if (m.degree() > dimension_) continue;
            bool killed = false;
            for (const auto& [v, e] : m.exponents()) {
                const auto cp = cap(v);
                if (cp && e > *cp) {
                    killed = true;
                    break;
                }
            }
            if (!killed) out.add_term(m, c);
        }
        return out;
    }

    /// Sum of coefficient x table entry over top-degree terms of the normal
    /// form; lower-degree terms contribute 0. A surviving top-degree monomial
    /// missing from the table is a construction bug and throws.
    Rational integrate(const GradedPoly& p) const {
        const GradedPoly nf = normal_form(p);
        Rational acc = 0;
        for (const auto& [m, c] : nf.terms()) {
            if (m.degree() < dimension_) continue;
            auto it = table_.find(m);
            if (it == table_.end())
                throw std::domain_error("integrate: no table entry for " + m.to_string());
            acc += c * it->second;
        }
        return acc;
    }

private:
    std::vector<std::string> vars_;
    std::map<std::string, std::optional<int>> caps_;
    int dimension_;
    std::map<Monomial, Rational> table_;
    std::vector<SubstitutionRule> subs_;
};

/// CH(P^N): one generator with cap N and integral of var^N equal to 1.
inline RingContext make_projective_space(int N, const std::string& var) {
    if (N < 0) throw std::domain_error("make_projective_space: negative dimension");
    std::map<Monomial, Rational> table{{Monomial::var(var, N), Rational(1)}};
    return RingContext({var}, {{var, N}}, N, std::move(table));
}

/// The 0-dimensional context with integral of 1 equal to 1.
inline RingContext make_point() {
    std::map<Monomial, Rational> table{{Monomial::one(), Rational(1)}};
    return RingContext({}, {}, 0, std::move(table));
}

/// Hyperplane-power subring of an n-dimensional variety of the given degree:
/// single class h with h^{dim} integrating to deg.
inline RingContext hypersurface_context(const std::string& var, int dim, const Rational& deg) {
    if (dim < 0) throw std::domain_error("hypersurface_context: negative dimension");
    if (deg <= 0) throw std::domain_error("hypersurface_context: degree must be positive");
    std::map<Monomial, Rational> table{{Monomial::var(var, dim), deg}};
    return RingContext({var}, {{var, dim}}, dim, std::move(table));
}

/// Kuenneth product: disjoint variables, summed dimension, and the product
/// integration rule on pairs of table entries.
inline RingContext make_product(const RingContext& a, const RingContext& b) {
    std::vector<std::string> vars = a.variables();
    for (const auto& v : b.variables()) {
        if (a.has_variable(v))
            throw std::domain_error("make_product: variable name collision: " + v);
        vars.push_back(v);
    }
    std::map<std::string, std::optional<int>> caps;
    for (const auto& v : a.variables()) caps[v] = a.cap(v);
    for (const auto& v : b.variables()) caps[v] = b.cap(v);
    std::map<Monomial, Rational> table;
    for (const auto& [ma, va] : a.integration_table())
        for (const auto& [mb, vb] : b.integration_table()) table[ma * mb] = va * vb;
    std::vector<SubstitutionRule> subs = a.substitutions();
    for (const auto& rule : b.substitutions()) subs.push_back(rule);
    return RingContext(std::move(vars), std::move(caps), a.dimension() + b.dimension(),
                       std::move(table), std::move(subs));
}

} // namespace chowkernel
