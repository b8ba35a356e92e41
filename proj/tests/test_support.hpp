#pragma once

#include "chowkernel/poly.hpp"

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace chowtest {

using chowkernel::GradedPoly;
using chowkernel::Monomial;
using chowkernel::Rational;

inline GradedPoly V(const std::string& name) { return GradedPoly::variable(name); }

inline Monomial M(std::initializer_list<std::pair<const char*, int>> exps) {
    Monomial m;
    for (const auto& [v, e] : exps) m.set_exponent(v, e);
    return m;
}

/// c/den * prod v^e
inline GradedPoly T(std::initializer_list<std::pair<const char*, int>> exps, long num,
                    long den = 1) {
    return GradedPoly::term(M(exps), Rational(num, den));
}

/// Independent term-by-term expansion oracle: multiplies flat term lists and
/// merges by linear scan, then drops terms above the cap. Shares no code with
/// poly_mul.
inline GradedPoly oracle_mul(const GradedPoly& a, const GradedPoly& b, int cap) {
    std::vector<std::pair<Monomial, Rational>> flat;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            bool merged = false;
            for (auto& [fm, fc] : flat)
                if (fm == m) {
                    fc += ca * cb;
                    merged = true;
                    break;
                }
            if (!merged) flat.emplace_back(std::move(m), ca * cb);
        }
    GradedPoly out;
    for (const auto& [m, c] : flat)
        if (m.degree() <= cap) out.add_term(m, c);
    return out;
}

struct PolyGen {
    std::mt19937 rng;
    explicit PolyGen(unsigned seed) : rng(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Rational rational() {
        return Rational(uniform(-6, 6), uniform(1, 4));
    }

    Monomial monomial(const std::vector<std::string>& vars, int max_deg) {
        Monomial m;
        int budget = uniform(0, max_deg);
        while (budget > 0) {
            const auto& v = vars[static_cast<size_t>(uniform(0, static_cast<int>(vars.size()) - 1))];
            const int e = uniform(1, budget);
            m.set_exponent(v, m.exponent(v) + e);
            budget -= e;
        }
        return m;
    }

    GradedPoly poly(const std::vector<std::string>& vars, int max_deg, int max_terms) {
        GradedPoly p;
        const int k = uniform(0, max_terms);
        for (int i = 0; i < k; ++i) p.add_term(monomial(vars, max_deg), rational());
        return p;
    }

    /// Random polynomial with constant term 1, for series inversion.
    GradedPoly unit_poly(const std::vector<std::string>& vars, int max_deg, int max_terms) {
        GradedPoly p = poly(vars, max_deg, max_terms);
        return GradedPoly(1) + (p - GradedPoly(p.constant_term()));
    }
};

} // namespace chowtest
