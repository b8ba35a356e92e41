#pragma once

#include "chowkernel/rational.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowkernel {

/// Monomial in named degree-1 divisor-class variables. Exponents are
/// non-negative; zero exponents are never stored, so the empty map is 1.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial var(const std::string& name, int exp = 1) {
        Monomial m;
        m.set_exponent(name, exp);
        return m;
    }

    void set_exponent(const std::string& name, int exp) {
        if (exp < 0) throw std::domain_error("Monomial: negative exponent");
        if (exp == 0)
            exps_.erase(name);
        else
            exps_[name] = exp;
    }

    int exponent(const std::string& name) const {
        auto it = exps_.find(name);
        return it == exps_.end() ? 0 : it->second;
    }

    int degree() const {
        int d = 0;
        for (const auto& [v, e] : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial m = *this;
        for (const auto& [v, e] : other.exps_) m.set_exponent(v, m.exponent(v) + e);
        return m;
    }

    /// Quotient by var^power; requires exponent(var) >= power.
    Monomial divide_by(const std::string& name, int power) const {
        int e = exponent(name);
        if (e < power) throw std::domain_error("Monomial: divide_by underflow");
        Monomial m = *this;
        m.set_exponent(name, e - power);
        return m;
    }

    const std::map<std::string, int>& exponents() const { return exps_; }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator<(const Monomial& other) const { return exps_ < other.exps_; }

    std::string to_string() const {
        if (exps_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : exps_) {
            if (!s.empty()) s += "*";
            s += v;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::map<std::string, int> exps_;
};

/// Sparse multivariate polynomial over Rational. Terms with coefficient zero
/// are never stored; iteration order is the deterministic monomial order.
class GradedPoly {
public:
    GradedPoly() = default;
    GradedPoly(const Rational& c) {
        if (c != 0) terms_[Monomial::one()] = c;
    }
    GradedPoly(int c) : GradedPoly(Rational(c)) {}

    static GradedPoly variable(const std::string& name) {
        GradedPoly p;
        p.terms_[Monomial::var(name)] = 1;
        return p;
    }

    static GradedPoly term(const Monomial& m, const Rational& c) {
        GradedPoly p;
        p.add_term(m, c);
        return p;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Monomial::one()); }

    /// Total degree of the highest term; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous(int k) const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != k) return false;
        return true;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exponents()) vs.insert(v);
        return vs;
    }

    GradedPoly operator+(const GradedPoly& other) const {
        GradedPoly p = *this;
        for (const auto& [m, c] : other.terms_) p.add_term(m, c);
        return p;
    }

    GradedPoly operator-(const GradedPoly& other) const {
        GradedPoly p = *this;
        for (const auto& [m, c] : other.terms_) p.add_term(m, -c);
        return p;
    }

    GradedPoly operator-() const { return GradedPoly() - *this; }

    GradedPoly& operator+=(const GradedPoly& other) {
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    GradedPoly scaled(const Rational& c) const {
        GradedPoly p;
        if (c == 0) return p;
        for (const auto& [m, k] : terms_) p.terms_[m] = k * c;
        return p;
    }

    bool operator==(const GradedPoly& other) const { return terms_ == other.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (s.empty()) {
                if (a < 0) {
                    s += "-";
                    a = -a;
                }
            } else {
                s += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            const bool unit = (a == 1);
            const bool constant = m.exponents().empty();
            if (!unit || constant) s += rational_to_string(a);
            if (!constant) {
                if (!unit) s += "*";
                s += m.to_string();
            }
        }
        return s;
    }

private:
    std::map<Monomial, Rational> terms_;
};

/// Product with all terms of total degree > cap discarded.
inline GradedPoly poly_mul(const GradedPoly& p, const GradedPoly& q, int cap) {
    if (cap < 0) throw std::domain_error("poly_mul: cap must be >= 0");
    GradedPoly out;
    for (const auto& [mp, cp] : p.terms()) {
        const int dp = mp.degree();
        if (dp > cap) continue;
        for (const auto& [mq, cq] : q.terms()) {
            if (dp + mq.degree() > cap) continue;
            out.add_term(mp * mq, cp * cq);
        }
    }
    return out;
}

inline GradedPoly poly_pow(const GradedPoly& p, int k, int cap) {
    if (k < 0) throw std::domain_error("poly_pow: negative exponent");
    GradedPoly out(1);
    for (int i = 0; i < k; ++i) out = poly_mul(out, p, cap);
    return out;
}

/// Multiplicative inverse up to the cap, by geometric series on (1 - p).
/// Requires constant term exactly 1.
inline GradedPoly series_inv(const GradedPoly& p, int cap) {
    if (cap < 0) throw std::domain_error("series_inv: cap must be >= 0");
    if (p.constant_term() != 1)
        throw std::domain_error("series_inv: constant term must be 1");
    const GradedPoly u = GradedPoly(1) - p;
    GradedPoly out(1);
    GradedPoly power(1);
    for (int k = 1; k <= cap; ++k) {
        power = poly_mul(power, u, cap);
        if (power.is_zero()) break;
        out += power;
    }
    return out;
}

inline Rational coeff(const GradedPoly& p, const Monomial& m) { return p.coeff(m); }

/// Degree-j homogeneous part.
inline GradedPoly homogeneous_part(const GradedPoly& p, int j) {
    GradedPoly out;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == j) out.add_term(m, c);
    return out;
}

/// Replaces each mapped variable by its image polynomial; unmapped variables
/// are kept as themselves.
inline GradedPoly substitute(const GradedPoly& p,
                             const std::map<std::string, GradedPoly>& images, int cap) {
    GradedPoly out;
    for (const auto& [m, c] : p.terms()) {
        GradedPoly term(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = images.find(v);
            const GradedPoly image = (it == images.end()) ? GradedPoly::variable(v) : it->second;
            term = poly_mul(term, poly_pow(image, e, cap), cap);
        }
        out += term;
    }
    return out;
}

/// The c * v^k term of p, as a polynomial (zero if absent).
inline GradedPoly pure_power_part(const GradedPoly& p, const std::string& v, int k) {
    const Monomial m = Monomial::var(v, k);
    return GradedPoly::term(m, p.coeff(m));
}

} // namespace chowkernel
