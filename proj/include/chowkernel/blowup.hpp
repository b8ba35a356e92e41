#pragma once

#include "chowkernel/ring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowkernel {

/// Blowup of the base along a smooth center of codimension c >= 2. Classes on
/// the blowup are polynomials in the base divisor classes (implicitly pulled
/// back) and the exceptional class E. The exceptional divisor is the
/// P^{c-1}-bundle over the center with relative hyperplane class
/// zeta = -E|_E; pushforwards of zeta-powers to the center are the Segre
/// classes of the center's normal bundle (segre[0] = 1 always; higher entries
/// are optional and consuming an absent one is an error, not a truncation).
class BlowupContext {
public:
    BlowupContext(RingContext base, std::string exc_var, int codim, RingContext center,
                  std::map<std::string, GradedPoly> restrict_to_center,
                  std::vector<GradedPoly> segre = {GradedPoly(1)})
        : base_(std::move(base)), exc_var_(std::move(exc_var)), codim_(codim),
          center_(std::move(center)), restrict_(std::move(restrict_to_center)),
          segre_(std::move(segre)) {
        if (codim_ < 2) throw std::domain_error("BlowupContext: codimension must be >= 2");
        if (base_.has_variable(exc_var_))
            throw std::domain_error("BlowupContext: exceptional variable collides with base");
        if (segre_.empty() || !(segre_[0] == GradedPoly(1)))
            throw std::domain_error("BlowupContext: segre[0] must be 1");
        for (const auto& v : base_.variables()) {
            auto it = restrict_.find(v);
            if (it == restrict_.end())
                throw std::domain_error("BlowupContext: missing restriction for " + v);
            if (!it->second.is_zero() && !it->second.is_homogeneous(1))
                throw std::domain_error("BlowupContext: restriction of " + v +
                                        " must have degree 1 or be zero");
        }
    }

    const RingContext& base() const { return base_; }
    const RingContext& center() const { return center_; }
    const std::string& exc_var() const { return exc_var_; }
    int codim() const { return codim_; }
    int dimension() const { return base_.dimension(); }

    GradedPoly exc_class() const { return GradedPoly::variable(exc_var_); }

    /// Restriction of a base-class polynomial to the center.
    GradedPoly restrict_to_center(const GradedPoly& beta) const {
        return center_.normal_form(substitute(beta, restrict_, center_.dimension()));
    }

    /// j_{E,*}(zeta^a . j_E^* b^* beta) = (-1)^a E^{a+1} beta, by the
    /// projection formula and j_E^* E = E|_E.
    GradedPoly exc_push(int a, const GradedPoly& beta) const {
        if (a < 0) throw std::domain_error("exc_push: a must be >= 0");
        for (const auto& v : beta.variables())
            if (!base_.has_variable(v))
                throw std::domain_error("exc_push: beta must be a base-class polynomial");
        const Rational sign = (a % 2 == 0) ? Rational(1) : Rational(-1);
        GradedPoly e_power = GradedPoly::term(Monomial::var(exc_var_, a + 1), sign);
        return poly_mul(beta, e_power, dimension());
    }

    /// Degree functional on the blowup. Monomials b^*beta (no E) integrate on
    /// the base; b^*beta . E^k with k >= 1 contribute
    /// (-1)^{k-1} . \int_center segre[k-c] . restrict(beta), with segre[j] = 0
    /// for j < 0.
    Rational integrate(const GradedPoly& p) const {
        const GradedPoly nf = working_ring().normal_form(p);
        Rational acc = 0;
        for (const auto& [m, c] : nf.terms()) {
            if (m.degree() < dimension()) continue;
            const int k = m.exponent(exc_var_);
            if (k == 0) {
                acc += c * base_.integrate(GradedPoly::term(m, Rational(1)));
                continue;
            }
            const Monomial beta = m.divide_by(exc_var_, k);
            const GradedPoly rb = restrict_to_center(GradedPoly::term(beta, Rational(1)));
            if (rb.is_zero()) continue;
            const int j = k - codim_;
            if (j < 0) continue;
            if (j >= static_cast<int>(segre_.size()))
                throw std::domain_error("integrate: needed Segre class s_" + std::to_string(j) +
                                        " is absent");
            const Rational sign = ((k - 1) % 2 == 0) ? Rational(1) : Rational(-1);
            acc += c * sign * center_.integrate(poly_mul(rb, segre_[j], center_.dimension()));
        }
        return acc;
    }

    /// The scalar multiple of the center cycle in the pushforward of p, mod
    /// rational multiples of hyperplane powers: (-1)^{c-1} . coeff(p, E^c).
    /// Mixed terms die by fiber dimension; only the pure top E-power lands on
    /// the center. Restricted to codim_class == c, the one pattern needed.
    Rational center_component(const GradedPoly& p, int codim_class) const {
        if (codim_class != codim_)
            throw std::domain_error("center_component: only codim_class == codim is supported");
        if (!p.is_zero() && !p.is_homogeneous(codim_class))
            throw std::domain_error("center_component: polynomial must be homogeneous of degree " +
                                    std::to_string(codim_class));
        const Rational sign = ((codim_ - 1) % 2 == 0) ? Rational(1) : Rational(-1);
        return sign * p.coeff(Monomial::var(exc_var_, codim_));
    }

    /// Base ring extended by the (uncapped) exceptional variable; used for
    /// normal forms of blowup classes.
    RingContext working_ring() const {
        std::vector<std::string> vars = base_.variables();
        vars.push_back(exc_var_);
        std::map<std::string, std::optional<int>> caps;
        for (const auto& v : base_.variables()) caps[v] = base_.cap(v);
        caps[exc_var_] = std::nullopt;
        return RingContext(std::move(vars), std::move(caps), base_.dimension(), {},
                           base_.substitutions());
    }

private:
    RingContext base_;
    std::string exc_var_;
    int codim_;
    RingContext center_;
    std::map<std::string, GradedPoly> restrict_;
    std::vector<GradedPoly> segre_;
};

inline GradedPoly exc_push(const BlowupContext& ctx, int a, const GradedPoly& beta) {
    return ctx.exc_push(a, beta);
}

inline Rational integrate_blowup(const BlowupContext& ctx, const GradedPoly& p) {
    return ctx.integrate(p);
}

inline Rational center_component(const BlowupContext& ctx, const GradedPoly& p, int codim_class) {
    return ctx.center_component(p, codim_class);
}

} // namespace chowkernel
