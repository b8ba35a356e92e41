#pragma once

#include "chowkernel/poly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace chowkernel {

/// A formal line bundle, carried by its first Chern class: a homogeneous
/// degree-1 divisor polynomial (or zero for the trivial bundle).
class LineClass {
public:
    LineClass() = default;
    explicit LineClass(GradedPoly divisor) : divisor_(std::move(divisor)) {
        if (!divisor_.is_zero() && !divisor_.is_homogeneous(1))
            throw std::domain_error("LineClass: divisor must be homogeneous of degree 1");
    }

    const GradedPoly& divisor() const { return divisor_; }

    /// k-th tensor power: divisor scaled by k.
    LineClass power(int k) const { return LineClass(divisor_.scaled(Rational(k))); }

    LineClass tensor(const LineClass& other) const {
        return LineClass(divisor_ + other.divisor());
    }

    bool operator==(const LineClass& other) const { return divisor_ == other.divisor_; }

private:
    GradedPoly divisor_;
};

/// A formal vector bundle: rank plus total Chern class, with the split
/// line-class list kept whenever the bundle is a direct sum of line classes.
/// Rank may be negative for K-theory differences; those never split.
class BundleClass {
public:
    static BundleClass from_split(std::vector<LineClass> summands) {
        BundleClass b;
        b.rank_ = static_cast<int>(summands.size());
        b.split_ = std::move(summands);
        return b;
    }

    static BundleClass line(LineClass l) { return from_split({std::move(l)}); }

    static BundleClass from_chern(int rank, GradedPoly total_chern, int chern_cap) {
        if (total_chern.constant_term() != 1)
            throw std::domain_error("BundleClass: total Chern class must have constant term 1");
        BundleClass b;
        b.rank_ = rank;
        b.chern_ = std::move(total_chern);
        b.chern_cap_ = chern_cap;
        return b;
    }

    int rank() const { return rank_; }
    bool is_split() const { return split_.has_value(); }

    const std::vector<LineClass>& summands() const {
        if (!split_) throw std::domain_error("BundleClass: not split");
        return *split_;
    }

    /// Total Chern class truncated at cap. Split bundles evaluate the Whitney
    /// product directly; chern-only bundles can only be truncated further.
    GradedPoly total_chern(int cap) const {
        if (split_) {
            GradedPoly c(1);
            for (const auto& l : *split_)
                c = poly_mul(c, GradedPoly(1) + l.divisor(), cap);
            return c;
        }
        if (cap > chern_cap_)
            throw std::domain_error("BundleClass: total Chern class truncated below requested cap");
        GradedPoly out;
        for (const auto& [m, c] : chern_->terms())
            if (m.degree() <= cap) out.add_term(m, c);
        return out;
    }

private:
    BundleClass() = default;
    int rank_ = 0;
    std::optional<GradedPoly> chern_;
    int chern_cap_ = 0;
    std::optional<std::vector<LineClass>> split_;
};

/// Direct sum: ranks add, total Chern classes multiply, splitting survives
/// when every part splits.
inline BundleClass whitney(const std::vector<BundleClass>& parts, int cap) {
    bool all_split = true;
    int rank = 0;
    for (const auto& b : parts) {
        rank += b.rank();
        all_split = all_split && b.is_split();
    }
    if (all_split) {
        std::vector<LineClass> summands;
        for (const auto& b : parts)
            for (const auto& l : b.summands()) summands.push_back(l);
        return BundleClass::from_split(std::move(summands));
    }
    GradedPoly c(1);
    for (const auto& b : parts) c = poly_mul(c, b.total_chern(cap), cap);
    return BundleClass::from_chern(rank, std::move(c), cap);
}

/// Sym^k of the split rank-2 bundle l1 (+) l2: summands i*l1 + (k-i)*l2.
/// k = -1 is the zero bundle.
inline BundleClass sym_rank2_split(int k, const LineClass& l1, const LineClass& l2) {
    if (k < -1) throw std::domain_error("sym_rank2_split: k must be >= -1");
    std::vector<LineClass> summands;
    for (int i = 0; i <= k; ++i)
        summands.push_back(l1.power(i).tensor(l2.power(k - i)));
    return BundleClass::from_split(std::move(summands));
}

/// Tensor of a split bundle by a line class: every summand is shifted.
inline BundleClass twist(const BundleClass& b, const LineClass& l) {
    if (!b.is_split()) throw std::domain_error("twist: bundle is not split");
    std::vector<LineClass> summands;
    for (const auto& s : b.summands()) summands.push_back(s.tensor(l));
    return BundleClass::from_split(std::move(summands));
}

/// Formal K-theory quotient e_big / e_small: rank difference, Chern class
/// c(e_big) * c(e_small)^{-1}. When both sides split and e_small's summands
/// form a sub-multiset of e_big's, the quotient splits as the set difference;
/// require_split makes a failed difference an error instead of a fallback.
inline BundleClass ktheory_quotient(const BundleClass& e_big, const BundleClass& e_small,
                                    int cap, bool require_split = false) {
    const int rank = e_big.rank() - e_small.rank();
    if (e_big.is_split() && e_small.is_split()) {
        std::vector<LineClass> remaining = e_big.summands();
        bool ok = true;
        for (const auto& s : e_small.summands()) {
            auto it = std::find(remaining.begin(), remaining.end(), s);
            if (it == remaining.end()) {
                ok = false;
                break;
            }
            remaining.erase(it);
        }
        if (ok) return BundleClass::from_split(std::move(remaining));
        if (require_split)
            throw std::domain_error("ktheory_quotient: summands are not a sublist");
    } else if (require_split) {
        throw std::domain_error("ktheory_quotient: split quotient requires split inputs");
    }
    GradedPoly c = poly_mul(e_big.total_chern(cap), series_inv(e_small.total_chern(cap), cap), cap);
    return BundleClass::from_chern(rank, std::move(c), cap);
}

/// Top Chern class of a split bundle: the product of its summand divisors.
/// The zero bundle gives 1.
inline GradedPoly top_chern_split(const BundleClass& b, int cap) {
    if (!b.is_split()) throw std::domain_error("top_chern_split: bundle is not split");
    GradedPoly c(1);
    for (const auto& l : b.summands()) c = poly_mul(c, l.divisor(), cap);
    return c;
}

/// Degree-j part of the total Chern class.
inline GradedPoly chern_part(const BundleClass& b, int j, int cap) {
    if (j < 0 || j > cap) throw std::domain_error("chern_part: j out of range");
    return homogeneous_part(b.total_chern(cap), j);
}

} // namespace chowkernel
