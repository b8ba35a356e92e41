#pragma once

#include "chowkernel/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowkernel {

/// Rejected parameter tuple; the message names the violated inequality.
struct ParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The tuple driving every check: a complete intersection of dimension n and
/// type (d_1..d_r) in P^{n+r}, a section degree d, and the optional cycle
/// dimension w for the cycle-action checks.
struct PaperParams {
    int n = 0;
    int r = 0;
    std::vector<int> degrees;
    int d = 0;
    Rational deg_Y;
    Rational deg_X;
    std::optional<int> w;
    bool d_overridden = false;

    static int default_d(int n, int r, const std::vector<int>& degrees) {
        const int dr = degrees.empty() ? 0 : degrees.back();
        return std::max(dr, 2 * (n + r));
    }

    static PaperParams make(int n, int r, std::vector<int> degrees,
                            std::optional<int> d = std::nullopt,
                            std::optional<int> w = std::nullopt) {
        if (n < 3) throw ParamsError("requires n >= 3 (got n=" + std::to_string(n) + ")");
        if (r < 2) throw ParamsError("requires r >= 2 (got r=" + std::to_string(r) + ")");
        if (r >= n)
            throw ParamsError("requires r < n (got n=" + std::to_string(n) +
                              ", r=" + std::to_string(r) + ")");
        if (static_cast<int>(degrees.size()) != r)
            throw ParamsError("requires exactly r degrees (got " +
                              std::to_string(degrees.size()) + " for r=" + std::to_string(r) +
                              ")");
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (degrees[i] < 2)
                throw ParamsError("requires d_1 >= 2 (got d_" + std::to_string(i + 1) + "=" +
                                  std::to_string(degrees[i]) + ")");
            if (i + 1 < degrees.size() && degrees[i] > degrees[i + 1])
                throw ParamsError("requires d_1 <= ... <= d_r (violated at position " +
                                  std::to_string(i + 1) + ")");
        }
        if (degrees.back() <= 2)
            throw ParamsError("requires d_r > 2 (got d_r=" + std::to_string(degrees.back()) +
                              ")");

        PaperParams p;
        p.n = n;
        p.r = r;
        p.degrees = std::move(degrees);
        const int dflt = default_d(n, r, p.degrees);
        if (d) {
            p.d = *d;
            if (p.d < dflt) {
                // Sym exponents stay >= -1 down to d = n-r+2; below that the
                // bundle constructions lose meaning.
                if (p.d < n - r + 2)
                    throw ParamsError("requires d >= n-r+2 (got d=" + std::to_string(p.d) + ")");
                p.d_overridden = true;
            }
        } else {
            p.d = dflt;
        }
        if (w) {
            if (*w < 0 || *w > n - 2)
                throw ParamsError("requires 0 <= w <= n-2 (got w=" + std::to_string(*w) + ")");
            p.w = w;
        }
        p.deg_Y = 1;
        for (int di : p.degrees) p.deg_Y *= di;
        p.deg_X = p.deg_Y * p.d;
        return p;
    }

    std::string label() const {
        std::string s = "(" + std::to_string(n) + "," + std::to_string(r) + ",(";
        for (size_t i = 0; i < degrees.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(degrees[i]);
        }
        s += ")," + std::to_string(d) + ")";
        return s;
    }
};

/// One verified statement: pass iff expected and computed agree exactly.
struct CheckResult {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string paper_anchor;
};

inline CheckResult make_check(std::string name, std::string anchor, const Rational& expected,
                              const Rational& computed) {
    CheckResult c;
    c.name = std::move(name);
    c.paper_anchor = std::move(anchor);
    c.expected = rational_to_string(expected);
    c.computed = rational_to_string(computed);
    c.pass = (expected == computed);
    return c;
}

inline CheckResult make_check(std::string name, std::string anchor, const GradedPoly& expected,
                              const GradedPoly& computed) {
    CheckResult c;
    c.name = std::move(name);
    c.paper_anchor = std::move(anchor);
    c.expected = expected.to_string();
    c.computed = computed.to_string();
    c.pass = (expected == computed);
    return c;
}

inline CheckResult make_check_bool(std::string name, std::string anchor, std::string expected,
                                   std::string computed, bool pass) {
    CheckResult c;
    c.name = std::move(name);
    c.paper_anchor = std::move(anchor);
    c.expected = std::move(expected);
    c.computed = std::move(computed);
    c.pass = pass;
    return c;
}

} // namespace chowkernel
