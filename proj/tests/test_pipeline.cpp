#include "chowkernel/pipeline.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace chowkernel;
using namespace chowkernel::pipeline;
using chowtest::M;
using chowtest::T;
using chowtest::V;

namespace {

const PaperParams& p42() {
    static const PaperParams p = PaperParams::make(4, 2, {2, 3});
    return p;
}
const PaperParams& p32() {
    static const PaperParams p = PaperParams::make(3, 2, {2, 3});
    return p;
}
const PaperParams& p53() {
    static const PaperParams p = PaperParams::make(5, 3, {2, 2, 3});
    return p;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace

TEST_CASE("parameter construction and defaults") {
    CHECK(p42().d == 12);
    CHECK(p42().deg_Y == 6);
    CHECK(p42().deg_X == 72);
    CHECK(p32().d == 10);
    CHECK(p53().d == 16);
    CHECK(p53().deg_Y == 12);
    CHECK(PaperParams::make(5, 2, {2, 3}).d == 14);
    CHECK(PaperParams::make(4, 3, {2, 2, 3}).d == 14);
    CHECK(PaperParams::make(5, 4, {2, 2, 2, 3}).d == 18);

    // explicit small d is allowed down to n-r+2, with the override recorded
    const PaperParams low_d = PaperParams::make(4, 2, {2, 3}, 9);
    CHECK(low_d.d == 9);
    CHECK(low_d.d_overridden);
    CHECK_FALSE(PaperParams::make(4, 2, {2, 3}, 12).d_overridden);
}

TEST_CASE("parameter validation names the violated inequality") {
    CHECK_THROWS_WITH(PaperParams::make(4, 4, {2, 2, 3, 3}),
                      Catch::Matchers::ContainsSubstring("r < n"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {2, 2}),
                      Catch::Matchers::ContainsSubstring("d_r > 2"));
    CHECK_THROWS_WITH(PaperParams::make(2, 2, {2, 3}),
                      Catch::Matchers::ContainsSubstring("n >= 3"));
    CHECK_THROWS_WITH(PaperParams::make(4, 1, {3}),
                      Catch::Matchers::ContainsSubstring("r >= 2"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {3, 2}),
                      Catch::Matchers::ContainsSubstring("d_1 <= ... <= d_r"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {1, 3}),
                      Catch::Matchers::ContainsSubstring("d_1 >= 2"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {2, 3, 3}),
                      Catch::Matchers::ContainsSubstring("exactly r degrees"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {2, 3}, std::nullopt, 3),
                      Catch::Matchers::ContainsSubstring("0 <= w <= n-2"));
    CHECK_THROWS_WITH(PaperParams::make(4, 2, {2, 3}, 3),
                      Catch::Matchers::ContainsSubstring("d >= n-r+2"));
}

TEST_CASE("bookkeeping instantiates the dimension and rank counts") {
    const auto checks = bookkeeping_checks(p42());
    CHECK(all_pass(checks));
    // (4,2): dim W = 13, rank E = 8, dim V0 = 5
    for (const auto& c : checks) {
        if (c.name == "bookkeeping/dim_W") CHECK(c.computed == "13");
        if (c.name == "bookkeeping/rank_E") CHECK(c.computed == "8");
        if (c.name == "bookkeeping/dim_V0") CHECK(c.computed == "5");
    }
    const auto checks32 = bookkeeping_checks(p32());
    CHECK(all_pass(checks32));
    for (const auto& c : checks32) {
        if (c.name == "bookkeeping/dim_W") CHECK(c.computed == "11");
        if (c.name == "bookkeeping/dim_V0") CHECK(c.computed == "3");
    }
    // (5,3,(2,2,3),16) at w=1: contact locus dimension -1 < 0
    const PaperParams p = PaperParams::make(5, 3, {2, 2, 3}, std::nullopt, 1);
    const auto checks53 = bookkeeping_checks(p);
    CHECK(all_pass(checks53));
    for (const auto& c : checks53)
        if (c.name == "bookkeeping/contact_locus_dim") CHECK(c.computed == "-1");
}

TEST_CASE("f_restriction produces the stated split ranges") {
    const BundleClass f12 = f_restriction(p42(), Locus::Delta12);
    REQUIRE(f12.rank() == 2);
    CHECK(f12.summands()[0] == LineClass(V("hX").scaled(9) + V("hY").scaled(3)));
    CHECK(f12.summands()[1] == LineClass(V("hX").scaled(10) + V("hY").scaled(2)));

    const BundleClass f13 = f_restriction(p42(), Locus::Gamma13);
    REQUIRE(f13.rank() == 2);
    CHECK(f13.summands()[0] == LineClass(V("hX1").scaled(10) + V("hX2").scaled(2)));
    CHECK(f13.summands()[1] == LineClass(V("hX1").scaled(11) + V("hX2")));

    // the (n-r+1)-fold contact condition sits at the first marked point on
    // both Gamma loci, so Gamma23 carries the same splitting as Gamma13
    const BundleClass f23 = f_restriction(p42(), Locus::Gamma23);
    CHECK(f23.summands() == f13.summands());
}

TEST_CASE("excess classes match the series expansions") {
    const GradedPoly e12 = excess_class(p42(), Locus::Delta12);
    CHECK(e12 == T({{"hX", 2}}, 50) + T({{"hX", 1}, {"hY", 1}}, 15) + T({{"hY", 2}}, 1));

    const GradedPoly e13 = excess_class(p42(), Locus::Gamma13);
    CHECK(e13 == V("hX1").scaled(4) + V("hX2"));

    const GradedPoly e23 = excess_class(p42(), Locus::Gamma23);
    CHECK(e23 == V("hX2").scaled(4) + V("hX1"));

    CHECK(coeff(e12, M({{"hY", 2}})) == 1);
    CHECK(coeff(e13, M({{"hX2", 1}})) == 1);
}

TEST_CASE("Q polynomial leading coefficients") {
    const QPolys q = q_polys(p42());
    CHECK(coeff(q.q1, M({{"hY", 4}})) == 6);
    CHECK(coeff(q.q2, M({{"hX2", 3}})) == 2);

    const QPolys q53 = q_polys(p53());
    CHECK(coeff(q53.q1, M({{"hY", 5}})) == 6);
    CHECK(coeff(q53.q2, M({{"hX2", 4}})) == 2);

    const QPolys q32 = q_polys(p32());
    CHECK(coeff(q32.q1, M({{"hY", 3}})) == 2);
    CHECK(coeff(q32.q2, M({{"hX2", 2}})) == 1);
}

TEST_CASE("point action of Z") {
    const PointAction a42 = z_point_action(p42());
    CHECK(a42.first_term == 30); // (n-r+1)!(deg Y - 1) = 6 * 5
    CHECK(a42.sigma_term == -2);
    CHECK(a42.value == -28); // 6(1-6)+2

    const PointAction a32 = z_point_action(p32());
    CHECK(a32.value == -9); // 2(1-6)+1

    // at deg Y = 1 the blowup integral vanishes and the chain collapses to
    // N = value + (n-r+1)! with no deg-Y correction left
    for (const auto& p : {p42(), p32(), p53()}) {
        const PointAction formal = point_action(p, Rational(1), p.deg_X);
        CHECK(formal.first_term == 0);
        CHECK(formal.value == factorial(p.n - p.r));
        CHECK(formal.value + factorial(p.n - p.r + 1) * Rational(1) ==
              factorial(p.n - p.r + 1) + factorial(p.n - p.r));
    }
}

TEST_CASE("identity coefficient N") {
    CHECK(identity_coefficient_N(p42()) == 8);
    CHECK(identity_coefficient_N(p32()) == 3);
    CHECK(identity_coefficient_N(p53()) == 8);
}

TEST_CASE("cycle projections through the diagonal blowup") {
    const CycleProjection dus = dus_coefficient(p42(), 1);
    CHECK(dus.b_base_top == 2);   // (n-r)!
    CHECK(dus.b_exc_top == 6);    // (n-r+1)!
    CHECK(dus.value == 138);      // 2*72 - 6
    CHECK(dus.full_integral == 138);

    const CycleProjection dxs = dxs_coefficient(p42(), 1);
    CHECK(dxs.value == 6);
    CHECK(dxs.center == -6);

    CHECK(dxs_coefficient(PaperParams::make(5, 2, {2, 3}), 2).value == 24);
    CHECK(dxs_coefficient(p32(), 0).value == 2);
}

TEST_CASE("Z acting on U x X") {
    CHECK(z_on_cycle(p42(), 1) == -132); // -(2*72 - 2*6)
    CHECK(z_on_cycle(p32(), 0) == -56);  // -(1*60 - 2*2)

    // root of the closed form: deg X = 2(n-r+1)!/(n-r)!
    CHECK(z_on_cycle_core(p42(), 1, Rational(6)) == 0);
    CHECK(z_on_cycle_core(p32(), 0, Rational(4)) == 0);
}

TEST_CASE("theorem chain residual") {
    CHECK(theorem_chain_residual(p42(), 1) == 4); // (n-r)!(n-r) = 2*2
    CHECK(theorem_chain_residual(p32(), 0) == 1);
    CHECK(theorem_chain_residual(PaperParams::make(5, 4, {2, 2, 2, 3}), 0) == 1);
    for (const auto& p : {p42(), p32(), p53()}) {
        const Rational res = theorem_chain_residual(p, 0);
        CHECK(res == factorial(p.n - p.r + 1) - factorial(p.n - p.r));
        CHECK(res != 0);
    }
}

TEST_CASE("cycle results are independent of w") {
    for (const auto& p : {p42(), p53()}) {
        const Rational dus0 = dus_coefficient(p, 0).value;
        const Rational dxs0 = dxs_coefficient(p, 0).value;
        const Rational z0 = z_on_cycle(p, 0);
        const Rational res0 = theorem_chain_residual(p, 0);
        for (int w = 1; w <= p.n - 2; ++w) {
            CHECK(dus_coefficient(p, w).value == dus0);
            CHECK(dxs_coefficient(p, w).value == dxs0);
            CHECK(z_on_cycle(p, w) == z0);
            CHECK(theorem_chain_residual(p, w) == res0);
        }
    }
}

TEST_CASE("point-action internal consistency over the default grid shape") {
    const struct {
        int n, r;
        std::vector<int> degrees;
    } rows[] = {{3, 2, {2, 3}},    {4, 2, {2, 3}},    {4, 3, {2, 2, 3}},
                {5, 2, {2, 3}},    {5, 3, {2, 2, 3}}, {5, 4, {2, 2, 2, 3}}};
    for (const auto& row : rows) {
        const PaperParams p = PaperParams::make(row.n, row.r, row.degrees);
        const Rational f_big = factorial(p.n - p.r + 1);
        const Rational f_small = factorial(p.n - p.r);
        CHECK(z_point_action(p).value + f_big * p.deg_Y == f_big + f_small);
        CHECK(identity_coefficient_N(p) == f_big + f_small);
    }
}

TEST_CASE("every registered check passes on representative tuples") {
    for (const auto& p : {p42(), p32(), p53()})
        for (const auto& info : check_registry()) {
            const auto results = info.run(p);
            CHECK(!results.empty());
            for (const auto& r : results) {
                INFO(info.name << " / " << r.name << ": expected " << r.expected
                               << " computed " << r.computed);
                CHECK(r.pass);
            }
        }
}
