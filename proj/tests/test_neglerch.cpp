#include <doctest.h>

#include "lerch/neglerch.hpp"
#include "oracle_helpers.hpp"

using namespace lerch;
using namespace lerch::neglerch;
using oracle::rel_err;

TEST_CASE("polylog_neg_stirling matches closed forms and the series oracle") {
    CHECK(polylog_neg_stirling(0, Cd{0.5}).value.re == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(polylog_neg_stirling(1, Cd{-1.0}).value.re == doctest::Approx(-0.25).epsilon(1e-14));

    auto li_i = polylog_neg_stirling(1, Cd{0.0, 1.0});  // i/(1-i)^2 = -1/2
    CHECK(li_i.value.re == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::fabs(li_i.value.im) < 1e-14);

    for (unsigned m = 0; m <= 8; ++m)
        for (Cd z : {Cd{0.4}, Cd{-0.6}, Cd{0.3, 0.4}, Cd{-0.2, -0.5}}) {
            auto want = oracle::polylog_neg_series(m, z);
            CHECK(rel_err(polylog_neg_stirling(m, z).value, want.value) < want.tol());
        }
}

TEST_CASE("polylog_neg_closed examples and cross-method agreement") {
    CHECK(polylog_neg_closed(0, Cd{0.5}).value.re == doctest::Approx(1.0).epsilon(1e-14));
    auto z2 = polylog_neg_closed(2, Cd{-1.0});  // z(1+z)/(1-z)^3 = 0 at z=-1
    CHECK(mag(z2.value) < 1e-13);

    auto a = polylog_neg_closed(3, Cd{1.0 / 3.0});
    auto b = polylog_neg_stirling(3, Cd{1.0 / 3.0});
    CHECK(rel_err(a.value, b.value) < 1e-12 * std::max(1.0, a.condition));

    for (unsigned m = 0; m <= 12; ++m)
        for (Cd z : {Cd{0.4}, Cd{-1.7}, Cd{0.3, 1.2}, Cd{2.5, -0.8}, Cd{0.0, 0.7}}) {
            auto s = polylog_neg_stirling(m, z);
            auto c = polylog_neg_closed(m, z);
            double scale = std::max(1.0, std::max(s.condition, c.condition));
            CHECK(rel_err(s.value, c.value) / scale < 1e-9);
        }
}

TEST_CASE("polylog_neg_transf examples and agreement") {
    CHECK(polylog_neg_transf(1, Cd{0.5}).value.re == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(polylog_neg_transf(1, Cd{-1.0}).value.re == doctest::Approx(-0.25).epsilon(1e-14));

    auto t4 = polylog_neg_transf(4, Cd{0.0, 2.0});
    auto s4 = polylog_neg_stirling(4, Cd{0.0, 2.0});
    double scale = std::max(1.0, std::max(t4.condition, s4.condition));
    CHECK(rel_err(t4.value, s4.value) / scale < 1e-10);

    CHECK_THROWS_AS(polylog_neg_transf(0, Cd{0.5}), std::domain_error);
}

TEST_CASE("lerch_neg closed form") {
    CHECK(lerch_neg(0, Cd{0.5}, Cd{123.0}).value.re == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(lerch_neg(1, Cd{0.5}, Cd{1.0}).value.re == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(lerch_neg(1, Cd{0.5}, Cd{3.0}).value.re == doctest::Approx(8.0).epsilon(1e-14));

    for (unsigned m = 0; m <= 8; ++m)
        for (Cd z : {Cd{0.45}, Cd{-0.55}, Cd{0.2, 0.4}})
            for (Cd u : {Cd{1.0}, Cd{0.5}, Cd{-0.7, 0.3}, Cd{2.0, -1.0}}) {
                auto want = oracle::lerch_neg_series(m, z, u);
                auto got = lerch_neg(m, z, u);
                double scale = std::max(1.0, got.condition);
                CHECK(rel_err(got.value, want.value) / scale < want.tol());
            }

    CHECK_THROWS_AS(lerch_neg(2, Cd{1.0 + 1e-14}, Cd{1.0}), std::domain_error);
}

TEST_CASE("lerch_neg_cot_form matches the z-parameterization") {
    // Phi(-i, 0, 1) = 1/(1+i) = (1 - i)/2
    auto r1 = lerch_neg_cot_form(1, Cd{0.25}, Cd{0.0});
    CHECK(r1.value.re == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r1.value.im == doctest::Approx(-0.5).epsilon(1e-13));

    // Phi(-1, -1, 1) = 1/4
    auto r2 = lerch_neg_cot_form(2, Cd{0.5}, Cd{0.0});
    CHECK(r2.value.re == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(std::fabs(r2.value.im) < 1e-13);

    for (unsigned k : {1u, 2u, 3u, 5u})
        for (Cd b : {Cd{0.3}, Cd{0.41, 0.1}, Cd{0.77, -0.2}})
            for (Cd u : {Cd{0.5}, Cd{-0.3, 0.6}}) {
                auto viaCot = lerch_neg_cot_form(k, b, u);
                auto viaZ = lerch_neg(k - 1, unit_phase(b), u + Cd{1.0});
                double scale = std::max(1.0, std::max(viaCot.condition, viaZ.condition));
                CHECK(rel_err(viaCot.value, viaZ.value) / scale < 1e-11);
            }

    CHECK_THROWS_AS(lerch_neg_cot_form(2, Cd{1.0 + 1e-14}, Cd{0.0}), std::domain_error);
}

TEST_CASE("lerch_pos_series against the defining series") {
    // eta(2) = pi^2/12 at z=-1, u=1
    auto e2 = lerch_pos_series(2, Cd{-1.0}, Cd{1.0}, 1e-12);
    CHECK(e2.value.re == doctest::Approx(oracle::kPi * oracle::kPi / 12.0).epsilon(1e-10));

    auto s = lerch_pos_series(2, Cd{1.0 / 3.0}, Cd{2.0}, 1e-12);
    Cd want = oracle::lerch_pos_series_direct(2, Cd{1.0 / 3.0}, Cd{2.0});
    CHECK(rel_err(s.value, want) < 1e-10);

    auto s3 = lerch_pos_series(3, Cd{-0.8, 0.2}, Cd{0.7}, 1e-12);
    Cd want3 = oracle::lerch_pos_series_direct(3, Cd{-0.8, 0.2}, Cd{0.7});
    CHECK(rel_err(s3.value, want3) < 1e-10);

    // |z/(z-1)| = 1 exactly at z = 1/2: rejected by the convergence guard
    CHECK_THROWS_AS(lerch_pos_series(1, Cd{0.5}, Cd{1.0}, 1e-6), std::domain_error);
    // u at a non-positive integer
    CHECK_THROWS_AS(lerch_pos_series(2, Cd{-1.0}, Cd{0.0}, 1e-6), std::domain_error);
    CHECK_THROWS_AS(lerch_pos_series(2, Cd{-1.0}, Cd{-3.0}, 1e-6), std::domain_error);
}

TEST_CASE("lerch_pos_series signals non-convergence at the cap") {
    // |w| ~ 0.9984 needs tens of thousands of terms for 1e-12; the 10000-term cap trips first
    CHECK_THROWS_AS(lerch_pos_series(2, Cd{0.4996}, Cd{1.0}, 1e-12), ConvergenceError);
}

TEST_CASE("sum_polylog_identity") {
    auto [l1, r1] = sum_polylog_identity(1, Cd{0.5}, Cd{1.0});
    CHECK(l1.value.re == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(r1.value.re == doctest::Approx(3.0).epsilon(1e-13));

    auto [l0, r0] = sum_polylog_identity(0, Cd{0.5}, Cd{0.0});
    CHECK(l0.value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r0.value.re == doctest::Approx(1.0).epsilon(1e-13));

    auto [l5, r5] = sum_polylog_identity(5, Cd{0.0, 0.7}, Cd{-1.0 / 3.0});
    double scale = std::max(1.0, std::max(l5.condition, r5.condition));
    CHECK(rel_err(l5.value, r5.value) / scale < 1e-11);
}

TEST_CASE("sum_lerch_identity") {
    for (Cd z : {Cd{0.5}, Cd{-2.0}, Cd{0.1, 0.8}}) {
        auto [l0, r0] = sum_lerch_identity(0, z, Cd{0.9}, Cd{0.4});
        Cd want = Cd{1.0} / (Cd{1.0} - z);
        CHECK(rel_err(l0.value, want) < 1e-12);
        CHECK(rel_err(r0.value, want) < 1e-12);
    }
    auto [l1, r1] = sum_lerch_identity(1, Cd{0.5}, Cd{1.0}, Cd{1.0});
    CHECK(l1.value.re == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(r1.value.re == doctest::Approx(6.0).epsilon(1e-13));

    auto [l4, r4] = sum_lerch_identity(4, Cd{-2.0}, Cd{0.4}, Cd{1.1});
    double scale = std::max(1.0, std::max(l4.condition, r4.condition));
    CHECK(rel_err(l4.value, r4.value) / scale < 1e-11);
}

TEST_CASE("recurrence Phi(z,-m,u) = u^m + z Phi(z,-m,u+1)") {
    for (unsigned m : {0u, 1u, 3u, 7u, 10u})
        for (Cd z : {Cd{0.5}, Cd{-1.3}, Cd{0.2, 0.9}})
            for (Cd u : {Cd{0.4}, Cd{-1.2, 0.5}}) {
                auto lhs = lerch_neg(m, z, u);
                auto rhs = lerch_neg(m, z, u + Cd{1.0});
                Cd expect = pow_int(u, m) + z * rhs.value;
                double scale = std::max(1.0, std::max(lhs.condition, rhs.condition));
                CHECK(rel_err(lhs.value, expect) / scale < 1e-11);
            }
}

TEST_CASE("reduction z Phi(z,-m,1) = Li_{-m}(z)") {
    for (unsigned m = 0; m <= 10; ++m)
        for (Cd z : {Cd{0.6}, Cd{-0.8, 0.3}, Cd{2.0, 1.0}}) {
            auto phi = lerch_neg(m, z, Cd{1.0});
            auto li = polylog_neg_stirling(m, z);
            double scale = std::max(1.0, std::max(phi.condition, li.condition));
            CHECK(rel_err(z * phi.value, li.value) / scale < 1e-11);
        }
}

TEST_CASE("conjugate symmetry") {
    for (unsigned m : {0u, 2u, 5u, 9u})
        for (Cd z : {Cd{0.3, 0.6}, Cd{-1.1, -0.4}})
            for (Cd u : {Cd{0.8, 0.1}, Cd{-0.5, -0.9}}) {
                auto a = lerch_neg(m, conj(z), conj(u));
                auto b = lerch_neg(m, z, u);
                double scale = std::max(1.0, std::max(a.condition, b.condition));
                CHECK(rel_err(a.value, conj(b.value)) / scale < 1e-12);
            }
}

TEST_CASE("condition reporting flags the cancellation-heavy cases") {
    // low order: little cancellation; high order: the inner alternating
    // sums lose many digits and the report says so
    auto tame = lerch_neg(3, Cd{-0.5}, Cd{0.3});
    auto harsh = lerch_neg(24, Cd{1.4}, Cd{0.3});
    CHECK(tame.condition < 1e3);
    CHECK(harsh.condition > 1e4);
    CHECK(tame.condition < harsh.condition);
    CHECK(tame.method == Method::lerch_closed);
}

TEST_CASE("dd evaluation recovers digits lost to cancellation in double") {
    // m = 24 at z nearish 1 is badly conditioned in double
    const Cd zd{1.35, 0.05};
    const Cd ud{0.4, 0.0};
    auto d = lerch_neg(24, zd, ud);
    auto dd = lerch_neg(24, Cdd{DDouble(zd.re), DDouble(zd.im)},
                        Cdd{DDouble(ud.re), DDouble(ud.im)});
    // dd result is the reference; double must be off by roughly eps*condition
    double dd_re = to_double(dd.value.re);
    double rel = std::fabs(d.value.re - dd_re) / std::fabs(dd_re);
    CHECK(rel < 1e-16 * d.condition * 100);
    CHECK(rel > 1e-16);  // cancellation really does cost digits here
    CHECK(d.condition > 1e3);
}
