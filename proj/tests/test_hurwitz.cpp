#include <doctest.h>

#include "lerch/hurwitz.hpp"
#include "oracle_helpers.hpp"

using namespace lerch;
using namespace lerch::hurwitz;
using oracle::kPi;
using oracle::rel_err;

namespace {
const PrecisionConfig cfg;
const quadrature::QuadratureSpec qs;  // defaults: order 15, 1e-10, 2000
}  // namespace

TEST_CASE("series oracle hits the classic constants") {
    CHECK(hurwitz_series(Cd{2.0}, Cd{1.0}, 1e-13).value.re ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(hurwitz_series(Cd{2.0}, Cd{0.5}, 1e-13).value.re ==
          doctest::Approx(kPi * kPi / 2.0).epsilon(1e-13));
    CHECK(hurwitz_series(Cd{4.0}, Cd{1.0}, 1e-13).value.re ==
          doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-13));
    CHECK(hurwitz_series(Cd{3.0}, Cd{1.0}, 1e-13).value.re ==
          doctest::Approx(oracle::kZeta3).epsilon(1e-13));
    // zeta(2, 1/4) = pi^2 + 8 Catalan
    CHECK(hurwitz_series(Cd{2.0}, Cd{0.25}, 1e-13).value.re ==
          doctest::Approx(kPi * kPi + 8.0 * oracle::kCatalan).epsilon(1e-13));
}

TEST_CASE("series oracle agrees with raw summation for complex inputs") {
    for (Cd k : {Cd{2.0}, Cd{3.5}, Cd{2.0, 0.7}})
        for (Cd b : {Cd{0.3}, Cd{0.26, 0.05}, Cd{1.7, -0.3}}) {
            Cd want = oracle::hurwitz_direct(k, b);
            auto got = hurwitz_series(k, b, 1e-12);
            CHECK(rel_err(got.value, want) < 3e-9);  // raw tail is the limit
        }
}

TEST_CASE("series oracle rejects bad inputs") {
    CHECK_THROWS_AS(hurwitz_series(Cd{1.0}, Cd{0.5}, 1e-10), std::domain_error);
    CHECK_THROWS_AS(hurwitz_series(Cd{2.0}, Cd{0.0}, 1e-10), std::domain_error);
    CHECK_THROWS_AS(hurwitz_series(Cd{2.0}, Cd{-3.0}, 1e-10), std::domain_error);
}

TEST_CASE("integral_v1 against the series oracle") {
    auto anchor = hurwitz_integral_v1(2, Cd{0.25}, qs, cfg);
    CHECK(std::fabs(anchor.value.re - 17.1973291548) < 2e-6);
    CHECK(std::fabs(anchor.value.im) < 1e-10);

    for (int k : {2, 3, 4})
        for (Cd b : {Cd{0.25}, Cd{1.0 / 3.0}, Cd{0.7}, Cd{0.3, 0.1}}) {
            auto want = hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12);
            auto got = hurwitz_integral_v1(k, b, qs, cfg);
            CHECK(rel_err(got.value, want.value) < 1e-8);
        }
    CHECK_THROWS_AS(hurwitz_integral_v1(1, Cd{0.3}, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(hurwitz_integral_v1(2, Cd{1.0}, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(hurwitz_integral_v1(2, Cd{0.3, 1.5}, qs, cfg), std::overflow_error);
}

TEST_CASE("elementary form matches v1 and the oracle") {
    for (int k : {2, 5})
        for (Cd b : {Cd{0.25}, Cd{2.0 / 3.0}, Cd{1.0 / 3.0}}) {
            auto want = hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12);
            auto el = hurwitz_elementary(k, b, qs, cfg);
            CHECK(rel_err(el.value, want.value) < 1e-8);
            auto v1 = hurwitz_integral_v1(k, b, qs, cfg);
            CHECK(rel_err(el.value, v1.value) < 1e-9);
        }
}

TEST_CASE("half-integer form") {
    auto h2 = hurwitz_half_integer(2, 0.5, qs, cfg);
    CHECK(h2.value.re == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-10));
    auto h3 = hurwitz_half_integer(3, 0.5, qs, cfg);
    CHECK(h3.value.re == doctest::Approx(7.0 * oracle::kZeta3).epsilon(1e-10));
    auto h4 = hurwitz_half_integer(4, 1.5, qs, cfg);
    auto want = hurwitz_series(Cd{4.0}, Cd{1.5}, 1e-12);
    CHECK(rel_err(h4.value, want.value) < 1e-8);

    CHECK_THROWS_AS(hurwitz_half_integer(2, 0.4, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(hurwitz_half_integer(2, 1.0, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(hurwitz_half_integer(2, -0.5, qs, cfg), std::domain_error);
}

TEST_CASE("half-integer b through the generic methods agrees") {
    // integral_v1/elementary only exclude integers, so they overlap the
    // half-integer specialization at b = 3/2
    auto hi = hurwitz_half_integer(3, 1.5, qs, cfg);
    auto v1 = hurwitz_integral_v1(3, Cd{1.5}, qs, cfg);
    auto el = hurwitz_elementary(3, Cd{1.5}, qs, cfg);
    CHECK(rel_err(hi.value, v1.value) < 1e-9);
    CHECK(rel_err(hi.value, el.value) < 1e-9);
}

TEST_CASE("integral_v2 against the series oracle") {
    for (int k : {2, 3})
        for (Cd b : {Cd{0.25}, Cd{0.4}, Cd{0.26, 0.05}}) {
            auto want = hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12);
            auto got = hurwitz_integral_v2(k, b, qs, cfg);
            CHECK(rel_err(got.value, want.value) < 1e-7);
        }
    // half-integers are excluded for v2
    CHECK_THROWS_AS(hurwitz_integral_v2(2, Cd{0.5}, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(hurwitz_integral_v2(2, Cd{1.0}, qs, cfg), std::domain_error);
}

TEST_CASE("analytic_final matches v2 and the oracle") {
    for (int k : {2, 3, 4})
        for (Cd b : {Cd{0.25}, Cd{1.0 / 3.0}, Cd{0.7}}) {
            auto want = hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12);
            auto af = hurwitz_analytic_final(k, b, qs, cfg);
            CHECK(rel_err(af.value, want.value) < 1e-8);
            auto v2 = hurwitz_integral_v2(k, b, qs, cfg);
            CHECK(rel_err(af.value, v2.value) < 1e-9);
        }
}

TEST_CASE("hurwitz shift property zeta(k,b) = zeta(k,b+1) + b^-k") {
    for (int k : {2, 3, 5})
        for (Cd b : {Cd{0.3}, Cd{0.26, 0.05}}) {
            auto lhs = hurwitz_integral_v1(k, b, qs, cfg);
            auto rhs = hurwitz_integral_v1(k, b + Cd{1.0}, qs, cfg);
            Cd expect = rhs.value + Cd{1.0} / pow_int(b, static_cast<unsigned>(k));
            CHECK(rel_err(lhs.value, expect) < 1e-8);
        }
}

TEST_CASE("integrand bracket cancels at the endpoints") {
    const Cd b{0.3};
    const int k = 3;
    double mid_max = 0.0;
    for (double u = 0.4; u <= 0.6 + 1e-12; u += 0.01)
        mid_max = std::max(mid_max, mag(integral_v1_bracket(k, b, u, cfg)));
    CHECK(mag(integral_v1_bracket(k, b, 1e-6, cfg)) <= 1e-4 * mid_max);
    CHECK(mag(integral_v1_bracket(k, b, 1.0 - 1e-6, cfg)) <= 1e-4 * mid_max);
}

TEST_CASE("generating function") {
    // f(x)/x^2 -> zeta(2,b) as x -> 0; the first-order truncation term is
    // x zeta(3,b)/zeta(2,b) = 0.0311 at x = 0.01, b = 0.3
    auto g = genfunc_f(Cd{0.01}, Cd{0.3}, qs, cfg);
    auto z2 = hurwitz_series(Cd{2.0}, Cd{0.3}, 1e-12);
    auto z3 = hurwitz_series(Cd{3.0}, Cd{0.3}, 1e-12);
    double trunc = 0.01 * z3.value.re / z2.value.re;
    CHECK(std::fabs(g.value.re / 1e-4 - z2.value.re) / z2.value.re < 1.1 * trunc);
    CHECK(std::fabs(g.value.re / 1e-4 - (z2.value.re + 0.01 * z3.value.re)) /
              z2.value.re < 2e-3);

    auto g5 = genfunc_f(Cd{0.05}, Cd{0.3}, qs, cfg);
    Cd acc{};
    for (int k = 2; k <= 40; ++k)
        acc += pow_int(Cd{0.05}, static_cast<unsigned>(k)) *
               hurwitz_series(Cd{static_cast<double>(k)}, Cd{0.3}, 1e-14).value;
    CHECK(mag(g5.value - acc) <= 1e-10);

    auto g0 = genfunc_f(Cd{0.0}, Cd{0.3}, qs, cfg);
    CHECK(mag(g0.value) < 1e-14);

    // complex x
    auto gc = genfunc_f(Cd{0.04, 0.02}, Cd{0.3}, qs, cfg);
    Cd accc{};
    for (int k = 2; k <= 40; ++k)
        accc += pow_int(Cd{0.04, 0.02}, static_cast<unsigned>(k)) *
                hurwitz_series(Cd{static_cast<double>(k)}, Cd{0.3}, 1e-14).value;
    CHECK(mag(gc.value - accc) <= 1e-10);

    CHECK_THROWS_AS(genfunc_f(Cd{0.05}, Cd{0.5}, qs, cfg), std::domain_error);
    CHECK_THROWS_AS(genfunc_f(Cd{0.3}, Cd{0.3}, qs, cfg), std::domain_error);
    // x - b on the half-integer grid
    CHECK_THROWS_AS(genfunc_f(Cd{0.8}, Cd{0.3}, qs, cfg), std::domain_error);
}

TEST_CASE("complex b within the cap works; beyond it signals overflow") {
    auto ok = hurwitz_integral_v2(2, Cd{0.26, 0.05}, qs, cfg);
    auto want = hurwitz_series(Cd{2.0}, Cd{0.26, 0.05}, 1e-12);
    CHECK(rel_err(ok.value, want.value) < 1e-7);
    CHECK_THROWS_AS(hurwitz_integral_v2(2, Cd{0.26, 2.0}, qs, cfg), std::overflow_error);
}

TEST_CASE("dd integral evaluation works end to end") {
    quadrature::QuadratureSpec q2;
    q2.rel_tol = 1e-16;
    auto v1 = hurwitz_integral_v1(2, Cdd{DDouble(0.25)}, q2, cfg);
    auto want = hurwitz_series(Cdd{DDouble(2.0)}, Cdd{DDouble(0.25)}, 1e-22, cfg);
    CHECK(std::fabs(to_double(v1.value.re - want.value.re)) < 1e-17);
    CHECK(std::fabs(to_double(v1.value.im)) < 1e-17);
}

TEST_CASE("dd series evaluation squares the double accuracy") {
    auto dd = hurwitz_series(Cdd{DDouble(2.0)}, Cdd{DDouble(1.0)}, 1e-26);
    DDouble pi = constants<DDouble>::pi();
    DDouble want = pi * pi / DDouble(6.0);
    CHECK(std::fabs(to_double(dd.value.re - want)) < 1e-27);
    // and the double path agrees with the dd path to double accuracy
    auto d = hurwitz_series(Cd{2.0}, Cd{1.0}, 1e-13);
    CHECK(std::fabs(d.value.re - to_double(dd.value.re)) < 1e-14);
}
