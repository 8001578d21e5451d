#include <doctest.h>

#include "lerch/trigderiv.hpp"
#include "oracle_helpers.hpp"

using namespace lerch;
using namespace lerch::trigderiv;
using oracle::kPi;
using oracle::rel_err;

namespace {
std::vector<long long> coeffs_ll(const CotPolynomial& p) {
    std::vector<long long> v;
    for (const auto& c : p.coeffs) v.push_back(static_cast<long long>(c));
    return v;
}
}  // namespace

TEST_CASE("cot_poly small orders") {
    CHECK(coeffs_ll(cot_poly(0)) == std::vector<long long>{0, 1});
    CHECK(coeffs_ll(cot_poly(1)) == std::vector<long long>{-1, 0, -1});
    CHECK(coeffs_ll(cot_poly(2)) == std::vector<long long>{0, 2, 0, 2});
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(cot_poly(k).coeffs.size() == k + 2);  // degree k+1
}

TEST_CASE("csc_poly small orders") {
    CHECK(coeffs_ll(csc_poly(0)) == std::vector<long long>{1});
    CHECK(coeffs_ll(csc_poly(1)) == std::vector<long long>{0, -1});
    CHECK(coeffs_ll(csc_poly(2)) == std::vector<long long>{1, 0, 2});
}

TEST_CASE("oracle polynomials agree with finite differences of cot/csc") {
    const double y = 0.9;
    auto cot_fn = [](double t) { return std::cos(t) / std::sin(t); };
    auto csc_fn = [](double t) { return 1.0 / std::sin(t); };
    // first derivative by Richardson FD, higher orders by FD of the oracle
    double d1 = oracle::fd_derivative(cot_fn, y);
    CHECK(rel_err(cot_poly(1).eval(cot_fn(y)), d1) < 1e-9);
    double d1c = oracle::fd_derivative(csc_fn, y);
    CHECK(rel_err(csc_poly(1).eval(cot_fn(y)) * csc_fn(y), d1c) < 1e-9);
    for (unsigned k = 1; k <= 5; ++k) {
        auto fk = [&](double t) { return cot_poly(k - 1).eval(std::cos(t) / std::sin(t)); };
        CHECK(rel_err(cot_poly(k).eval(cot_fn(y)), oracle::fd_derivative(fk, y)) < 1e-8);
    }
}

TEST_CASE("cot_deriv examples") {
    CHECK(cot_deriv(0u, 1.0, kPi / 4).value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(cot_deriv(1u, 1.0, kPi / 4).value.re == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(cot_deriv(2u, 1.0, kPi / 4).value.re == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(cot_deriv(1u, 3.0, kPi / 6).value.re == doctest::Approx(-3.0).epsilon(1e-12));
    auto o = cot_deriv_oracle(3u, 2.0, 0.37, 0.11);
    auto f = cot_deriv(3u, 2.0, 0.37, 0.11);
    CHECK(rel_err(f.value.re, o) < 1e-11);
    CHECK_THROWS_AS(cot_deriv(1u, 1.0, kPi), std::domain_error);
}

TEST_CASE("cot_deriv_adamchik examples and agreement with the polylog form") {
    CHECK(cot_deriv_adamchik(1u, 1.0, kPi / 4).value.re == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(cot_deriv_adamchik(2u, 1.0, kPi / 4).value.re == doctest::Approx(4.0).epsilon(1e-12));
    // chain rule: d/dx cot(3x) at pi/6 = -3 csc^2(pi/2) = -3
    CHECK(cot_deriv_adamchik(1u, 3.0, kPi / 6).value.re == doctest::Approx(-3.0).epsilon(1e-12));
    for (unsigned k = 1; k <= 10; ++k)
        for (double x : {0.3, 0.7, 1.1}) {
            auto ad = cot_deriv_adamchik(k, 1.3, x);
            auto cf = cot_deriv(k, 1.3, x);
            double scale = std::max(1.0, std::max(ad.condition, cf.condition));
            CHECK(rel_err(ad.value, cf.value) / scale < 1e-10);
        }
    CHECK_THROWS_AS(cot_deriv_adamchik(0u, 1.0, 0.5), std::domain_error);
}

TEST_CASE("csc_deriv examples") {
    CHECK(csc_deriv(0u, 1.0, kPi / 2).value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::fabs(csc_deriv(1u, 1.0, kPi / 2).value.re) < 1e-12);
    auto o = csc_deriv_oracle(2u, 1.0, kPi / 3);
    auto f = csc_deriv(2u, 1.0, kPi / 3);
    CHECK(rel_err(f.value.re, o) < 1e-11);
}

TEST_CASE("tan_deriv examples") {
    CHECK(tan_deriv(1u, 1.0, 0.0).value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(tan_deriv(0u, 1.0, kPi / 4).value.re == doctest::Approx(1.0).epsilon(1e-13));
    auto o = tan_deriv_oracle(4u, 1.3, 0.2, -0.05);
    auto f = tan_deriv(4u, 1.3, 0.2, -0.05);
    CHECK(rel_err(f.value.re, o) < 1e-11);
    CHECK_THROWS_AS(tan_deriv(1u, 1.0, kPi / 2), std::domain_error);
}

TEST_CASE("sec_deriv examples") {
    CHECK(sec_deriv(0u, 1.0, 0.0).value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sec_deriv(2u, 1.0, 0.0).value.re == doctest::Approx(1.0).epsilon(1e-12));
    auto o = sec_deriv_oracle(3u, 0.9, 0.4, 0.2);
    auto f = sec_deriv(3u, 0.9, 0.4, 0.2);
    CHECK(rel_err(f.value.re, o) < 1e-11);
}

TEST_CASE("all four derivative families match their oracles across orders") {
    const double a = 1.7, x = 0.45, s = 0.21;
    for (unsigned k = 0; k <= 10; ++k) {
        auto c = cot_deriv(k, a, x, s);
        CHECK(rel_err(c.value.re, cot_deriv_oracle(k, a, x, s)) /
                  std::max(1.0, c.condition) < 1e-9);
        auto cs = csc_deriv(k, a, x, s);
        CHECK(rel_err(cs.value.re, csc_deriv_oracle(k, a, x, s)) /
                  std::max(1.0, cs.condition) < 1e-9);
        auto t = tan_deriv(k, a, x, s);
        CHECK(rel_err(t.value.re, tan_deriv_oracle(k, a, x, s)) /
                  std::max(1.0, t.condition) < 1e-9);
        auto se = sec_deriv(k, a, x, s);
        CHECK(rel_err(se.value.re, sec_deriv_oracle(k, a, x, s)) /
                  std::max(1.0, se.condition) < 1e-9);
        // imaginary residue stays at roundoff level
        CHECK(std::fabs(c.value.im) <= 1e-10 * (1.0 + std::fabs(c.value.re)));
        CHECK(std::fabs(t.value.im) <= 1e-10 * (1.0 + std::fabs(t.value.re)));
    }
}

TEST_CASE("tangent reflection tan^(k) = -cot^(k) at the arc shifted by pi/2") {
    for (unsigned k = 0; k <= 8; ++k)
        for (double x : {0.2, 0.6, 1.0}) {
            auto t = tan_deriv(k, 1.1, x);
            auto c = cot_deriv(k, 1.1, x, kPi / 2);
            double scale = std::max(1.0, std::max(t.condition, c.condition));
            CHECK(rel_err(t.value, -c.value) / scale < 1e-10);
        }
}

TEST_CASE("exp_ratio_deriv_at_zero") {
    auto e1 = exp_ratio_deriv_at_zero(1, Cd{1.0}, Cd{oracle::kLn2});
    CHECK(e1.value.re == doctest::Approx(1.0).epsilon(1e-13));
    auto e1a = exp_ratio_deriv_at_zero(1, Cd{5.0}, Cd{oracle::kLn2});
    CHECK(e1a.value.re == doctest::Approx(1.0).epsilon(1e-13));  // a-independent at k=1
    auto e2 = exp_ratio_deriv_at_zero(2, Cd{1.0}, Cd{0.0, kPi});
    CHECK(e2.value.re == doctest::Approx(0.5).epsilon(1e-12));

    // second-order finite differences of the defining function
    for (Cd a : {Cd{1.0}, Cd{0.7, 0.2}})
        for (Cd b : {Cd{0.9}, Cd{0.5, 0.8}}) {
            auto g = [&](double t) {
                return Cd{t} / (exp(a * t + b) - Cd{1.0});
            };
            const double h = 1e-2;
            Cd d1 = (g(-2 * h) - g(2 * h) + (g(h) - g(-h)) * 8.0) / Cd{12.0 * h};
            Cd d2 = (-(g(2 * h) + g(-2 * h)) + (g(h) + g(-h)) * 16.0 - g(0.0) * 30.0) /
                    Cd{12.0 * h * h};
            CHECK(rel_err(exp_ratio_deriv_at_zero(1, a, b).value, d1) < 1e-7);
            CHECK(rel_err(exp_ratio_deriv_at_zero(2, a, b).value, d2) < 1e-7);
        }

    CHECK_THROWS_AS(exp_ratio_deriv_at_zero(1, Cd{1.0}, Cd{0.0}), std::domain_error);
    CHECK_THROWS_AS(exp_ratio_deriv_at_zero(0, Cd{1.0}, Cd{1.0}), std::domain_error);
}

TEST_CASE("central finite difference of order k-1 matches order k") {
    const double h = 1e-5;
    for (unsigned k = 1; k <= 5; ++k)
        for (double x : {0.35, 0.8}) {
            double plus = cot_deriv(k - 1, 1.0, x + h).value.re;
            double minus = cot_deriv(k - 1, 1.0, x - h).value.re;
            double fd = (plus - minus) / (2 * h);
            double val = cot_deriv(k, 1.0, x).value.re;
            CHECK(std::fabs(fd - val) / std::max(1.0, std::fabs(val)) < 1e-5);
        }
}
