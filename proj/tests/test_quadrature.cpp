#include <doctest.h>

#include <atomic>

#include "lerch/quadrature.hpp"
#include "oracle_helpers.hpp"

using namespace lerch;
using namespace lerch::quadrature;
using oracle::kPi;
using oracle::rel_err;

namespace {
double cot_pi(double u) { return std::cos(kPi * u) / std::sin(kPi * u); }
}  // namespace

TEST_CASE("constant integrand") {
    auto r = integrate_open<double>([](double) { return Cd{1.0}; });
    CHECK(r.value.re == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::fabs(r.value.im) < 1e-15);
}

TEST_CASE("sin(2 pi u) cot(pi u) integrates to 1") {
    // sin(2 pi u) cot(pi u) = 2 cos^2(pi u), whose integral over (0,1) is 1
    auto r = integrate_open<double>(
        [](double u) { return Cd{std::sin(2 * kPi * u) * cot_pi(u)}; });
    CHECK(r.value.re == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bracket-shaped integrand against a fine-grid reference") {
    // (u^2 - u) cot(pi u): vanishes linearly at both endpoints, like the
    // integral representations' brackets
    auto f = [](double u) { return Cd{(u * u - u) * cot_pi(u)}; };
    auto r = integrate_open<double>(f);
    Cd ref = oracle::midpoint_reference(f, 1u << 21);
    CHECK(std::fabs(r.value.re - ref.re) < 1e-9);
}

TEST_CASE("linearity") {
    QuadratureSpec spec;
    auto f = [](double u) { return Cd{std::sin(2 * kPi * u) * cot_pi(u)}; };
    auto g = [](double u) { return Cd{u * u}; };
    const double alpha = 2.25, beta = -0.75;
    auto combo = integrate_open<double>(
        [&](double u) { return f(u) * alpha + g(u) * beta; }, spec);
    auto fi = integrate_open<double>(f, spec);
    auto gi = integrate_open<double>(g, spec);
    Cd expect = fi.value * alpha + gi.value * beta;
    CHECK(mag(combo.value - expect) < 10 * spec.rel_tol * (1.0 + mag(expect)));
}

TEST_CASE("tightening the tolerance never degrades accuracy") {
    auto f = [](double u) { return Cd{(u * u - u) * cot_pi(u)}; };
    Cd ref = oracle::midpoint_reference(f, 1u << 22);
    double prev_err = 1e9;
    for (double tol : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10}) {
        QuadratureSpec spec;
        spec.rel_tol = tol;
        auto r = integrate_open<double>(f, spec);
        double err = std::fabs(r.value.re - ref.re);
        CHECK(err <= prev_err * 1.0001 + 1e-10);
        prev_err = err;
    }
}

TEST_CASE("the integrand is never sampled at or beyond the endpoints") {
    std::atomic<bool> violated{false};
    QuadratureSpec spec;
    spec.rel_tol = 1e-12;
    auto r = integrate_open<double>(
        [&](double u) {
            if (u <= 0.0 || u >= 1.0) violated = true;
            return Cd{(u * u - u) * cot_pi(u)};
        },
        spec);
    (void)r;
    CHECK(!violated.load());
}

TEST_CASE("spec validation") {
    QuadratureSpec spec;
    spec.order = 1;
    CHECK_THROWS_AS(integrate_open<double>([](double) { return Cd{1.0}; }, spec),
                    std::domain_error);
    spec.order = 15;
    spec.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_open<double>([](double) { return Cd{1.0}; }, spec),
                    std::domain_error);
}

TEST_CASE("endpoint guard clips the domain") {
    QuadratureSpec spec;
    spec.endpoint_guard = 0.25;
    auto r = integrate_open<double>([](double) { return Cd{1.0}; }, spec);
    CHECK(r.value.re == doctest::Approx(0.5).epsilon(1e-12));
    spec.endpoint_guard = 0.6;
    CHECK_THROWS_AS(integrate_open<double>([](double) { return Cd{1.0}; }, spec),
                    std::domain_error);
}

TEST_CASE("divergent integrand raises the non-convergence signal") {
    // u cot(pi u) has a non-integrable pole at u = 1
    QuadratureSpec spec;
    spec.max_subdiv = 200;
    CHECK_THROWS_AS(
        integrate_open<double>([](double u) { return Cd{u * cot_pi(u)}; }, spec),
        ConvergenceError);
}

TEST_CASE("serial and parallel paths are bitwise identical") {
    auto f = [](double u) {
        return Cd{std::sin(2 * kPi * u) * cot_pi(u), (u * u - u) * cot_pi(u)};
    };
    QuadratureSpec ser, par;
    ser.parallel = false;
    par.parallel = true;
    ser.rel_tol = par.rel_tol = 1e-11;
    auto a = integrate_open<double>(f, ser);
    auto b = integrate_open<double>(f, par);
    CHECK(a.value.re == b.value.re);
    CHECK(a.value.im == b.value.im);
    CHECK(a.condition == b.condition);
}

TEST_CASE("gauss-legendre nodes are interior and integrate polynomials exactly") {
    for (int n : {4, 9, 15, 31}) {
        auto rule = gauss_legendre<double>(n);
        for (double x : rule.nodes) {
            CHECK(x > -1.0);
            CHECK(x < 1.0);
        }
        // degree 2n-1 exactness on a monomial
        double acc = 0.0;
        int dgr = 2 * n - 1;
        for (int i = 0; i < n; ++i)
            acc += rule.weights[i] * std::pow(rule.nodes[i], dgr - 1);
        CHECK(acc == doctest::Approx(2.0 / dgr).epsilon(1e-12));
    }
}

TEST_CASE("dd quadrature reaches tighter tolerances than double") {
    auto f = [](DDouble u) {
        DDouble s, c;
        sincos(constants<DDouble>::pi() * u, s, c);
        DDouble s2, c2;
        sincos(constants<DDouble>::two_pi() * u, s2, c2);
        return Cdd{s2 * (c / s)};
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-20;
    auto r = integrate_open<DDouble>(f, spec);
    CHECK(std::fabs(to_double(r.value.re - DDouble(1.0))) < 1e-18);
}
