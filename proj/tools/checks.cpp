#include "checks.hpp"

#include <algorithm>
#include <cmath>

#include "cli_support.hpp"
#include "lerch/hurwitz.hpp"
#include "lerch/trigderiv.hpp"

namespace lerchcli {

using namespace lerch;
using exactmath::BigRational;
using Cd = Complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Tally {
    double worst = 0.0;
    bool pass = true;
    std::string note;

    void observe(double err, double tol) {
        worst = std::max(worst, err);
        if (!(err <= tol)) pass = false;
    }
    void observe_exact(bool equal) {
        if (!equal) {
            pass = false;
            worst = 1.0;
        }
    }
};

PropertyResult finish(const std::string& name, const Tally& t, double tol) {
    return {name, t.pass, t.worst, tol, t.note};
}

double rel_diff(Cd a, Cd b) {
    double denom = std::max(mag(a), mag(b));
    if (denom < 1e-280) return 0.0;
    return mag(a - b) / denom;
}

std::vector<BigRational> rational_grid() {
    return {BigRational(-2), BigRational(-1, 2), BigRational(0),
            BigRational(1, 3), BigRational(1), BigRational(5, 2)};
}

std::vector<BigRational> stirling_u_set() {
    return {BigRational(-2), BigRational(-7, 3), BigRational(-1), BigRational(0),
            BigRational(1, 2), BigRational(1), BigRational(3)};
}

Cd rand_z_off_one(SplitMix64& rng, double rmax = 2.0) {
    while (true) {
        Cd z{rng.uniform(-rmax, rmax), rng.uniform(-rmax, rmax)};
        if (mag(z - Cd{1.0}) >= 0.3 && mag(z) >= 0.05) return z;
    }
}

// 20 fixed z points with |z-1| >= 0.3, spread over magnitudes.
std::vector<Cd> polylog_z_grid() {
    std::vector<Cd> zs;
    const double radii[] = {0.45, 0.8, 1.6, 2.6};
    for (double r : radii) {
        for (int a = 0; a < 8 && zs.size() < 20; ++a) {
            double ang = 2.0 * kPi * (a + 0.37) / 8.0;
            Cd z{r * std::cos(ang), r * std::sin(ang)};
            if (mag(z - Cd{1.0}) >= 0.3) zs.push_back(z);
        }
    }
    return zs;
}

}  // namespace

std::vector<PropertyResult> check_exact(const CheckOptions& opt) {
    using namespace exactmath;
    std::vector<PropertyResult> out;

    {
        Tally t;
        unsigned nmax = opt.max_k ? std::min(opt.max_k, 24u) : 20u;
        for (unsigned n = 0; n <= nmax; ++n)
            for (unsigned q = 0; q <= n; ++q)
                t.observe_exact(stirling2(n, q) == stirling2_explicit(n, q));
        out.push_back(finish("stirling2_triangular_vs_explicit", t, 0.0));
    }
    {
        Tally t;
        unsigned kmax = opt.max_k ? opt.max_k : 15u;
        for (unsigned k = 0; k <= kmax; ++k)
            for (unsigned q = 0; q <= k; ++q)
                for (const auto& u : stirling_u_set()) {
                    auto [lhs, rhs] = stirling_binomial_identity(k, q, u);
                    t.observe_exact(lhs == rhs);
                }
        out.push_back(finish("stirling_binomial_identity", t, 0.0));
    }
    {
        Tally t;
        unsigned kmax = opt.max_k ? opt.max_k : 12u;
        for (unsigned k = 1; k <= kmax; ++k)
            for (unsigned q = 1; q <= k; ++q)
                for (const auto& u : stirling_u_set()) {
                    if (u == 0) continue;
                    t.observe_exact(stirling_weighted_sum_lhs(k, q, u) ==
                                    stirling_weighted_sum_rhs(k, q, u));
                }
        out.push_back(finish("stirling_weighted_sum", t, 0.0));
    }
    {
        Tally t;
        unsigned kmax = opt.max_k ? opt.max_k : 12u;
        for (unsigned k = 0; k <= kmax; ++k)
            for (const auto& u : rational_grid())
                for (const auto& v : rational_grid()) {
                    BigRational lhs = bernoulli_poly(k)(u + v);
                    BigRational rhs = 0;
                    for (unsigned j = 0; j <= k; ++j)
                        rhs += BigRational(binomial(k, j)) * bernoulli_poly(j)(v) *
                               pow_rat(u, k - j);
                    t.observe_exact(lhs == rhs);
                }
        out.push_back(finish("bernoulli_shift_recurrence", t, 0.0));
    }
    {
        Tally t;
        unsigned kmax = opt.max_k ? opt.max_k : 10u;
        for (unsigned k = 0; k <= kmax; ++k)
            for (const auto& u : rational_grid()) {
                auto [lhs, rhs] = zeta_shift_identity(k, u);
                t.observe_exact(lhs == rhs);
            }
        out.push_back(finish("zeta_shift_identity", t, 0.0));
    }
    {
        Tally t;
        unsigned kmax = opt.max_k ? std::min(opt.max_k, 8u) : 8u;
        for (unsigned k = 0; k <= kmax; ++k)
            for (const auto& x : rational_grid())
                for (const auto& y : rational_grid()) {
                    auto [lhs, rhs] = factorial_power_binomial(x, y, k);
                    t.observe_exact(lhs == rhs);
                }
        out.push_back(finish("factorial_power_binomial", t, 0.0));
    }
    {
        // literature cross-sum S(j,q)/(j!(k-j)!) = S(k+1,q+1)/k!
        Tally t;
        unsigned kmax = opt.max_k ? opt.max_k : 12u;
        for (unsigned k = 1; k <= kmax; ++k)
            for (unsigned q = 1; q <= k; ++q) {
                BigRational lhs = 0;
                for (unsigned j = q; j <= k; ++j)
                    lhs += BigRational(stirling2(j, q)) /
                           BigRational(factorial(j) * factorial(k - j));
                BigRational rhs =
                    BigRational(stirling2(k + 1, q + 1)) / BigRational(factorial(k));
                t.observe_exact(lhs == rhs);
            }
        out.push_back(finish("stirling_convolution_row", t, 0.0));
    }
    return out;
}

std::vector<PropertyResult> check_identities(const CheckOptions& opt) {
    std::vector<PropertyResult> out;
    PrecisionConfig cfg;
    cfg.guard = opt.guard;

    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned mmax = opt.max_k ? opt.max_k : 12u;
        for (const Cd& z : polylog_z_grid())
            for (unsigned m = 0; m <= mmax; ++m) {
                auto a = neglerch::polylog_neg_stirling(m, z, cfg);
                auto b = neglerch::polylog_neg_closed(m, z, cfg);
                double scale = std::max(1.0, std::max(a.condition, b.condition));
                t.observe(rel_diff(a.value, b.value) / scale, tol);
                if (m >= 1) {
                    auto c = neglerch::polylog_neg_transf(m, z, cfg);
                    double s2 = std::max(1.0, std::max(b.condition, c.condition));
                    t.observe(rel_diff(b.value, c.value) / s2, tol);
                }
            }
        out.push_back(finish("polylog_cross_method", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned kmax = opt.max_k ? opt.max_k : 8u;
        SplitMix64 rng(opt.seed);
        for (int i = 0; i < 20; ++i) {
            Cd b{rng.uniform(0.08, 0.92), rng.uniform(-0.25, 0.25)};
            Cd u{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned k = 1; k <= kmax; ++k) {
                auto a = neglerch::lerch_neg_cot_form(k, b, u, cfg);
                auto z = unit_phase(b);
                auto c = neglerch::lerch_neg(k - 1, z, u + Cd{1.0}, cfg);
                double scale = std::max(1.0, std::max(a.condition, c.condition));
                t.observe(rel_diff(a.value, c.value) / scale, tol);
            }
        }
        out.push_back(finish("lerch_cot_vs_closed", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned kmax = opt.max_k ? std::min(opt.max_k, 8u) : 8u;
        SplitMix64 rng(opt.seed ^ 0xa5a5a5a5ull);
        for (int i = 0; i < 25; ++i) {
            Cd z = rand_z_off_one(rng);
            Cd u{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned k = 0; k <= kmax; ++k) {
                auto [lhs, rhs] = neglerch::sum_polylog_identity(k, z, u, cfg);
                double scale = std::max(1.0, std::max(lhs.condition, rhs.condition));
                t.observe(rel_diff(lhs.value, rhs.value) / scale, tol);
            }
        }
        out.push_back(finish("sum_polylog_identity", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned kmax = opt.max_k ? std::min(opt.max_k, 8u) : 8u;
        SplitMix64 rng(opt.seed ^ 0x5a5a5a5a5aull);
        for (int i = 0; i < 25; ++i) {
            Cd z = rand_z_off_one(rng);
            Cd u{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            Cd v{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned k = 0; k <= kmax; ++k) {
                auto [lhs, rhs] = neglerch::sum_lerch_identity(k, z, u, v, cfg);
                double scale = std::max(1.0, std::max(lhs.condition, rhs.condition));
                t.observe(rel_diff(lhs.value, rhs.value) / scale, tol);
            }
        }
        out.push_back(finish("sum_lerch_identity", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned mmax = opt.max_k ? std::min(opt.max_k, 10u) : 10u;
        SplitMix64 rng(opt.seed ^ 0x1234567ull);
        for (int i = 0; i < 20; ++i) {
            Cd z = rand_z_off_one(rng);
            Cd u{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned m = 0; m <= mmax; ++m) {
                auto lhs = neglerch::lerch_neg(m, z, u, cfg);
                auto rhs = neglerch::lerch_neg(m, z, u + Cd{1.0}, cfg);
                Cd expect = pow_int(u, m) + z * rhs.value;
                double scale = std::max(1.0, std::max(lhs.condition, rhs.condition));
                t.observe(rel_diff(lhs.value, expect) / scale, tol);
            }
        }
        out.push_back(finish("lerch_recurrence", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        unsigned mmax = opt.max_k ? std::min(opt.max_k, 10u) : 10u;
        SplitMix64 rng(opt.seed ^ 0xdeadbeefull);
        for (int i = 0; i < 15; ++i) {
            Cd z = rand_z_off_one(rng);
            Cd u{rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned m = 0; m <= mmax; ++m) {
                auto a = neglerch::lerch_neg(m, conj(z), conj(u), cfg);
                auto b = neglerch::lerch_neg(m, z, u, cfg);
                double scale = std::max(1.0, std::max(a.condition, b.condition));
                t.observe(rel_diff(a.value, conj(b.value)) / scale, tol);
                // reduction z*Phi(z,-m,1) = Li_{-m}(z)
                auto phi1 = neglerch::lerch_neg(m, z, Cd{1.0}, cfg);
                auto li = neglerch::polylog_neg_stirling(m, z, cfg);
                double s2 = std::max(1.0, std::max(phi1.condition, li.condition));
                t.observe(rel_diff(z * phi1.value, li.value) / s2, tol);
            }
        }
        out.push_back(finish("lerch_conjugate_and_reduction", t, tol));
    }
    {
        // the inner q = m+1 sum with exponent +m is a finite difference of a
        // degree-m polynomial, hence zero
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-10;
        unsigned mmax = opt.max_k ? std::min(opt.max_k, 8u) : 8u;
        SplitMix64 rng(opt.seed ^ 0xfeedull);
        for (int i = 0; i < 10; ++i) {
            Cd u{rng.uniform(0.1, 2.0), rng.uniform(-1.0, 1.0)};
            for (unsigned m = 0; m <= mmax; ++m) {
                unsigned q = m + 1;
                Cd sum{};
                double abs_sum = 0.0;
                double binom = 1.0;
                for (unsigned j = 0; j <= q; ++j) {
                    Cd term = pow_int(u + Cd{static_cast<double>(j)}, m) * binom;
                    if (j % 2 != 0) term = -term;
                    sum += term;
                    abs_sum += mag(term);
                    binom = binom * static_cast<double>(q - j) / static_cast<double>(j + 1);
                }
                t.observe(mag(sum) / std::max(abs_sum, 1.0), tol);
            }
        }
        out.push_back(finish("series_truncation_at_negative_order", t, tol));
    }
    return out;
}

std::vector<PropertyResult> check_trig(const CheckOptions& opt) {
    std::vector<PropertyResult> out;
    PrecisionConfig cfg;
    cfg.guard = opt.guard;
    const unsigned kmax = opt.max_k ? std::min(opt.max_k, 10u) : 10u;

    auto sample_point = [](SplitMix64& rng, bool for_tan) {
        while (true) {
            double a = rng.uniform(0.5, 2.5);
            double x = rng.uniform(0.15, 1.25);
            double s = rng.uniform(-0.5, 0.5);
            double theta = a * x + s;
            double dsin = std::fabs(theta - kPi * std::round(theta / kPi));
            double dcos = std::fabs(theta - kPi * (std::round(theta / kPi - 0.5) + 0.5));
            if ((for_tan ? dcos : dsin) >= 0.1) return std::tuple{a, x, s};
        }
    };

    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-8;
        SplitMix64 rng(opt.seed ^ 0x7717ull);
        for (int i = 0; i < 25; ++i) {
            auto [a, x, s] = sample_point(rng, false);
            auto [at, xt, st] = sample_point(rng, true);
            for (unsigned k = 0; k <= kmax; ++k) {
                auto c = trigderiv::cot_deriv(k, a, x, s, cfg);
                t.observe(std::fabs(c.value.re - trigderiv::cot_deriv_oracle(k, a, x, s)) /
                              (std::max(1.0, std::fabs(c.value.re)) * std::max(1.0, c.condition)),
                          tol);
                auto cs = trigderiv::csc_deriv(k, a, x, s, cfg);
                t.observe(std::fabs(cs.value.re - trigderiv::csc_deriv_oracle(k, a, x, s)) /
                              (std::max(1.0, std::fabs(cs.value.re)) * std::max(1.0, cs.condition)),
                          tol);
                auto tn = trigderiv::tan_deriv(k, at, xt, st, cfg);
                t.observe(std::fabs(tn.value.re - trigderiv::tan_deriv_oracle(k, at, xt, st)) /
                              (std::max(1.0, std::fabs(tn.value.re)) * std::max(1.0, tn.condition)),
                          tol);
                auto se = trigderiv::sec_deriv(k, at, xt, st, cfg);
                t.observe(std::fabs(se.value.re - trigderiv::sec_deriv_oracle(k, at, xt, st)) /
                              (std::max(1.0, std::fabs(se.value.re)) * std::max(1.0, se.condition)),
                          tol);
            }
        }
        out.push_back(finish("trig_deriv_vs_symbolic_oracle", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-10;
        SplitMix64 rng(opt.seed ^ 0x9b9bull);
        for (int i = 0; i < 25; ++i) {
            auto [a, x, s] = sample_point(rng, false);
            (void)s;
            for (unsigned k = 1; k <= kmax; ++k) {
                auto ad = trigderiv::cot_deriv_adamchik(k, a, x, cfg);
                auto cf = trigderiv::cot_deriv(k, a, x, 0.0, cfg);
                if (std::max(ad.condition, cf.condition) > 1e4) {
                    // escalate to dd where double cannot carry the bound
                    auto add = trigderiv::cot_deriv_adamchik(k, DDouble(a), DDouble(x), cfg);
                    auto cfd = trigderiv::cot_deriv(k, DDouble(a), DDouble(x), DDouble(0.0), cfg);
                    t.observe(rel_diff(Cd{to_double(add.value.re), to_double(add.value.im)},
                                       Cd{to_double(cfd.value.re), to_double(cfd.value.im)}),
                              tol);
                } else {
                    t.observe(rel_diff(ad.value, cf.value), tol);
                }
            }
        }
        out.push_back(finish("adamchik_vs_polylog_form", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-8;
        SplitMix64 rng(opt.seed ^ 0x40404ull);
        unsigned krefl = std::min(kmax, 8u);
        for (int i = 0; i < 15; ++i) {
            auto [a, x, s] = sample_point(rng, true);
            (void)s;
            for (unsigned k = 0; k <= krefl; ++k) {
                auto tn = trigderiv::tan_deriv(k, a, x, 0.0, cfg);
                auto ct = trigderiv::cot_deriv(k, a, x, kPi / 2.0, cfg);
                double scale = std::max(1.0, std::max(tn.condition, ct.condition));
                t.observe(rel_diff(tn.value, -ct.value) / scale, tol);
            }
        }
        out.push_back(finish("tangent_reflection", t, tol));
    }
    {
        Tally t;
        const double tol = 1e-10;
        SplitMix64 rng(opt.seed ^ 0xccddull);
        auto residue = [&](EvalResult<double> d, auto redo) {
            if (d.condition > 1e4) {
                auto r = redo();
                return std::fabs(to_double(r.value.im)) /
                       (1.0 + std::fabs(to_double(r.value.re)));
            }
            return std::fabs(d.value.im) / (1.0 + std::fabs(d.value.re));
        };
        for (int i = 0; i < 25; ++i) {
            auto [a, x, s] = sample_point(rng, false);
            auto [at, xt, st] = sample_point(rng, true);
            for (unsigned k = 0; k <= kmax; ++k) {
                t.observe(residue(trigderiv::cot_deriv(k, a, x, s, cfg),
                                  [&] { return trigderiv::cot_deriv(k, DDouble(a), DDouble(x), DDouble(s), cfg); }),
                          tol);
                t.observe(residue(trigderiv::csc_deriv(k, a, x, s, cfg),
                                  [&] { return trigderiv::csc_deriv(k, DDouble(a), DDouble(x), DDouble(s), cfg); }),
                          tol);
                t.observe(residue(trigderiv::tan_deriv(k, at, xt, st, cfg),
                                  [&] { return trigderiv::tan_deriv(k, DDouble(at), DDouble(xt), DDouble(st), cfg); }),
                          tol);
                t.observe(residue(trigderiv::sec_deriv(k, at, xt, st, cfg),
                                  [&] { return trigderiv::sec_deriv(k, DDouble(at), DDouble(xt), DDouble(st), cfg); }),
                          tol);
            }
        }
        out.push_back(finish("imaginary_residue", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-5;
        SplitMix64 rng(opt.seed ^ 0xf00dull);
        const double h = 1e-5;
        for (int i = 0; i < 10; ++i) {
            auto [a, x, s] = sample_point(rng, false);
            for (unsigned k = 1; k <= std::min(kmax, 5u); ++k) {
                double plus = trigderiv::cot_deriv(k - 1, a, x + h / a, s, cfg).value.re;
                double minus = trigderiv::cot_deriv(k - 1, a, x - h / a, s, cfg).value.re;
                double fd = (plus - minus) / (2.0 * h / a);
                double val = trigderiv::cot_deriv(k, a, x, s, cfg).value.re;
                t.observe(std::fabs(fd - val) / std::max(1.0, std::fabs(val)), tol);
            }
        }
        out.push_back(finish("cot_deriv_finite_difference", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-6;
        // d/dx [x/(e^{ax+b}-1)] at 0 via high-order central differences
        SplitMix64 rng(opt.seed ^ 0xeeeeull);
        for (int i = 0; i < 8; ++i) {
            Cd a{rng.uniform(0.5, 2.0), rng.uniform(-0.5, 0.5)};
            Cd b{rng.uniform(0.3, 1.5), rng.uniform(-1.0, 1.0)};
            auto g = [&](double x) {
                Cd ax = a * x + b;
                return Cd{x} / (exp(ax) - Cd{1.0});
            };
            const double h = 2.5e-3;  // h^4 truncation ~1e-10 of scale
            // five-point stencils for f' and f'' at 0
            Cd d1 = (g(-2 * h) - g(2 * h) * 1.0 + (g(h) - g(-h)) * 8.0) / Cd{12.0 * h};
            Cd f0 = g(0.0);
            Cd d2 = (-(g(2 * h) + g(-2 * h)) + (g(h) + g(-h)) * 16.0 - f0 * 30.0) /
                    Cd{12.0 * h * h};
            auto e1 = trigderiv::exp_ratio_deriv_at_zero(1, a, b, cfg);
            auto e2 = trigderiv::exp_ratio_deriv_at_zero(2, a, b, cfg);
            t.observe(rel_diff(e1.value, d1), tol);
            t.observe(rel_diff(e2.value, d2), tol);
        }
        out.push_back(finish("exp_ratio_vs_finite_difference", t, tol));
    }
    return out;
}

std::vector<PropertyResult> check_hurwitz(const CheckOptions& opt) {
    std::vector<PropertyResult> out;
    PrecisionConfig cfg;
    cfg.guard = opt.guard;
    quadrature::QuadratureSpec qs;
    qs.rel_tol = opt.quad_tol;
    const int kmax = opt.max_k ? static_cast<int>(std::min(opt.max_k, 8u)) : 6;

    const std::vector<Cd> bset = {Cd{0.25}, Cd{1.0 / 3.0}, Cd{0.4},
                                  Cd{2.0 / 3.0}, Cd{0.7}, Cd{0.26, 0.05}};

    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-7;
        for (int k = 2; k <= kmax; ++k)
            for (const Cd& b : bset) {
                auto oracle = hurwitz::hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12, cfg);
                t.observe(rel_diff(hurwitz::hurwitz_integral_v1(k, b, qs, cfg).value,
                                   oracle.value), tol);
                t.observe(rel_diff(hurwitz::hurwitz_elementary(k, b, qs, cfg).value,
                                   oracle.value), tol);
                t.observe(rel_diff(hurwitz::hurwitz_integral_v2(k, b, qs, cfg).value,
                                   oracle.value), tol);
                t.observe(rel_diff(hurwitz::hurwitz_analytic_final(k, b, qs, cfg).value,
                                   oracle.value), tol);
            }
        out.push_back(finish("integral_methods_vs_series", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-8;
        for (int k = 2; k <= kmax; ++k)
            for (const Cd& b : bset) {
                auto v1 = hurwitz::hurwitz_integral_v1(k, b, qs, cfg);
                auto el = hurwitz::hurwitz_elementary(k, b, qs, cfg);
                auto v2 = hurwitz::hurwitz_integral_v2(k, b, qs, cfg);
                auto af = hurwitz::hurwitz_analytic_final(k, b, qs, cfg);
                t.observe(rel_diff(v1.value, el.value), tol);
                t.observe(rel_diff(v2.value, af.value), tol);
                t.observe(rel_diff(v1.value, v2.value), tol);
            }
        out.push_back(finish("integral_method_cross_agreement", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-8;
        for (int k = 2; k <= kmax; ++k)
            for (const Cd& b : {Cd{0.3}, Cd{0.26, 0.05}}) {
                auto lhs = hurwitz::hurwitz_integral_v1(k, b, qs, cfg);
                auto rhs = hurwitz::hurwitz_integral_v1(k, b + Cd{1.0}, qs, cfg);
                Cd expect = rhs.value + Cd{1.0} / pow_int(b, static_cast<unsigned>(k));
                t.observe(rel_diff(lhs.value, expect), tol);
                auto s1 = hurwitz::hurwitz_series(Cd{static_cast<double>(k)}, b, 1e-12, cfg);
                auto s2 = hurwitz::hurwitz_series(Cd{static_cast<double>(k)}, b + Cd{1.0}, 1e-12, cfg);
                t.observe(rel_diff(s1.value, s2.value + Cd{1.0} / pow_int(b, static_cast<unsigned>(k))), tol);
            }
        out.push_back(finish("hurwitz_shift_property", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-9;
        int hk = opt.max_k ? static_cast<int>(std::min(opt.max_k, 8u)) : 8;
        for (int k = 2; k <= hk; ++k) {
            auto half = hurwitz::hurwitz_half_integer(k, 0.5, qs, cfg);
            auto zk = hurwitz::hurwitz_series(Cd{static_cast<double>(k)}, Cd{1.0}, 1e-13, cfg);
            Cd expect = zk.value * (std::pow(2.0, k) - 1.0);
            t.observe(rel_diff(half.value, expect), tol);
        }
        out.push_back(finish("half_integer_reduction", t, tol));
    }
    {
        Tally t;
        const double tol = 1e-4;
        const Cd b{0.3};
        const int k = 3;
        double mid_max = 0.0;
        for (double u = 0.4; u <= 0.6 + 1e-12; u += 0.01)
            mid_max = std::max(mid_max, mag(hurwitz::integral_v1_bracket(k, b, u, cfg)));
        double lo = mag(hurwitz::integral_v1_bracket(k, b, 1e-6, cfg));
        double hi = mag(hurwitz::integral_v1_bracket(k, b, 1.0 - 1e-6, cfg));
        t.observe(lo / mid_max, tol);
        t.observe(hi / mid_max, tol);
        out.push_back(finish("integrand_endpoint_cancellation", t, tol));
    }
    {
        Tally t;
        const double tol = opt.tol > 0 ? opt.tol : 1e-10;
        auto g = hurwitz::genfunc_f(Cd{0.05}, Cd{0.3}, qs, cfg);
        Cd acc{};
        for (int k = 2; k <= 40; ++k)
            acc += pow_int(Cd{0.05}, static_cast<unsigned>(k)) *
                   hurwitz::hurwitz_series(Cd{static_cast<double>(k)}, Cd{0.3}, 1e-14, cfg).value;
        t.observe(mag(g.value - acc), tol);
        out.push_back(finish("genfunc_matches_series", t, tol));
    }
    return out;
}

}  // namespace lerchcli
