#pragma once

#include <cstddef>

#include "lerch/neglerch.hpp"
#include "lerch/quadrature.hpp"

namespace lerch::hurwitz {

enum class HurwitzMethod {
    series,
    integral_v1,
    elementary,
    half_integer,
    integral_v2,
    analytic_final,
    genfunc,
};

const char* to_string(HurwitzMethod m);
bool parse_hurwitz_method(const std::string& s, HurwitzMethod& out);

namespace detail {

template <class R>
R cot_pi(R u) {
    R s, c;
    sincos(constants<R>::pi() * u, s, c);
    return c / s;
}

template <class R>
void require_b_domain(Complex<R> b, double guard, double im_cap, bool exclude_half) {
    if (std::fabs(to_double(b.im)) > im_cap)
        throw std::overflow_error("hurwitz: |im(b)| exceeds the configured cap");
    if (exclude_half) {
        if (dist_to_half_integer_grid(b) < guard)
            throw std::domain_error("hurwitz: b within guard of an integer or half-integer");
    } else if (dist_to_integer(b) < guard) {
        throw std::domain_error("hurwitz: b within guard of an integer");
    }
}

// Non-integral part shared by the integral representations:
//   1/(2 b^k) + (2 pi i)^k/(4 (k-1)!) (z + z^2 Phi(z,-k+1,2) + Li_{-k+1}(z)),
// z = e^{-2 pi i b}.
template <class R>
struct OutsideParts {
    Complex<R> z, z2;
    Complex<R> phi2;
    Complex<R> value;
    double abs_weight = 0.0;
    R kfac1{};          // (k-1)!
    Complex<R> c2pi_k;  // (2 pi i)^k
};

template <class R>
OutsideParts<R> outside_parts(int k, Complex<R> b, const PrecisionConfig& cfg) {
    OutsideParts<R> o;
    o.z = unit_phase(b);
    o.z2 = o.z * o.z;
    auto phi = neglerch::lerch_neg(static_cast<unsigned>(k - 1), o.z,
                                   Complex<R>{R(2)}, cfg);
    auto li = neglerch::polylog_neg_stirling(static_cast<unsigned>(k - 1), o.z, cfg);
    o.phi2 = phi.value;
    o.kfac1 = neglerch::detail::factorials<R>(static_cast<unsigned>(k - 1)).back();
    o.c2pi_k = pow_int(Complex<R>{R(0), constants<R>::two_pi()}, static_cast<unsigned>(k));
    const Complex<R> first = Complex<R>{R(1)} / (pow_int(b, static_cast<unsigned>(k)) * R(2));
    const Complex<R> bracket = o.z + o.z2 * o.phi2 + li.value;
    const Complex<R> second = o.c2pi_k * bracket / (o.kfac1 * R(4));
    o.value = first + second;
    const double scale = mag(o.c2pi_k) / (4.0 * to_double(o.kfac1));
    o.abs_weight = mag(first) +
                   scale * (mag(o.z) + mag(o.z2 * o.phi2) * phi.condition +
                            mag(li.value) * li.condition);
    return o;
}

inline double combined_condition(double abs_weight, double out_mag) {
    if (out_mag == 0.0) return std::numeric_limits<double>::infinity();
    double c = abs_weight / out_mag;
    return c < 1.0 ? 1.0 : c;
}

template <class R>
Complex<R> v1_bracket(int k, Complex<R> b, Complex<R> z, Complex<R> z2,
                      Complex<R> phi2, R u, const PrecisionConfig& cfg) {
    const Complex<R> eu = unit_phase(b * u);  // e^{-2 pi i b u}
    const Complex<R> phi_u =
        neglerch::lerch_neg(static_cast<unsigned>(k - 1), z,
                            Complex<R>{R(1) + u}, cfg)
            .value;
    return pow_int(u, static_cast<unsigned>(k - 1)) * eu - z + z * eu * phi_u -
           z2 * phi2;
}

}  // namespace detail

// Defining-series oracle: sum_{n>=0} (n+b)^{-k} for re(k) > 1, with
// Euler-Maclaurin tail acceleration (the integral term plus the standard
// Bernoulli ladder), truncation chosen from tol.
template <class R>
EvalResult<R> hurwitz_series(Complex<R> k, Complex<R> b, double tol = 1e-12,
                             const PrecisionConfig& cfg = {}) {
    if (to_double(k.re) <= 1.0)
        throw std::domain_error("hurwitz_series: re(k) must be > 1");
    const double bn = std::round(to_double(b.re));
    if (bn <= 0.0 && mag(b - Complex<R>{R(bn)}) < cfg.guard)
        throw std::domain_error("hurwitz_series: b at a non-positive integer");

    const bool int_k = to_double(k.im) == 0.0 &&
                       std::round(to_double(k.re)) == to_double(k.re) &&
                       to_double(k.re) <= 60.0;
    const unsigned ki = int_k ? static_cast<unsigned>(to_double(k.re)) : 0u;
    auto power_minus_k = [&](Complex<R> w) {
        if (int_k) return Complex<R>{R(1)} / pow_int(w, ki);
        return pow_c(w, -k);
    };

    // reciprocal Euler-Maclaurin coefficients (2m)!/B_2m
    static const double kEm[8] = {12.0, -720.0, 30240.0, -1209600.0,
                                  47900160.0, -1.8924375803183791606e9,
                                  7.47242496e10, -2.950130727918164224e12};

    CondSum<R> acc;
    std::size_t n = 0;
    std::size_t cap = 16 + static_cast<std::size_t>(
                               std::max(0.0, 8.0 - to_double(b.re)));
    const std::size_t hard_cap = 4000000;
    const Complex<R> km1 = k - Complex<R>{R(1)};
    while (true) {
        for (; n < cap; ++n)
            acc.add(power_minus_k(b + Complex<R>{R(static_cast<double>(n))}));
        const Complex<R> w = b + Complex<R>{R(static_cast<double>(cap))};
        const Complex<R> winv = Complex<R>{R(1)} / w;
        const Complex<R> fn = power_minus_k(w);
        Complex<R> tail = w * fn / km1 + fn * R(0.5);
        Complex<R> deriv = fn;
        double prev = std::numeric_limits<double>::infinity();
        bool converged = false;
        for (int m = 1; m <= 8; ++m) {
            if (m == 1)
                deriv = fn * k * winv;
            else
                deriv = deriv * (k + Complex<R>{R(2 * m - 3)}) *
                        (k + Complex<R>{R(2 * m - 2)}) * winv * winv;
            const Complex<R> term = deriv / R(kEm[m - 1]);
            tail += term;
            const double tm = mag(term);
            const double smag = std::max(mag(acc.value()), 1e-300);
            if (tm <= tol * smag) {
                converged = true;
                break;
            }
            if (tm >= prev) break;  // ladder diverging; need more direct terms
            prev = tm;
        }
        if (converged) {
            acc.add(tail, mag(tail));
            EvalResult<R> r{acc.value(), acc.condition(), Method::hurwitz_series};
            return r;
        }
        if (cap >= hard_cap)
            throw ConvergenceError("hurwitz_series: slow convergence (re(k) too close to 1?)");
        cap *= 2;
    }
}

// Bracketed integrand factor of the first integral representation,
// exposed so tests can check its endpoint cancellation directly.
template <class R>
Complex<R> integral_v1_bracket(int k, Complex<R> b, R u,
                               const PrecisionConfig& cfg = {}) {
    const Complex<R> z = unit_phase(b);
    const Complex<R> z2 = z * z;
    const Complex<R> phi2 =
        neglerch::lerch_neg(static_cast<unsigned>(k - 1), z, Complex<R>{R(2)}, cfg)
            .value;
    return detail::v1_bracket(k, b, z, z2, phi2, u, cfg);
}

// zeta(k,b) via the Phi/Li bracket plus the cot(pi u) integral.
template <class R>
EvalResult<R> hurwitz_integral_v1(int k, Complex<R> b,
                                  const quadrature::QuadratureSpec& qspec = {},
                                  const PrecisionConfig& cfg = {},
                                  double im_cap = 1.0) {
    if (k < 2) throw std::domain_error("hurwitz_integral_v1: k must be >= 2");
    detail::require_b_domain(b, cfg.guard, im_cap, false);
    const auto o = detail::outside_parts(k, b, cfg);
    auto integrand = [&](R u) {
        return detail::v1_bracket(k, b, o.z, o.z2, o.phi2, u, cfg) *
               detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> pref =
        Complex<R>{R(0), R(-1)} * o.c2pi_k / (o.kfac1 * R(2));
    const Complex<R> v = o.value + pref * integral.value;
    const double w = o.abs_weight + mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::hurwitz_integral_v1};
}

// zeta(k,b) via the fully expanded double-sum/cotangent form; elementary
// functions only.
template <class R>
EvalResult<R> hurwitz_elementary(int k, Complex<R> b,
                                 const quadrature::QuadratureSpec& qspec = {},
                                 const PrecisionConfig& cfg = {},
                                 double im_cap = 1.0) {
    if (k < 2) throw std::domain_error("hurwitz_elementary: k must be >= 2");
    detail::require_b_domain(b, cfg.guard, im_cap, false);
    const unsigned ku = static_cast<unsigned>(k);
    const Complex<R> z = unit_phase(b);
    const Complex<R> ct = cot_c(Complex<R>{constants<R>::pi()} * b, cfg.guard);
    const Complex<R> C =
        (Complex<R>{R(1)} + Complex<R>{R(0), R(1)} * ct) * R(0.5);
    const auto fact = neglerch::detail::factorials<R>(ku);
    const R kfac1 = fact[ku - 1];
    const Complex<R> c2pi_k =
        pow_int(Complex<R>{R(0), constants<R>::two_pi()}, ku);

    std::vector<R> pj0(ku + 1), pj1(ku + 1);  // j^(k-1), (j+1)^(k-1)
    for (unsigned j = 1; j <= ku; ++j) {
        pj0[j] = pow_int(R(static_cast<int>(j)), ku - 1);
        pj1[j] = pow_int(R(static_cast<int>(j + 1)), ku - 1);
    }

    // outside sum: sum_q (q-1)! C^q sum_j (-1)^j (z (j+1)^{k-1} + j^{k-1}) / ((j-1)!(q-j)!)
    CondSum<R> sout;
    {
        Complex<R> aq;
        for (unsigned q = 1; q <= ku; ++q) {
            aq = (q == 1) ? C : aq * C * R(static_cast<int>(q - 1));
            CondSum<R> inner;
            R e = R(1) / fact[q - 1];
            for (unsigned j = 1; j <= q; ++j) {
                Complex<R> t = (z * pj1[j] + Complex<R>{pj0[j]}) * e;
                if (j % 2 != 0) t = -t;
                inner.add(t);
                if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
            }
            sout.add(aq * inner.value(), mag(aq) * inner.abs_sum());
        }
    }
    const Complex<R> first =
        Complex<R>{R(1)} / (pow_int(b, ku) * R(2));
    const Complex<R> outside =
        first + c2pi_k * (z + sout.value()) / (kfac1 * R(4));

    auto integrand = [&](R u) {
        const Complex<R> eu = unit_phase(b * u);
        std::vector<R> pu(ku + 1);
        for (unsigned j = 1; j <= ku; ++j)
            pu[j] = pow_int(u + R(static_cast<int>(j)), ku - 1);
        CondSum<R> s;
        Complex<R> aq;
        for (unsigned q = 1; q <= ku; ++q) {
            aq = (q == 1) ? C : aq * C * R(static_cast<int>(q - 1));
            CondSum<R> inner;
            R e = R(1) / fact[q - 1];
            for (unsigned j = 1; j <= q; ++j) {
                Complex<R> t = (eu * pu[j] - z * pj1[j]) * e;
                if (j % 2 != 0) t = -t;
                inner.add(t);
                if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
            }
            s.add(aq * inner.value(), mag(aq) * inner.abs_sum());
        }
        const Complex<R> bracket =
            pow_int(u, ku - 1) * eu - z + s.value();
        return bracket * detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> pref = Complex<R>{R(0), R(-1)} * c2pi_k / (kfac1 * R(2));
    const Complex<R> v = outside + pref * integral.value;
    const double w = mag(first) +
                     mag(c2pi_k) / (4.0 * to_double(kfac1)) *
                         (mag(z) + sout.abs_sum()) +
                     mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::hurwitz_elementary};
}

// zeta(k,b) for half-odd-integer b, where e^{-2 pi i b} = -1 and
// cot(pi b) = 0 collapse the double sum.
template <class R>
EvalResult<R> hurwitz_half_integer(int k, R b,
                                   const quadrature::QuadratureSpec& qspec = {},
                                   const PrecisionConfig& /*cfg*/ = {}) {
    if (k < 2) throw std::domain_error("hurwitz_half_integer: k must be >= 2");
    const double bd = to_double(b);
    const double twob = 2.0 * bd;
    if (!(bd >= 0.5) || std::round(twob) != twob ||
        std::llround(twob) % 2 == 0)
        throw std::domain_error(
            "hurwitz_half_integer: b must be n + 1/2 with integer n >= 0");
    const unsigned ku = static_cast<unsigned>(k);
    const auto fact = neglerch::detail::factorials<R>(ku);
    const R kfac1 = fact[ku - 1];
    const Complex<R> c2pi_k =
        pow_int(Complex<R>{R(0), constants<R>::two_pi()}, ku);
    const Complex<R> bc{b};

    std::vector<R> pj0(ku + 1), pj1(ku + 1);
    for (unsigned j = 1; j <= ku; ++j) {
        pj0[j] = pow_int(R(static_cast<int>(j)), ku - 1);
        pj1[j] = pow_int(R(static_cast<int>(j + 1)), ku - 1);
    }

    // sum_q (q-1)! (1/2)^q sum_j (-1)^j ((j+1)^{k-1} - j^{k-1})/((j-1)!(q-j)!)
    neglerch::detail::RealCondSum<R> shalf;
    {
        R aq{};
        for (unsigned q = 1; q <= ku; ++q) {
            aq = (q == 1) ? R(0.5) : aq * R(0.5) * R(static_cast<int>(q - 1));
            R e = R(1) / fact[q - 1];
            R inner{};
            for (unsigned j = 1; j <= q; ++j) {
                R t = (pj1[j] - pj0[j]) * e;
                if (j % 2 != 0) t = -t;
                inner = inner + t;
                if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
            }
            shalf.add(aq * inner);
        }
    }
    const R first = R(1) / (pow_int(b, ku) * R(2));
    const Complex<R> outside =
        Complex<R>{first} -
        c2pi_k * (R(1) + shalf.value()) / (kfac1 * R(4));

    auto integrand = [&](R u) {
        const Complex<R> eu = unit_phase(bc * u);
        std::vector<R> pu(ku + 1);
        for (unsigned j = 1; j <= ku; ++j)
            pu[j] = pow_int(u + R(static_cast<int>(j)), ku - 1);
        CondSum<R> s;
        R aq{};
        for (unsigned q = 1; q <= ku; ++q) {
            aq = (q == 1) ? R(0.5) : aq * R(0.5) * R(static_cast<int>(q - 1));
            CondSum<R> inner;
            R e = R(1) / fact[q - 1];
            for (unsigned j = 1; j <= q; ++j) {
                Complex<R> t = (eu * pu[j] + Complex<R>{pj1[j]}) * e;
                if (j % 2 != 0) t = -t;
                inner.add(t);
                if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
            }
            s.add(Complex<R>{aq} * inner.value(), std::fabs(to_double(aq)) * inner.abs_sum());
        }
        const Complex<R> bracket =
            pow_int(u, ku - 1) * eu + Complex<R>{R(1)} + s.value();
        return bracket * detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> pref = Complex<R>{R(0), R(-1)} * c2pi_k / (kfac1 * R(2));
    const Complex<R> v = outside + pref * integral.value;
    const double w = std::fabs(to_double(first)) +
                     mag(c2pi_k) / (4.0 * to_double(kfac1)) * (1.0 + shalf.abs_sum()) +
                     mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::hurwitz_half_integer};
}

// zeta(k,b) via the Phi(e^{-4 pi i b}, -j+1, 1/2)-weighted integral; valid
// away from integers and half-integers.
template <class R>
EvalResult<R> hurwitz_integral_v2(int k, Complex<R> b,
                                  const quadrature::QuadratureSpec& qspec = {},
                                  const PrecisionConfig& cfg = {},
                                  double im_cap = 1.0) {
    if (k < 2) throw std::domain_error("hurwitz_integral_v2: k must be >= 2");
    detail::require_b_domain(b, cfg.guard, im_cap, true);
    const unsigned ku = static_cast<unsigned>(k);
    const auto o = detail::outside_parts(k, b, cfg);
    const auto fact = neglerch::detail::factorials<R>(ku);

    std::vector<Complex<R>> lj(ku + 1);
    for (unsigned j = 1; j <= ku; ++j)
        lj[j] = neglerch::lerch_neg(j - 1, o.z2, Complex<R>{R(0.5)}, cfg).value;
    std::vector<R> coef(ku + 1);
    {
        R p2 = R(1);
        for (unsigned j = 1; j <= ku; ++j) {
            p2 = p2 * R(2);  // 2^j
            coef[j] = p2 / (fact[j - 1] * fact[ku - j]);
        }
    }

    auto integrand = [&](R u) {
        const Complex<R> eu = unit_phase(b * u);
        const Complex<R> gu = unit_phase(-(b * u));
        std::vector<R> upow(ku);
        upow[0] = R(1);
        for (unsigned i = 1; i < ku; ++i) upow[i] = upow[i - 1] * u;
        CondSum<R> s;
        for (unsigned j = 1; j <= ku; ++j) {
            const bool neg = (ku - j) % 2 != 0;  // (-1)^(k-j)
            const Complex<R> osc = neg ? eu + gu : eu - gu;
            s.add(osc * (coef[j] * upow[ku - j]) * lj[j]);
        }
        return s.value() * detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> pref =
        Complex<R>{R(0), R(-1)} * o.c2pi_k * o.z * R(0.25);
    const Complex<R> v = o.value + pref * integral.value;
    const double w = o.abs_weight + mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::hurwitz_integral_v2};
}

// zeta(k,b) via the two-Lerch integrand (parameters (u+1)/2 and (1-u)/2).
template <class R>
EvalResult<R> hurwitz_analytic_final(int k, Complex<R> b,
                                     const quadrature::QuadratureSpec& qspec = {},
                                     const PrecisionConfig& cfg = {},
                                     double im_cap = 1.0) {
    if (k < 2) throw std::domain_error("hurwitz_analytic_final: k must be >= 2");
    detail::require_b_domain(b, cfg.guard, im_cap, true);
    const auto o = detail::outside_parts(k, b, cfg);
    const unsigned km1 = static_cast<unsigned>(k - 1);

    auto integrand = [&](R u) {
        const Complex<R> eu = unit_phase(b * u);
        const Complex<R> gu = unit_phase(-(b * u));
        const Complex<R> pa =
            neglerch::lerch_neg(km1, o.z2, Complex<R>{(R(1) + u) * R(0.5)}, cfg).value;
        const Complex<R> pb =
            neglerch::lerch_neg(km1, o.z2, Complex<R>{(R(1) - u) * R(0.5)}, cfg).value;
        return (eu * pa - gu * pb) * detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> c4pi_k = pow_int(
        Complex<R>{R(0), R(2) * constants<R>::two_pi()}, static_cast<unsigned>(k));
    const Complex<R> pref =
        Complex<R>{R(0), R(-1)} * c4pi_k * o.z / (o.kfac1 * R(4));
    const Complex<R> v = o.value + pref * integral.value;
    const double w = o.abs_weight + mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::hurwitz_analytic_final};
}

// Generating function f(x) = sum_{k>=2} x^k zeta(k,b), evaluated by its
// closed form; b and x-b must stay away from the half-integer grid.
template <class R>
EvalResult<R> genfunc_f(Complex<R> x, Complex<R> b,
                        const quadrature::QuadratureSpec& qspec = {},
                        const PrecisionConfig& cfg = {},
                        double im_cap = 1.0) {
    detail::require_b_domain(b, cfg.guard, im_cap, true);
    if (dist_to_half_integer_grid(x - b) < cfg.guard)
        throw std::domain_error("genfunc_f: x - b within guard of the half-integer grid");
    if (std::fabs(to_double(x.im)) > im_cap)
        throw std::overflow_error("genfunc_f: |im(x)| exceeds the configured cap");
    const R pi = constants<R>::pi();
    const R tp = constants<R>::two_pi();
    const Complex<R> xmb = x - b;
    const Complex<R> term1 = -(x * x) / (b * xmb * R(2));
    const Complex<R> term2 =
        -(Complex<R>{pi} * x * sin(Complex<R>{pi} * x) / sin(Complex<R>{pi} * xmb)) /
        (sin(Complex<R>{pi} * b) * R(2));
    const Complex<R> s2xb = sin(Complex<R>{tp} * xmb);
    const Complex<R> s2b = sin(Complex<R>{tp} * b);
    auto integrand = [&](R u) {
        return (sin(Complex<R>{tp * u} * xmb) / s2xb -
                sin(Complex<R>{tp * u} * b) / s2b) *
               detail::cot_pi(u);
    };
    const auto integral = quadrature::integrate_open<R>(integrand, qspec);
    const Complex<R> pref = -(Complex<R>{pi} * x);
    const Complex<R> v = term1 + term2 + pref * integral.value;
    const double w = mag(term1) + mag(term2) +
                     mag(pref * integral.value) * integral.condition;
    return {v, detail::combined_condition(w, mag(v)), Method::genfunc};
}

}  // namespace lerch::hurwitz
