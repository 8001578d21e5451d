#pragma once

#include <vector>

#include "lerch/neglerch.hpp"

namespace lerch::trigderiv {

// Exact integer-coefficient polynomial in c = cot(y). Either the k-th
// derivative of cot (kind = poly_in_cot, d^k cot = P(c)) or of csc
// (kind = csc_times_poly, d^k csc = csc(y) * P(c)). Closed under d/dy
// via cot' = -1 - c^2 and csc' = -csc * c.
struct CotPolynomial {
    enum class Kind { poly_in_cot, csc_times_poly };
    Kind kind = Kind::poly_in_cot;
    std::vector<exactmath::BigInt> coeffs;  // index = power of cot

    template <class R>
    R eval(R c) const {
        R v{};
        for (size_t i = coeffs.size(); i-- > 0;)
            v = v * c + neglerch::detail::to_real<R>(coeffs[i]);
        return v;
    }
};

// P_k with d^k cot(y)/dy^k = P_k(cot y); P_0(c) = c, P_{k+1} = -(1+c^2) P_k'.
CotPolynomial cot_poly(unsigned k);

// Q_k with d^k csc(y)/dy^k = csc(y) Q_k(cot y);
// Q_0 = 1, Q_{k+1} = -c Q_k - (1+c^2) Q_k'.
CotPolynomial csc_poly(unsigned k);

namespace detail {

template <class R>
R cot_real(R y, double guard) {
    R s, c;
    sincos(y, s, c);
    using std::fabs;
    if (to_double(fabs(s)) < guard)
        throw std::domain_error("cot: argument within guard distance of a pole");
    return c / s;
}

template <class R>
Complex<R> phase(R theta) {  // e^{i theta}
    R s, c;
    sincos(theta, s, c);
    return {c, s};
}

template <class R>
void require_sin_away(R theta, double guard) {
    using std::fabs;
    using std::sin;
    if (to_double(fabs(sin(theta))) < guard)
        throw std::domain_error("argument within guard distance of a zero of sin");
}

template <class R>
void require_cos_away(R theta, double guard) {
    using std::cos;
    using std::fabs;
    if (to_double(fabs(cos(theta))) < guard)
        throw std::domain_error("argument within guard distance of a zero of cos");
}

}  // namespace detail

// d^k(cot ax)/dx^k by Adamchik's Stirling-number form
//   (2ia)^k (-i + cot ax) sum_{q=1..k} q! S(k,q) ((-1 + i cot ax)/2)^q,  k >= 1.
template <class R>
EvalResult<R> cot_deriv_adamchik(unsigned k, R a, R x,
                                 const PrecisionConfig& cfg = {}) {
    if (k < 1) throw std::domain_error("cot_deriv_adamchik: k must be >= 1");
    const R theta = a * x;
    const R ct = detail::cot_real(theta, cfg.guard);
    const auto srow = exactmath::stirling2_row(k);
    const Complex<R> W{R(-0.5), ct * R(0.5)};  // (-1 + i cot)/2
    CondSum<R> acc;
    Complex<R> aq;  // q! W^q
    for (unsigned q = 1; q <= k; ++q) {
        aq = (q == 1) ? W : aq * W * R(static_cast<int>(q));
        acc.add(aq * neglerch::detail::to_real<R>(srow[q]));
    }
    const Complex<R> pre =
        pow_int(Complex<R>{R(0), R(2) * a}, k) * Complex<R>{ct, R(-1)};
    return {pre * acc.value(), acc.condition(), Method::cot_adamchik};
}

// d^k(cot(ax+shift))/dx^k = -i d_{0k} - 2i (2ia)^k Li_{-k}(e^{2i(ax+shift)}).
template <class R>
EvalResult<R> cot_deriv(unsigned k, R a, R x, R shift = R(0),
                        const PrecisionConfig& cfg = {}) {
    const R theta = a * x + shift;
    detail::require_sin_away(theta, cfg.guard);
    const Complex<R> z = detail::phase(R(2) * theta);
    auto li = neglerch::polylog_neg_closed(k, z, cfg);
    const Complex<R> i2{R(0), R(-2)};
    Complex<R> v = i2 * pow_int(Complex<R>{R(0), R(2) * a}, k) * li.value;
    if (k == 0) v = v + Complex<R>{R(0), R(-1)};
    return {v, li.condition, Method::cot_polylog};
}

// d^k(csc(ax+shift))/dx^k = -2i (2ia)^k e^{i(ax+shift)}
//                           Phi(e^{2i(ax+shift)}, -k, 1/2).
template <class R>
EvalResult<R> csc_deriv(unsigned k, R a, R x, R shift = R(0),
                        const PrecisionConfig& cfg = {}) {
    const R theta = a * x + shift;
    detail::require_sin_away(theta, cfg.guard);
    const Complex<R> z = detail::phase(R(2) * theta);
    auto phi = neglerch::lerch_neg(k, z, Complex<R>{R(0.5)}, cfg);
    const Complex<R> i2{R(0), R(-2)};
    Complex<R> v =
        i2 * pow_int(Complex<R>{R(0), R(2) * a}, k) * detail::phase(theta) * phi.value;
    return {v, phi.condition, Method::csc_lerch};
}

// d^k(tan(ax+shift))/dx^k = i d_{0k} + 2i (2ia)^k Li_{-k}(-e^{2i(ax+shift)}).
template <class R>
EvalResult<R> tan_deriv(unsigned k, R a, R x, R shift = R(0),
                        const PrecisionConfig& cfg = {}) {
    const R theta = a * x + shift;
    detail::require_cos_away(theta, cfg.guard);
    const Complex<R> z = -detail::phase(R(2) * theta);
    auto li = neglerch::polylog_neg_closed(k, z, cfg);
    const Complex<R> i2{R(0), R(2)};
    Complex<R> v = i2 * pow_int(Complex<R>{R(0), R(2) * a}, k) * li.value;
    if (k == 0) v = v + Complex<R>{R(0), R(1)};
    return {v, li.condition, Method::tan_polylog};
}

// d^k(sec(ax+shift))/dx^k = 2 (2ia)^k e^{i(ax+shift)}
//                           Phi(-e^{2i(ax+shift)}, -k, 1/2).
template <class R>
EvalResult<R> sec_deriv(unsigned k, R a, R x, R shift = R(0),
                        const PrecisionConfig& cfg = {}) {
    const R theta = a * x + shift;
    detail::require_cos_away(theta, cfg.guard);
    const Complex<R> z = -detail::phase(R(2) * theta);
    auto phi = neglerch::lerch_neg(k, z, Complex<R>{R(0.5)}, cfg);
    Complex<R> v = R(2) * pow_int(Complex<R>{R(0), R(2) * a}, k) *
                   detail::phase(theta) * phi.value;
    return {v, phi.condition, Method::sec_lerch};
}

// d^k/dx^k ( x/(e^{ax+b} - 1) ) at x = 0
//   = -k (d_{1k} + Li_{-k+1}(e^b)) a^(k-1),  k >= 1.
template <class R>
EvalResult<R> exp_ratio_deriv_at_zero(unsigned k, Complex<R> a, Complex<R> b,
                                      const PrecisionConfig& cfg = {}) {
    if (k < 1) throw std::domain_error("exp_ratio_deriv_at_zero: k must be >= 1");
    const Complex<R> eb = exp(b);
    if (mag(eb - Complex<R>{R(1)}) < cfg.guard)
        throw std::domain_error("exp_ratio_deriv_at_zero: e^b within guard of 1");
    auto li = neglerch::polylog_neg_stirling(k - 1, eb, cfg);
    Complex<R> s = li.value;
    if (k == 1) s = s + Complex<R>{R(1)};
    Complex<R> v = -(R(static_cast<int>(k)) * s * pow_int(a, k - 1));
    return {v, li.condition, Method::exp_ratio};
}

// Exact-oracle evaluations: chain rule through the integer-coefficient
// polynomials; tan/sec come from cot/csc at the arc shifted by pi/2.
template <class R>
R cot_deriv_oracle(unsigned k, R a, R x, R shift = R(0), double guard = 1e-12) {
    const R y = a * x + shift;
    const R c = detail::cot_real(y, guard);
    return cot_poly(k).eval(c) * pow_int(a, k);
}

template <class R>
R csc_deriv_oracle(unsigned k, R a, R x, R shift = R(0), double guard = 1e-12) {
    using std::sin;
    const R y = a * x + shift;
    detail::require_sin_away(y, guard);
    const R c = detail::cot_real(y, guard);
    return csc_poly(k).eval(c) / sin(y) * pow_int(a, k);
}

template <class R>
R tan_deriv_oracle(unsigned k, R a, R x, R shift = R(0), double guard = 1e-12) {
    using std::cos;
    using std::sin;
    const R y = a * x + shift;
    detail::require_cos_away(y, guard);
    const R t = sin(y) / cos(y);
    return -cot_poly(k).eval(-t) * pow_int(a, k);
}

template <class R>
R sec_deriv_oracle(unsigned k, R a, R x, R shift = R(0), double guard = 1e-12) {
    using std::cos;
    using std::sin;
    const R y = a * x + shift;
    detail::require_cos_away(y, guard);
    const R t = sin(y) / cos(y);
    return csc_poly(k).eval(-t) / cos(y) * pow_int(a, k);
}

}  // namespace lerch::trigderiv
