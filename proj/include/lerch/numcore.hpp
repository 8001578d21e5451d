#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lerch/complex.hpp"

namespace lerch {

// Raised when an iterative evaluation hits its cap before the tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Method {
    compensated_sum,
    polylog_stirling,
    polylog_closed,
    polylog_transf,
    polylog_sum,
    lerch_closed,
    lerch_cot,
    lerch_series,
    lerch_sum,
    cot_adamchik,
    cot_polylog,
    csc_lerch,
    tan_polylog,
    sec_lerch,
    exp_ratio,
    quadrature_open,
    hurwitz_series,
    hurwitz_integral_v1,
    hurwitz_elementary,
    hurwitz_half_integer,
    hurwitz_integral_v2,
    hurwitz_analytic_final,
    genfunc,
};

const char* to_string(Method m);

// Return contract of every floating evaluation: the value, the condition
// number of the dominant sum (sum|terms| / |sum terms|, >= 1 for nonzero
// results), and the formula that produced it.
template <class R>
struct EvalResult {
    Complex<R> value{};
    double condition = 1.0;
    Method method = Method::compensated_sum;
};

struct PrecisionConfig {
    enum class Precision { double_prec, dd };
    Precision precision = Precision::double_prec;
    double guard = 1e-12;  // singular-input rejection distance
};

// Compensated (Neumaier) accumulation of complex terms with condition
// tracking. Terms may carry an explicit weight when they are themselves
// the result of a cancellation-prone sub-sum.
template <class R>
class CondSum {
public:
    void add(Complex<R> term) { add(term, mag(term)); }

    void add(Complex<R> term, double weight) {
        add_comp(sum_re_, c_re_, term.re);
        add_comp(sum_im_, c_im_, term.im);
        abs_sum_ += weight;
        empty_ = false;
    }

    Complex<R> value() const { return {sum_re_ + c_re_, sum_im_ + c_im_}; }

    double abs_sum() const { return abs_sum_; }

    double condition() const {
        if (empty_ || abs_sum_ == 0.0) return 1.0;
        double v = mag(value());
        if (v == 0.0) return std::numeric_limits<double>::infinity();
        double c = abs_sum_ / v;
        return c < 1.0 ? 1.0 : c;
    }

private:
    static void add_comp(R& sum, R& comp, R x) {
        using std::fabs;
        R t = sum + x;
        if (fabs(sum) >= fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    R sum_re_{}, sum_im_{};
    R c_re_{}, c_im_{};
    double abs_sum_ = 0.0;
    bool empty_ = true;
};

// Compensated sum of a term sequence; condition = sum|t| / |sum t|
// (1 for empty or single-term input).
template <class R>
EvalResult<R> compensated_sum(std::span<const Complex<R>> terms) {
    CondSum<R> acc;
    for (const auto& t : terms) acc.add(t);
    EvalResult<R> r;
    r.value = acc.value();
    r.condition = terms.size() <= 1 ? 1.0 : acc.condition();
    r.method = Method::compensated_sum;
    return r;
}

template <class R>
EvalResult<R> compensated_sum(const std::vector<Complex<R>>& terms) {
    return compensated_sum(std::span<const Complex<R>>(terms));
}

// e^{-2 pi i b} = exp(2 pi im(b)) * (cos(2 pi re(b)) - i sin(2 pi re(b))).
// Computing the modulus and phase separately avoids amplifying the
// exponent error through a complex exp.
template <class R>
Complex<R> unit_phase(Complex<R> b) {
    using std::exp;
    R t = constants<R>::two_pi() * b.im;
    if (to_double(t) > 709.0)
        throw std::overflow_error("unit_phase: exp overflow for large im(b)");
    R r = exp(t);
    R s, c;
    sincos(constants<R>::two_pi() * b.re, s, c);
    return {r * c, -(r * s)};
}

// cos(w)/sin(w); domain error within `guard` of the zeros of sin.
template <class R>
Complex<R> cot_c(Complex<R> w, double guard = 1e-12) {
    Complex<R> s = sin(w);
    if (mag(s) < guard)
        throw std::domain_error("cot_c: argument within guard distance of a pole");
    return cos(w) / s;
}

// Distance from a complex value to the nearest integer (as a complex point).
template <class R>
double dist_to_integer(Complex<R> b) {
    double n = std::round(to_double(b.re));
    return mag(Complex<R>{b.re - R(n), b.im});
}

// Distance to the nearest half-integer multiple n/2.
template <class R>
double dist_to_half_integer_grid(Complex<R> b) {
    double n = std::round(2.0 * to_double(b.re));
    return mag(Complex<R>{b.re - R(0.5) * R(n), b.im});
}

}  // namespace lerch
