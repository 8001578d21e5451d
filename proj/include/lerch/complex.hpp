#pragma once

#include <cmath>

#include "lerch/ddouble.hpp"

namespace lerch {

inline void sincos(double a, double& s, double& c) {
    s = std::sin(a);
    c = std::cos(a);
}

// Complex number over a configurable real type (double or DDouble).
// std::complex is specified only for the builtin floating types, so the
// evaluators use this instead and template over R.
template <class R>
struct Complex {
    R re{};
    R im{};

    constexpr Complex() = default;
    constexpr Complex(R r) : re(r) {}
    constexpr Complex(R r, R i) : re(r), im(i) {}

    friend Complex operator+(Complex a, Complex b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(Complex a, Complex b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator-(Complex a) { return {-a.re, -a.im}; }
    friend Complex operator*(Complex a, Complex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator*(Complex a, R s) { return {a.re * s, a.im * s}; }
    friend Complex operator*(R s, Complex a) { return a * s; }

    // Smith's scheme keeps intermediate magnitudes tame.
    friend Complex operator/(Complex a, Complex b) {
        using std::fabs;
        if (fabs(b.re) >= fabs(b.im)) {
            R t = b.im / b.re;
            R den = b.re + b.im * t;
            return {(a.re + a.im * t) / den, (a.im - a.re * t) / den};
        }
        R t = b.re / b.im;
        R den = b.re * t + b.im;
        return {(a.re * t + a.im) / den, (a.im * t - a.re) / den};
    }
    friend Complex operator/(Complex a, R s) { return {a.re / s, a.im / s}; }

    Complex& operator+=(Complex b) { return *this = *this + b; }
    Complex& operator-=(Complex b) { return *this = *this - b; }
    Complex& operator*=(Complex b) { return *this = *this * b; }
    Complex& operator/=(Complex b) { return *this = *this / b; }

    friend bool operator==(Complex a, Complex b) { return a.re == b.re && a.im == b.im; }
};

template <class R>
Complex<R> conj(Complex<R> a) {
    return {a.re, -a.im};
}

template <class R>
R abs(Complex<R> a) {
    using std::fabs;
    using std::sqrt;
    R ar = fabs(a.re), ai = fabs(a.im);
    R m = ar >= ai ? ar : ai;
    if (to_double(m) == 0.0) return R(0);
    R x = a.re / m, y = a.im / m;
    return m * sqrt(x * x + y * y);
}

template <class R>
double mag(Complex<R> a) {
    return to_double(abs(a));
}

template <class R>
Complex<R> exp(Complex<R> a) {
    using std::exp;
    R r = exp(a.re);
    R s, c;
    sincos(a.im, s, c);
    return {r * c, r * s};
}

template <class R>
Complex<R> log(Complex<R> a) {
    using std::atan2;
    using std::log;
    return {log(abs(a)), atan2(a.im, a.re)};
}

template <class R>
Complex<R> sin(Complex<R> a) {
    using std::cosh;
    using std::sinh;
    R s, c;
    sincos(a.re, s, c);
    return {s * cosh(a.im), c * sinh(a.im)};
}

template <class R>
Complex<R> cos(Complex<R> a) {
    using std::cosh;
    using std::sinh;
    R s, c;
    sincos(a.re, s, c);
    return {c * cosh(a.im), -s * sinh(a.im)};
}

template <class R>
Complex<R> pow_int(Complex<R> base, unsigned e) {
    Complex<R> r{R(1)};
    Complex<R> b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

template <class R>
R pow_int(R base, unsigned e) {
    R r(1);
    R b = base;
    while (e > 0) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

// Principal-branch complex power.
template <class R>
Complex<R> pow_c(Complex<R> base, Complex<R> expo) {
    return exp(expo * log(base));
}

using Cd = Complex<double>;
using Cdd = Complex<DDouble>;

}  // namespace lerch
