#pragma once

#include <cmath>
#include <limits>

namespace lerch {

// Double-double real: value = hi + lo, |lo| <= ulp(hi)/2 when normalized.
// Roughly 106 significand bits with the exponent range of double.
// Requires compilation without FP contraction of the summation primitives
// (the build sets -ffp-contract=off); products go through std::fma.
class DDouble {
public:
    constexpr DDouble() = default;
    constexpr DDouble(double x) : hi_(x) {}
    constexpr DDouble(double hi, double lo) : hi_(hi), lo_(lo) {}
    constexpr DDouble(int x) : hi_(x) {}
    constexpr DDouble(long x) : hi_(static_cast<double>(x)) {}
    constexpr DDouble(unsigned x) : hi_(x) {}

    constexpr double hi() const { return hi_; }
    constexpr double lo() const { return lo_; }

    static DDouble two_sum(double a, double b) {
        double s = a + b;
        double bb = s - a;
        return {s, (a - (s - bb)) + (b - bb)};
    }
    // requires |a| >= |b| or a == 0
    static DDouble quick_two_sum(double a, double b) {
        double s = a + b;
        return {s, b - (s - a)};
    }
    static DDouble two_prod(double a, double b) {
        double p = a * b;
        return {p, std::fma(a, b, -p)};
    }

    friend DDouble operator+(DDouble x, DDouble y) {
        DDouble s = two_sum(x.hi_, y.hi_);
        DDouble t = two_sum(x.lo_, y.lo_);
        double c = s.lo_ + t.hi_;
        DDouble v = quick_two_sum(s.hi_, c);
        return quick_two_sum(v.hi_, t.lo_ + v.lo_);
    }
    friend DDouble operator-(DDouble x) { return {-x.hi_, -x.lo_}; }
    friend DDouble operator-(DDouble x, DDouble y) { return x + (-y); }
    friend DDouble operator*(DDouble x, DDouble y) {
        DDouble p = two_prod(x.hi_, y.hi_);
        p.lo_ += x.hi_ * y.lo_ + x.lo_ * y.hi_;
        return quick_two_sum(p.hi_, p.lo_);
    }
    friend DDouble operator/(DDouble x, DDouble y) {
        double q1 = x.hi_ / y.hi_;
        DDouble r = x - y * DDouble(q1);
        double q2 = r.hi_ / y.hi_;
        r = r - y * DDouble(q2);
        double q3 = r.hi_ / y.hi_;
        DDouble q = quick_two_sum(q1, q2);
        return q + DDouble(q3);
    }

    DDouble& operator+=(DDouble y) { return *this = *this + y; }
    DDouble& operator-=(DDouble y) { return *this = *this - y; }
    DDouble& operator*=(DDouble y) { return *this = *this * y; }
    DDouble& operator/=(DDouble y) { return *this = *this / y; }

    friend bool operator==(DDouble x, DDouble y) { return x.hi_ == y.hi_ && x.lo_ == y.lo_; }
    friend bool operator!=(DDouble x, DDouble y) { return !(x == y); }
    friend bool operator<(DDouble x, DDouble y) {
        return x.hi_ < y.hi_ || (x.hi_ == y.hi_ && x.lo_ < y.lo_);
    }
    friend bool operator>(DDouble x, DDouble y) { return y < x; }
    friend bool operator<=(DDouble x, DDouble y) { return !(y < x); }
    friend bool operator>=(DDouble x, DDouble y) { return !(x < y); }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

inline double to_double(DDouble x) { return x.hi(); }
inline double to_double(double x) { return x; }

inline DDouble fabs(DDouble x) { return x.hi() < 0.0 || (x.hi() == 0.0 && x.lo() < 0.0) ? -x : x; }
inline DDouble abs(DDouble x) { return fabs(x); }
inline bool isfinite(DDouble x) { return std::isfinite(x.hi()); }
inline DDouble ldexp(DDouble x, int n) { return {std::ldexp(x.hi(), n), std::ldexp(x.lo(), n)}; }

DDouble sqrt(DDouble a);
DDouble exp(DDouble a);
DDouble log(DDouble a);
void sincos(DDouble a, DDouble& s, DDouble& c);
DDouble sin(DDouble a);
DDouble cos(DDouble a);
DDouble sinh(DDouble a);
DDouble cosh(DDouble a);
DDouble atan2(DDouble y, DDouble x);

// Numeric constants per real type, used by the templated evaluators.
template <class R>
struct constants;

template <>
struct constants<double> {
    static constexpr double pi() { return 3.14159265358979323846; }
    static constexpr double two_pi() { return 6.28318530717958647693; }
    static constexpr double eps() { return 2.220446049250313e-16; }
};

template <>
struct constants<DDouble> {
    static constexpr DDouble pi() { return {3.141592653589793116e+00, 1.224646799147353207e-16}; }
    static constexpr DDouble two_pi() { return {6.283185307179586232e+00, 2.449293598294706414e-16}; }
    static constexpr double eps() { return 4.93e-32; }
};

}  // namespace lerch
