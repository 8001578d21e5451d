#include "lerch/ddouble.hpp"

#include <cmath>
#include <stdexcept>

namespace lerch {

namespace {

const DDouble kLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
const DDouble kPiOver2{1.570796326794896558e+00, 6.123233995736766036e-17};

// exp(r) for |r| <= ln2/2 by Taylor series in dd arithmetic.
DDouble exp_taylor(DDouble r) {
    DDouble sum = DDouble(1.0) + r;
    DDouble term = r;
    for (int n = 2; n < 40; ++n) {
        term = term * r / DDouble(n);
        sum += term;
        if (std::fabs(term.hi()) < 1e-35 * std::fabs(sum.hi())) break;
    }
    return sum;
}

// sin/cos for |r| <= pi/4 + eps by Taylor series.
void sincos_taylor(DDouble r, DDouble& s, DDouble& c) {
    DDouble r2 = r * r;
    DDouble term = r;
    s = r;
    for (int n = 3; n < 48; n += 2) {
        term = -(term * r2) / DDouble((n - 1) * n);
        s += term;
        if (std::fabs(term.hi()) < 1e-35) break;
    }
    term = DDouble(1.0);
    c = term;
    for (int n = 2; n < 48; n += 2) {
        term = -(term * r2) / DDouble((n - 1) * n);
        c += term;
        if (std::fabs(term.hi()) < 1e-35) break;
    }
}

}  // namespace

DDouble sqrt(DDouble a) {
    if (a.hi() == 0.0) return 0.0;
    if (a.hi() < 0.0) return std::numeric_limits<double>::quiet_NaN();
    DDouble y = std::sqrt(a.hi());
    y = (y + a / y) * DDouble(0.5);
    y = (y + a / y) * DDouble(0.5);
    return y;
}

DDouble exp(DDouble a) {
    if (a.hi() > 709.0) return std::numeric_limits<double>::infinity();
    if (a.hi() < -745.0) return 0.0;
    double m = std::round(a.hi() / 0.6931471805599453);
    DDouble r = a - kLn2 * DDouble(m);
    return ldexp(exp_taylor(r), static_cast<int>(m));
}

DDouble log(DDouble a) {
    if (a.hi() <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    DDouble y = std::log(a.hi());
    // Newton on exp: y <- y + a*exp(-y) - 1
    y = y + a * exp(-y) - DDouble(1.0);
    y = y + a * exp(-y) - DDouble(1.0);
    return y;
}

void sincos(DDouble a, DDouble& s, DDouble& c) {
    // Reduce modulo pi/2. Accurate for |a| well below 2^53; the evaluators
    // only pass phases of modest size.
    double k = std::round(a.hi() / 1.5707963267948966);
    DDouble r = a - kPiOver2 * DDouble(k);
    long long quad = static_cast<long long>(k) % 4;
    if (quad < 0) quad += 4;
    DDouble sr, cr;
    sincos_taylor(r, sr, cr);
    switch (quad) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

DDouble sin(DDouble a) {
    DDouble s, c;
    sincos(a, s, c);
    return s;
}

DDouble cos(DDouble a) {
    DDouble s, c;
    sincos(a, s, c);
    return c;
}

DDouble sinh(DDouble a) {
    if (std::fabs(a.hi()) < 1e-2) {
        // series to avoid cancellation of exp(a) - exp(-a)
        DDouble sum = a;
        DDouble term = a;
        DDouble a2 = a * a;
        for (int n = 3; n < 24; n += 2) {
            term = term * a2 / DDouble((n - 1) * n);
            sum += term;
            if (std::fabs(term.hi()) < 1e-35 * std::fabs(sum.hi())) break;
        }
        return sum;
    }
    DDouble e = exp(a);
    return (e - DDouble(1.0) / e) * DDouble(0.5);
}

DDouble cosh(DDouble a) {
    DDouble e = exp(a);
    return (e + DDouble(1.0) / e) * DDouble(0.5);
}

DDouble atan2(DDouble y, DDouble x) {
    if (x.hi() == 0.0 && y.hi() == 0.0) return 0.0;
    DDouble t = std::atan2(y.hi(), x.hi());
    // Newton on g(t) = y cos t - x sin t, root at atan2(y,x) mod pi; the
    // double seed selects the branch.
    for (int it = 0; it < 2; ++it) {
        DDouble st, ct;
        sincos(t, st, ct);
        DDouble num = y * ct - x * st;
        DDouble den = x * ct + y * st;
        t = t + num / den;
    }
    return t;
}

}  // namespace lerch
