#pragma once

#include <utility>
#include <vector>

#include "lerch/exactmath.hpp"
#include "lerch/numcore.hpp"

namespace lerch::neglerch {

namespace detail {

// BigInt -> R, exact to the precision of R (three-way split covers dd).
template <class R>
R to_real(const exactmath::BigInt& n) {
    if constexpr (std::is_same_v<R, double>) {
        return static_cast<double>(n);
    } else {
        exactmath::BigInt r = n;
        R acc{};
        for (int i = 0; i < 4 && r != 0; ++i) {
            double d = static_cast<double>(r);
            acc += R(d);
            r -= exactmath::BigInt(d);
        }
        return acc;
    }
}

template <class R>
void require_z_not_one(const Complex<R>& z, double guard) {
    if (mag(z - Complex<R>{R(1)}) < guard)
        throw std::domain_error("z within guard distance of 1");
}

template <class R>
std::vector<R> factorials(unsigned n) {
    std::vector<R> f(n + 1);
    f[0] = R(1);
    for (unsigned i = 1; i <= n; ++i) f[i] = f[i - 1] * R(static_cast<int>(i));
    return f;
}

// Compensated real accumulation with a term-magnitude tally.
template <class R>
class RealCondSum {
public:
    void add(R x) {
        using std::fabs;
        R t = sum_ + x;
        if (fabs(sum_) >= fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
        abs_sum_ += std::fabs(to_double(x));
    }
    R value() const { return sum_ + comp_; }
    double abs_sum() const { return abs_sum_; }

private:
    R sum_{}, comp_{};
    double abs_sum_ = 0.0;
};

}  // namespace detail

// Li_{-m}(z) = sum_{q=1..m+1} (q-1)! S(m+1,q) (z/(1-z))^q.
template <class R>
EvalResult<R> polylog_neg_stirling(unsigned m, Complex<R> z,
                                   const PrecisionConfig& cfg = {}) {
    detail::require_z_not_one(z, cfg.guard);
    const Complex<R> w = z / (Complex<R>{R(1)} - z);
    const auto srow = exactmath::stirling2_row(m + 1);
    CondSum<R> acc;
    Complex<R> aq;  // (q-1)! w^q
    for (unsigned q = 1; q <= m + 1; ++q) {
        aq = (q == 1) ? w : aq * w * R(static_cast<int>(q - 1));
        acc.add(aq * detail::to_real<R>(srow[q]));
    }
    return {acc.value(), acc.condition(), Method::polylog_stirling};
}

// Li_{-m}(z) = sum_{q=1..m+1} (q-1)! (z/(z-1))^q
//              sum_{j=1..q} (-1)^j j^m / ((j-1)!(q-j)!),
// the cotangent-parameterized double sum with (1+i cot pi b)/2 replaced by
// its algebraic equivalent z/(z-1).
template <class R>
EvalResult<R> polylog_neg_closed(unsigned m, Complex<R> z,
                                 const PrecisionConfig& cfg = {}) {
    detail::require_z_not_one(z, cfg.guard);
    const Complex<R> w = z / (z - Complex<R>{R(1)});
    const auto fact = detail::factorials<R>(m + 1);
    std::vector<R> pj(m + 2);
    for (unsigned j = 1; j <= m + 1; ++j) pj[j] = pow_int(R(static_cast<int>(j)), m);
    CondSum<R> acc;
    Complex<R> aq;
    for (unsigned q = 1; q <= m + 1; ++q) {
        aq = (q == 1) ? w : aq * w * R(static_cast<int>(q - 1));
        detail::RealCondSum<R> inner;
        R e = R(1) / fact[q - 1];  // 1/((j-1)!(q-j)!) at j = 1
        for (unsigned j = 1; j <= q; ++j) {
            R t = pj[j] * e;
            if (j % 2 != 0) t = -t;
            inner.add(t);
            if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
        }
        acc.add(aq * inner.value(), mag(aq) * inner.abs_sum());
    }
    return {acc.value(), acc.condition(), Method::polylog_closed};
}

// Li_{-m}(z) = 1/(1-z) sum_{q=1..m} q! (z/(z-1))^q
//              sum_{j=1..q} (-1)^j j^(m-1) / ((j-1)!(q-j)!),   m >= 1.
template <class R>
EvalResult<R> polylog_neg_transf(unsigned m, Complex<R> z,
                                 const PrecisionConfig& cfg = {}) {
    if (m < 1) throw std::domain_error("polylog_neg_transf: m must be >= 1");
    detail::require_z_not_one(z, cfg.guard);
    const Complex<R> zm1 = z - Complex<R>{R(1)};
    const Complex<R> w = z / zm1;
    const auto fact = detail::factorials<R>(m);
    std::vector<R> pj(m + 1);
    for (unsigned j = 1; j <= m; ++j) pj[j] = pow_int(R(static_cast<int>(j)), m - 1);
    CondSum<R> acc;
    Complex<R> aq;  // q! w^q
    for (unsigned q = 1; q <= m; ++q) {
        aq = (q == 1) ? w : aq * w * R(static_cast<int>(q));
        detail::RealCondSum<R> inner;
        R e = R(1) / fact[q - 1];
        for (unsigned j = 1; j <= q; ++j) {
            R t = pj[j] * e;
            if (j % 2 != 0) t = -t;
            inner.add(t);
            if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
        }
        acc.add(aq * inner.value(), mag(aq) * inner.abs_sum());
    }
    Complex<R> pre = -(Complex<R>{R(1)} / zm1);
    return {pre * acc.value(), acc.condition(), Method::polylog_transf};
}

// Phi(z,-m,u) = -1/(z-1) sum_{q=0..m} q! (z/(z-1))^q
//               sum_{j=0..q} (-1)^j (j+u)^m / (j!(q-j)!).
template <class R>
EvalResult<R> lerch_neg(unsigned m, Complex<R> z, Complex<R> u,
                        const PrecisionConfig& cfg = {}) {
    detail::require_z_not_one(z, cfg.guard);
    const Complex<R> zm1 = z - Complex<R>{R(1)};
    const Complex<R> w = z / zm1;
    const auto fact = detail::factorials<R>(m);
    std::vector<Complex<R>> pj(m + 1);
    for (unsigned j = 0; j <= m; ++j)
        pj[j] = pow_int(u + Complex<R>{R(static_cast<int>(j))}, m);
    CondSum<R> acc;
    Complex<R> aq{R(1)};  // q! w^q
    for (unsigned q = 0; q <= m; ++q) {
        if (q > 0) aq = aq * w * R(static_cast<int>(q));
        CondSum<R> inner;
        R e = R(1) / fact[q];  // 1/(j!(q-j)!) at j = 0
        for (unsigned j = 0; j <= q; ++j) {
            Complex<R> t = pj[j] * e;
            if (j % 2 != 0) t = -t;
            inner.add(t);
            e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j + 1));
        }
        acc.add(aq * inner.value(), mag(aq) * inner.abs_sum());
    }
    Complex<R> pre = -(Complex<R>{R(1)} / zm1);
    return {pre * acc.value(), acc.condition(), Method::lerch_closed};
}

// Phi(e^{-2 pi i b}, -k+1, u+1) via the cotangent parameterization:
//   e^{2 pi i b} sum_{q=1..k} (q-1)! ((1+i cot pi b)/2)^q
//                sum_{j=1..q} (-1)^j (j+u)^(k-1) / ((j-1)!(q-j)!),  k >= 1.
template <class R>
EvalResult<R> lerch_neg_cot_form(unsigned k, Complex<R> b, Complex<R> u,
                                 const PrecisionConfig& cfg = {}) {
    if (k < 1) throw std::domain_error("lerch_neg_cot_form: k must be >= 1");
    if (dist_to_integer(b) < cfg.guard)
        throw std::domain_error("lerch_neg_cot_form: b within guard of an integer");
    const Complex<R> pb = Complex<R>{constants<R>::pi()} * b;
    const Complex<R> ct = cot_c(pb, cfg.guard);
    const Complex<R> C =
        (Complex<R>{R(1)} + Complex<R>{R(0), R(1)} * ct) * R(0.5);
    const Complex<R> E = unit_phase(-b);  // e^{2 pi i b}
    const auto fact = detail::factorials<R>(k);
    std::vector<Complex<R>> pj(k + 1);
    for (unsigned j = 1; j <= k; ++j)
        pj[j] = pow_int(u + Complex<R>{R(static_cast<int>(j))}, k - 1);
    CondSum<R> acc;
    Complex<R> aq;
    for (unsigned q = 1; q <= k; ++q) {
        aq = (q == 1) ? C : aq * C * R(static_cast<int>(q - 1));
        CondSum<R> inner;
        R e = R(1) / fact[q - 1];
        for (unsigned j = 1; j <= q; ++j) {
            Complex<R> t = pj[j] * e;
            if (j % 2 != 0) t = -t;
            inner.add(t);
            if (j < q) e = e * R(static_cast<int>(q - j)) / R(static_cast<int>(j));
        }
        acc.add(aq * inner.value(), mag(aq) * inner.abs_sum());
    }
    return {E * acc.value(), acc.condition(), Method::lerch_cot};
}

// Phi(z,k,u) for positive integer k by the power series
//   -1/(z-1) sum_{q>=0} (z/(z-1))^q sum_{j=0..q} (-1)^j C(q,j) (j+u)^(-k),
// summed until the q-th term drops below tol * |partial sum|.
template <class R>
EvalResult<R> lerch_pos_series(unsigned k, Complex<R> z, Complex<R> u, double tol,
                               const PrecisionConfig& cfg = {}) {
    if (k < 1) throw std::domain_error("lerch_pos_series: k must be >= 1");
    detail::require_z_not_one(z, cfg.guard);
    const Complex<R> zm1 = z - Complex<R>{R(1)};
    const Complex<R> w = z / zm1;
    if (mag(w) >= 1.0 - 1e-3)
        throw std::domain_error("lerch_pos_series: |z/(z-1)| too close to 1");
    const double ur = std::round(to_double(u.re));
    if (ur <= 0.0 && mag(u - Complex<R>{R(ur)}) < cfg.guard)
        throw std::domain_error("lerch_pos_series: u at a non-positive integer");

    constexpr unsigned kCap = 10000;
    std::vector<Complex<R>> invpow;  // (j+u)^(-k)
    invpow.reserve(64);
    CondSum<R> acc;
    Complex<R> wq{R(1)};
    for (unsigned q = 0; q <= kCap; ++q) {
        if (q > 0) wq = wq * w;
        invpow.push_back(Complex<R>{R(1)} /
                         pow_int(u + Complex<R>{R(static_cast<int>(q))}, k));
        CondSum<R> inner;
        R binom = R(1);  // C(q,j)
        for (unsigned j = 0; j <= q; ++j) {
            Complex<R> t = invpow[j] * binom;
            if (j % 2 != 0) t = -t;
            inner.add(t);
            binom = binom * R(static_cast<int>(q - j)) / R(static_cast<int>(j + 1));
        }
        Complex<R> term = wq * inner.value();
        acc.add(term, mag(wq) * inner.abs_sum());
        if (q >= 1 && mag(term) < tol * mag(acc.value())) {
            Complex<R> pre = -(Complex<R>{R(1)} / zm1);
            return {pre * acc.value(), acc.condition(), Method::lerch_series};
        }
    }
    throw ConvergenceError("lerch_pos_series: term cap reached before tolerance");
}

// Pair ( sum_{j=0..k} Li_{-j}(z) u^(k-j) / (j!(k-j)!), (z/k!) Phi(z,-k,u+1) ).
template <class R>
std::pair<EvalResult<R>, EvalResult<R>>
sum_polylog_identity(unsigned k, Complex<R> z, Complex<R> u,
                     const PrecisionConfig& cfg = {}) {
    const auto fact = detail::factorials<R>(k);
    CondSum<R> lhs;
    for (unsigned j = 0; j <= k; ++j) {
        auto li = polylog_neg_stirling(j, z, cfg);
        Complex<R> term = li.value * pow_int(u, k - j) / (fact[j] * fact[k - j]);
        lhs.add(term, mag(term) * li.condition);
    }
    EvalResult<R> left{lhs.value(), lhs.condition(), Method::polylog_sum};
    auto phi = lerch_neg(k, z, u + Complex<R>{R(1)}, cfg);
    EvalResult<R> right{z * phi.value / fact[k], phi.condition, Method::lerch_closed};
    return {left, right};
}

// Pair ( sum_{j=0..k} Phi(z,-j,v) u^(k-j) / (j!(k-j)!), (1/k!) Phi(z,-k,u+v) ).
template <class R>
std::pair<EvalResult<R>, EvalResult<R>>
sum_lerch_identity(unsigned k, Complex<R> z, Complex<R> u, Complex<R> v,
                   const PrecisionConfig& cfg = {}) {
    const auto fact = detail::factorials<R>(k);
    CondSum<R> lhs;
    for (unsigned j = 0; j <= k; ++j) {
        auto phi = lerch_neg(j, z, v, cfg);
        Complex<R> term = phi.value * pow_int(u, k - j) / (fact[j] * fact[k - j]);
        lhs.add(term, mag(term) * phi.condition);
    }
    EvalResult<R> left{lhs.value(), lhs.condition(), Method::lerch_sum};
    auto phi = lerch_neg(k, z, u + v, cfg);
    EvalResult<R> right{phi.value / fact[k], phi.condition, Method::lerch_closed};
    return {left, right};
}

}  // namespace lerch::neglerch
