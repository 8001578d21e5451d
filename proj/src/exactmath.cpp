#include "lerch/exactmath.hpp"

#include <stdexcept>

namespace lerch::exactmath {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

std::vector<BigInt> stirling2_row(unsigned n) {
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;  // S(0,0)
    for (unsigned i = 1; i <= n; ++i) {
        // update in place, descending q
        for (unsigned q = i; q >= 1; --q) {
            BigInt prev_q = (q <= i - 1) ? row[q] : BigInt(0);
            row[q] = BigInt(q) * prev_q + row[q - 1];
        }
        row[0] = 0;
    }
    return row;
}

BigInt stirling2(unsigned n, unsigned q) {
    if (q > n) return 0;
    if (q == 0) return n == 0 ? 1 : 0;
    return stirling2_row(n)[q];
}

BigInt stirling2_explicit(unsigned n, unsigned q) {
    if (q > n) return 0;
    BigInt sum = 0;
    for (unsigned j = 0; j <= q; ++j) {
        BigInt term = binomial(q, j) * pow(BigInt(j), n);
        if ((q - j) % 2 != 0) term = -term;
        sum += term;
    }
    BigInt qf = factorial(q);
    BigInt quo = sum / qf;
    if (quo * qf != sum)
        throw std::logic_error("stirling2_explicit: alternating sum not divisible by q!");
    return quo;
}

BigRational pow_rat(const BigRational& base, unsigned e) {
    BigRational r = 1;
    BigRational b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

BigRational stirling_weighted_sum_lhs(unsigned k, unsigned q, const BigRational& u) {
    BigRational sum = 0;
    for (unsigned j = q; j <= k; ++j) {
        BigRational term = pow_rat(u, j) * BigRational(stirling2(j, q));
        term /= BigRational(factorial(j - 1) * factorial(k - j));
        sum += term;
    }
    return sum;
}

BigRational stirling_weighted_sum_rhs(unsigned k, unsigned q, const BigRational& u) {
    BigRational sum = 0;
    for (unsigned j = 1; j <= q; ++j) {
        BigRational term = pow_rat(BigRational(j) * u + 1, k - 1);
        term /= BigRational(factorial(j - 1) * factorial(q - j));
        if ((q - j) % 2 != 0) term = -term;
        sum += term;
    }
    return u * sum / BigRational(factorial(k - 1));
}

std::pair<BigRational, BigRational>
stirling_binomial_identity(unsigned k, unsigned q, const BigRational& u) {
    BigRational lhs = 0;
    for (unsigned j = q; j <= k; ++j) {
        BigRational term = pow_rat(u, j) * BigRational(stirling2(j, q));
        term /= BigRational(factorial(j) * factorial(k - j));
        lhs += term;
    }
    BigRational rhs = 0;
    for (unsigned j = 0; j <= q; ++j) {
        BigRational term = pow_rat(BigRational(j) * u + 1, k);
        term /= BigRational(factorial(j) * factorial(q - j));
        if ((q - j) % 2 != 0) term = -term;
        rhs += term;
    }
    rhs /= BigRational(factorial(k));
    return {lhs, rhs};
}

BigRational BernoulliPoly::operator()(const BigRational& x) const {
    BigRational v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * x + coeffs[i];
    return v;
}

BigRational bernoulli_number(unsigned j) {
    // sum_{i<m} C(m,i) B_i = 0 for m >= 2, B_0 = 1; yields B_1 = -1/2.
    std::vector<BigRational> B(j + 1);
    B[0] = 1;
    for (unsigned m = 1; m <= j; ++m) {
        BigRational acc = 0;
        for (unsigned i = 0; i < m; ++i)
            acc += BigRational(binomial(m + 1, i)) * B[i];
        B[m] = -acc / BigRational(m + 1);
    }
    return B[j];
}

BernoulliPoly bernoulli_poly(unsigned k) {
    BernoulliPoly p;
    p.degree = k;
    p.coeffs.assign(k + 1, BigRational(0));
    // B_k(x) = sum_{j=0..k} C(k,j) B_j x^(k-j)
    std::vector<BigRational> B(k + 1);
    B[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        BigRational acc = 0;
        for (unsigned i = 0; i < m; ++i)
            acc += BigRational(binomial(m + 1, i)) * B[i];
        B[m] = -acc / BigRational(m + 1);
    }
    for (unsigned j = 0; j <= k; ++j)
        p.coeffs[k - j] = BigRational(binomial(k, j)) * B[j];
    return p;
}

BigRational zeta_nonpositive(unsigned j, const BigRational& v) {
    if (j == 0) throw std::domain_error("zeta_nonpositive: j must be >= 1");
    return -bernoulli_poly(j)(v) / BigRational(j);
}

std::pair<BigRational, BigRational>
zeta_shift_identity(unsigned k, const BigRational& u) {
    BigRational lhs = zeta_nonpositive(k + 1, u + 1);
    BigRational rhs = -pow_rat(u, k + 1) / BigRational(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        BigRational zj = zeta_nonpositive(j + 1, BigRational(1));  // zeta(-j)
        rhs += BigRational(binomial(k, j)) * zj * pow_rat(u, k - j);
    }
    return {lhs, rhs};
}

BigRational falling_factorial(const BigRational& x, unsigned k) {
    BigRational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (x - BigRational(i));
    return r;
}

std::pair<BigRational, BigRational>
factorial_power_binomial(const BigRational& x, const BigRational& y, unsigned k) {
    BigRational lhs = falling_factorial(x + y, k);
    BigRational rhs = 0;
    for (unsigned j = 0; j <= k; ++j)
        rhs += BigRational(binomial(k, j)) * falling_factorial(x, j) *
               falling_factorial(y, k - j);
    return {lhs, rhs};
}

}  // namespace lerch::exactmath
