#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace lerch::exactmath {

// Exact arithmetic backing. BigRational is kept in canonical form by the
// backend: lowest terms, denominator > 0.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Stirling numbers of the second kind. S(n,q) = q*S(n-1,q) + S(n-1,q-1),
// S(0,0) = 1, S(n,q) = 0 for q > n or (q == 0, n > 0).
BigInt stirling2(unsigned n, unsigned q);

// Row S(n,0..n), computed in one pass of the triangular recurrence.
std::vector<BigInt> stirling2_row(unsigned n);

// S(n,q) via the alternating sum (1/q!) sum_{j=0..q} (-1)^(q-j) C(q,j) j^n.
// Throws std::logic_error if the sum is not divisible by q!.
BigInt stirling2_explicit(unsigned n, unsigned q);

BigRational pow_rat(const BigRational& base, unsigned e);

// sum_{j=q..k} u^j S(j,q) / ((j-1)! (k-j)!)          for 1 <= q <= k
BigRational stirling_weighted_sum_lhs(unsigned k, unsigned q, const BigRational& u);

// (u/(k-1)!) sum_{j=1..q} (-1)^(q-j) (j u + 1)^(k-1) / ((j-1)! (q-j)!)
BigRational stirling_weighted_sum_rhs(unsigned k, unsigned q, const BigRational& u);

// Pair ( sum_{j=q..k} u^j S(j,q)/(j!(k-j)!),
//        (1/k!) sum_{j=0..q} (-1)^(q-j) (j u + 1)^k / (j!(q-j)!) );
// the two entries are equal for every 0 <= q <= k and every rational u.
std::pair<BigRational, BigRational>
stirling_binomial_identity(unsigned k, unsigned q, const BigRational& u);

// Monic Bernoulli polynomial B_k; coeffs[i] multiplies x^i, size k+1.
// Convention B_1 = -1/2, so that B_j(v) = -j zeta(1-j, v).
struct BernoulliPoly {
    unsigned degree = 0;
    std::vector<BigRational> coeffs;

    BigRational operator()(const BigRational& x) const;
};

BernoulliPoly bernoulli_poly(unsigned k);
BigRational bernoulli_number(unsigned j);

// zeta(1-j, v) = -B_j(v)/j for j >= 1, exactly.
BigRational zeta_nonpositive(unsigned j, const BigRational& v);

// Pair ( zeta(-k, u+1),
//        -u^(k+1)/(k+1) + k! sum_{j=0..k} zeta(-j) u^(k-j) / (j!(k-j)!) );
// entries are equal for every k >= 0.
std::pair<BigRational, BigRational>
zeta_shift_identity(unsigned k, const BigRational& u);

// Falling factorial x^(k) = x (x-1) ... (x-k+1); empty product for k = 0.
BigRational falling_factorial(const BigRational& x, unsigned k);

// Pair ( (x+y)^(k), k! sum_j x^(j) y^(k-j) / (j!(k-j)!) ); entries equal.
std::pair<BigRational, BigRational>
factorial_power_binomial(const BigRational& x, const BigRational& y, unsigned k);

}  // namespace lerch::exactmath
