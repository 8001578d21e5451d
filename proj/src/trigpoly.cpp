#include "lerch/trigderiv.hpp"

namespace lerch::trigderiv {

namespace {

using exactmath::BigInt;

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p) {
    if (p.size() <= 1) return {};
    std::vector<BigInt> d(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * BigInt(i);
    return d;
}

// r += s * c^shift
void add_shifted(std::vector<BigInt>& r, const std::vector<BigInt>& s, size_t shift) {
    if (r.size() < s.size() + shift) r.resize(s.size() + shift, BigInt(0));
    for (size_t i = 0; i < s.size(); ++i) r[i + shift] += s[i];
}

}  // namespace

CotPolynomial cot_poly(unsigned k) {
    CotPolynomial p;
    p.kind = CotPolynomial::Kind::poly_in_cot;
    p.coeffs = {BigInt(0), BigInt(1)};  // P_0(c) = c
    for (unsigned step = 0; step < k; ++step) {
        auto d = poly_derivative(p.coeffs);
        std::vector<BigInt> next;
        add_shifted(next, d, 0);
        add_shifted(next, d, 2);
        for (auto& c : next) c = -c;  // -(1+c^2) P'
        p.coeffs = std::move(next);
    }
    return p;
}

CotPolynomial csc_poly(unsigned k) {
    CotPolynomial p;
    p.kind = CotPolynomial::Kind::csc_times_poly;
    p.coeffs = {BigInt(1)};  // Q_0 = 1
    for (unsigned step = 0; step < k; ++step) {
        auto d = poly_derivative(p.coeffs);
        std::vector<BigInt> next;
        add_shifted(next, p.coeffs, 1);  // c * Q
        add_shifted(next, d, 0);         // (1+c^2) Q'
        add_shifted(next, d, 2);
        for (auto& c : next) c = -c;
        p.coeffs = std::move(next);
    }
    return p;
}

}  // namespace lerch::trigderiv
