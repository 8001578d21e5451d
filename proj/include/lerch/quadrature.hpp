#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lerch/numcore.hpp"

namespace lerch::quadrature {

// Controls all integral representations. Endpoints are never sampled: the
// panel rule has interior nodes only, and endpoint_guard > 0 additionally
// clips the domain to (guard, 1-guard).
struct QuadratureSpec {
    int order = 15;            // Gauss-Legendre nodes per panel
    double rel_tol = 1e-10;
    int max_subdiv = 2000;
    double endpoint_guard = 0.0;
    bool parallel = true;      // level-parallel panel evaluation (OpenMP)
};

template <class R>
struct PanelRule {
    std::vector<R> nodes;    // on (-1, 1), strictly interior
    std::vector<R> weights;
};

// Gauss-Legendre nodes/weights by Newton iteration on the recurrence,
// carried out in R so dd integration gets dd-accurate nodes.
template <class R>
PanelRule<R> gauss_legendre(int n) {
    PanelRule<R> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        R x = R(std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5)));
        R dp{};
        for (int it = 0; it < 60; ++it) {
            R p0(1), p1 = x;
            for (int j = 2; j <= n; ++j) {
                R p2 = (R(2 * j - 1) * x * p1 - R(j - 1) * p0) / R(j);
                p0 = p1;
                p1 = p2;
            }
            dp = R(n) * (x * p1 - p0) / (x * x - R(1));
            R dx = p1 / dp;
            x = x - dx;
            using std::fabs;
            if (to_double(fabs(dx)) <= constants<R>::eps() * std::fabs(to_double(x)) ||
                to_double(fabs(dx)) == 0.0)
                break;
        }
        R w = R(2) / ((R(1) - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = R(0);
    return rule;
}

namespace detail {

template <class R>
struct PanelEval {
    Complex<R> value;
    double l1 = 0.0;  // sum |w f| * half: scale of the evaluation noise
};

template <class R, class F>
PanelEval<R> eval_panel(F& f, const PanelRule<R>& rule, R lo, R hi) {
    const R half = (hi - lo) * R(0.5);
    const R mid = (hi + lo) * R(0.5);
    CondSum<R> acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        acc.add(f(mid + half * rule.nodes[i]) * rule.weights[i]);
    return {acc.value() * half, acc.abs_sum() * std::fabs(to_double(half))};
}

}  // namespace detail

// Adaptive open-rule integration of f over (0,1). f maps R -> Complex<R>
// and is never called at u <= 0 or u >= 1. Refinement is level-synchronous:
// all pending panels of a level are evaluated (in parallel when enabled)
// and accepted or split in deterministic interval order, and the final
// accumulation runs over position-sorted panels, so results are
// bit-identical between the serial and parallel paths.
template <class R, class F>
EvalResult<R> integrate_open(F&& f, const QuadratureSpec& spec = {}) {
    if (spec.order < 2) throw std::domain_error("integrate_open: order must be >= 2");
    if (spec.rel_tol <= 0.0) throw std::domain_error("integrate_open: tolerance must be > 0");
    if (spec.endpoint_guard < 0.0 || spec.endpoint_guard >= 0.5)
        throw std::domain_error("integrate_open: endpoint guard must be in [0, 0.5)");
    const PanelRule<R> rule = gauss_legendre<R>(spec.order);

    struct Seg {
        R lo, hi;
        Complex<R> val;
        double l1 = 0.0;
        double err_min = std::numeric_limits<double>::infinity();  // best ancestor err
    };
    auto make_seg = [&](R lo, R hi, const detail::PanelEval<R>& e) {
        return Seg{lo, hi, e.value, e.l1,
                   std::numeric_limits<double>::infinity()};
    };

    const R a = R(spec.endpoint_guard);
    const R b = R(1.0 - spec.endpoint_guard);
    const double min_len = to_double(b - a) * 0x1.0p-24;
    std::vector<Seg> pending{make_seg(a, b, detail::eval_panel(f, rule, a, b))};
    std::vector<Seg> accepted;
    int subdivisions = 0;
    double unresolved = 0.0;
    // error estimates at or below this multiple of eps * local mass are
    // evaluation roundoff, not truncation
    const double noise = 256.0 * constants<R>::eps();

    while (!pending.empty()) {
        // one level: evaluate both halves of every pending panel
        std::vector<Seg> halves(2 * pending.size());
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(pending.size());
#pragma omp parallel for schedule(dynamic) if (spec.parallel)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Seg& s = pending[static_cast<size_t>(i)];
            R mid = (s.lo + s.hi) * R(0.5);
            halves[2 * i] = make_seg(s.lo, mid, detail::eval_panel(f, rule, s.lo, mid));
            halves[2 * i + 1] = make_seg(mid, s.hi, detail::eval_panel(f, rule, mid, s.hi));
        }

        // global scale for the relative test: accepted so far plus this level
        CondSum<R> est;
        for (const auto& s : accepted) est.add(s.val);
        for (const auto& h : halves) est.add(h.val);
        const double scale = std::max(mag(est.value()), 1e-300);

        std::vector<Seg> next;
        for (size_t i = 0; i < pending.size(); ++i) {
            const Seg& parent = pending[i];
            Seg l = halves[2 * i];
            Seg r = halves[2 * i + 1];
            const double err = mag(parent.val - (l.val + r.val));
            const double len = to_double(parent.hi - parent.lo) / to_double(b - a);
            const bool within_budget =
                err <= spec.rel_tol * scale * len || err <= noise * parent.l1;
            // bisection stopped reducing the estimate while it stays
            // globally negligible: evaluation noise (amplified near the cot
            // poles), which further splitting cannot reduce
            const bool noise_stuck =
                err >= 0.25 * parent.err_min && err <= 1e-4 * scale;
            const bool too_short = to_double(parent.hi - parent.lo) <= min_len;
            if (within_budget || noise_stuck || too_short) {
                accepted.push_back(l);
                accepted.push_back(r);
                if (!within_budget) unresolved += err;
            } else {
                if (++subdivisions > spec.max_subdiv)
                    throw ConvergenceError("integrate_open: subdivision limit reached");
                if (!(to_double(l.lo) < to_double(l.hi) && to_double(r.lo) < to_double(r.hi)))
                    throw ConvergenceError("integrate_open: interval underflow");
                l.err_min = r.err_min = std::min(parent.err_min, err);
                next.push_back(l);
                next.push_back(r);
            }
        }
        pending = std::move(next);
    }

    std::stable_sort(accepted.begin(), accepted.end(),
                     [](const Seg& x, const Seg& y) { return to_double(x.lo) < to_double(y.lo); });
    CondSum<R> total;
    double l1_total = 0.0;
    for (const auto& s : accepted) {
        total.add(s.val);
        l1_total += s.l1;
    }
    // error mass that refused to resolve and is not small against the
    // result means the integral did not converge (non-integrable behavior)
    if (unresolved > 0.01 * std::max(mag(total.value()), 1e-300))
        throw ConvergenceError("integrate_open: unresolved error mass; integral may diverge");
    EvalResult<R> out{total.value(), 1.0, Method::quadrature_open};
    // condition: integral of |f| over |integral of f| (the cancellation
    // ratio bounding achievable relative accuracy), widened by any error
    // mass left unresolved at the noise floor, in units of eps
    const double vmag = mag(out.value);
    if (vmag == 0.0) {
        out.condition = l1_total == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
    } else {
        out.condition = std::max({1.0, l1_total / vmag,
                                  unresolved / (constants<R>::eps() * vmag)});
    }
    return out;
}

}  // namespace lerch::quadrature
