#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "checks.hpp"
#include "cli_support.hpp"
#include "lerch/hurwitz.hpp"
#include "lerch/trigderiv.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace lerch;
using lerchcli::OutputFormat;
using lerchcli::OutputRecord;

struct GlobalOpts {
    std::string format = "jsonl";
    std::string precision = "double";
    double guard = 1e-12;
    double quad_tol = 1e-10;
    int quad_max_subdiv = 2000;
    int quad_order = 15;
    std::uint64_t seed = 12345;
    double tol = 0.0;  // 0 = per-operation default
    unsigned max_k = 0;
    bool oracle = false;
    bool timing = false;
    bool serial = false;
};

using ParamList = std::vector<std::pair<std::string, std::string>>;

const std::string& require_param(const ParamList& params, const std::string& name) {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw std::invalid_argument("missing parameter '" + name + "'");
}

std::string param_or(const ParamList& params, const std::string& name,
                     const std::string& fallback) {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    return fallback;
}

template <class R>
Complex<R> to_cx(const lerch::Cd& z) {
    return {R(z.re), R(z.im)};
}

// Orders are small non-negative integers; anything else is a usage error
// (the formulas are factorial-limited long before 512).
unsigned parse_order(const ParamList& params, const std::string& name) {
    long v = lerchcli::parse_int(require_param(params, name));
    if (v < 0 || v > 512)
        throw std::invalid_argument("parameter '" + name + "' must be in [0, 512]");
    return static_cast<unsigned>(v);
}

// Single evaluation point shared by `eval`, `deriv` and `sweep`.
template <class R>
OutputRecord run_point(const std::string& fn, const ParamList& params,
                       const GlobalOpts& g) {
    OutputRecord rec;
    rec.function = fn;
    rec.params = params;
    rec.dd = g.precision == "dd";

    PrecisionConfig cfg;
    cfg.guard = g.guard;
    cfg.precision = rec.dd ? PrecisionConfig::Precision::dd
                           : PrecisionConfig::Precision::double_prec;
    quadrature::QuadratureSpec qs;
    qs.order = g.quad_order;
    qs.rel_tol = g.quad_tol;
    qs.max_subdiv = g.quad_max_subdiv;
    qs.parallel = !g.serial;

    const auto t0 = std::chrono::steady_clock::now();
    EvalResult<R> res;

    if (fn == "polylog") {
        const unsigned m = parse_order(params, "m");
        const auto z = to_cx<R>(lerchcli::parse_complex(require_param(params, "z")));
        const std::string method = param_or(params, "method", "stirling");
        if (method == "stirling")
            res = neglerch::polylog_neg_stirling(m, z, cfg);
        else if (method == "closed")
            res = neglerch::polylog_neg_closed(m, z, cfg);
        else if (method == "transf")
            res = neglerch::polylog_neg_transf(m, z, cfg);
        else
            throw std::invalid_argument("unknown polylog method '" + method + "'");
    } else if (fn == "lerch") {
        const std::string method = param_or(params, "method", "closed");
        if (method == "closed") {
            const unsigned m = parse_order(params, "m");
            const auto z = to_cx<R>(lerchcli::parse_complex(require_param(params, "z")));
            const auto u = to_cx<R>(lerchcli::parse_complex(require_param(params, "u")));
            res = neglerch::lerch_neg(m, z, u, cfg);
        } else if (method == "cot") {
            const unsigned k = parse_order(params, "k");
            const auto b = to_cx<R>(lerchcli::parse_complex(require_param(params, "b")));
            const auto u = to_cx<R>(lerchcli::parse_complex(require_param(params, "u")));
            res = neglerch::lerch_neg_cot_form(k, b, u, cfg);
        } else if (method == "series") {
            const unsigned k = parse_order(params, "k");
            const auto z = to_cx<R>(lerchcli::parse_complex(require_param(params, "z")));
            const auto u = to_cx<R>(lerchcli::parse_complex(require_param(params, "u")));
            res = neglerch::lerch_pos_series(k, z, u, g.tol > 0 ? g.tol : 1e-12, cfg);
        } else {
            throw std::invalid_argument("unknown lerch method '" + method + "'");
        }
    } else if (fn == "hurwitz") {
        const int k = static_cast<int>(lerchcli::parse_int(require_param(params, "k")));
        const auto b = to_cx<R>(lerchcli::parse_complex(require_param(params, "b")));
        const std::string method = param_or(params, "method", "series");
        hurwitz::HurwitzMethod hm;
        if (!hurwitz::parse_hurwitz_method(method, hm))
            throw std::invalid_argument("unknown hurwitz method '" + method + "'");
        switch (hm) {
            case hurwitz::HurwitzMethod::series:
                res = hurwitz::hurwitz_series(Complex<R>{R(static_cast<double>(k))}, b,
                                              g.tol > 0 ? g.tol : 1e-12, cfg);
                break;
            case hurwitz::HurwitzMethod::integral_v1:
                res = hurwitz::hurwitz_integral_v1(k, b, qs, cfg);
                break;
            case hurwitz::HurwitzMethod::elementary:
                res = hurwitz::hurwitz_elementary(k, b, qs, cfg);
                break;
            case hurwitz::HurwitzMethod::half_integer:
                res = hurwitz::hurwitz_half_integer(k, b.re, qs, cfg);
                break;
            case hurwitz::HurwitzMethod::integral_v2:
                res = hurwitz::hurwitz_integral_v2(k, b, qs, cfg);
                break;
            case hurwitz::HurwitzMethod::analytic_final:
                res = hurwitz::hurwitz_analytic_final(k, b, qs, cfg);
                break;
            case hurwitz::HurwitzMethod::genfunc:
                throw std::invalid_argument("use `eval genfunc` for the generating function");
        }
    } else if (fn == "genfunc") {
        const auto x = to_cx<R>(lerchcli::parse_complex(require_param(params, "x")));
        const auto b = to_cx<R>(lerchcli::parse_complex(require_param(params, "b")));
        res = hurwitz::genfunc_f(x, b, qs, cfg);
    } else if (fn == "cot" || fn == "csc" || fn == "tan" || fn == "sec") {
        const unsigned k = parse_order(params, "k");
        const R a = R(lerchcli::parse_real(require_param(params, "a")));
        const R x = R(lerchcli::parse_real(require_param(params, "x")));
        const R shift = R(lerchcli::parse_real(param_or(params, "shift", "0")));
        R oracle{};
        if (fn == "cot") {
            res = trigderiv::cot_deriv(k, a, x, shift, cfg);
            if (g.oracle) oracle = trigderiv::cot_deriv_oracle(k, a, x, shift, cfg.guard);
        } else if (fn == "csc") {
            res = trigderiv::csc_deriv(k, a, x, shift, cfg);
            if (g.oracle) oracle = trigderiv::csc_deriv_oracle(k, a, x, shift, cfg.guard);
        } else if (fn == "tan") {
            res = trigderiv::tan_deriv(k, a, x, shift, cfg);
            if (g.oracle) oracle = trigderiv::tan_deriv_oracle(k, a, x, shift, cfg.guard);
        } else {
            res = trigderiv::sec_deriv(k, a, x, shift, cfg);
            if (g.oracle) oracle = trigderiv::sec_deriv_oracle(k, a, x, shift, cfg.guard);
        }
        if (g.oracle) {
            rec.has_oracle = true;
            rec.oracle = to_double(oracle);
            rec.discrepancy = mag(res.value - Complex<R>{oracle});
        }
    } else if (fn == "expratio") {
        const unsigned k = parse_order(params, "k");
        const auto a = to_cx<R>(lerchcli::parse_complex(require_param(params, "a")));
        const auto b = to_cx<R>(lerchcli::parse_complex(require_param(params, "b")));
        res = trigderiv::exp_ratio_deriv_at_zero(k, a, b, cfg);
        if (g.oracle) {
            // no exact oracle for this one; use a fourth-order stencil
            auto f = [&](double t) {
                Complex<R> arg = a * R(t) + b;
                return Complex<R>{R(t)} / (exp(arg) - Complex<R>{R(1)});
            };
            const double h = 1e-2;
            Complex<R> fd;
            if (k == 1) {
                fd = (f(-2 * h) - f(2 * h) + (f(h) - f(-h)) * R(8.0)) / R(12.0 * h);
            } else if (k == 2) {
                fd = (-(f(2 * h) + f(-2 * h)) + (f(h) + f(-h)) * R(16.0) -
                      f(0.0) * R(30.0)) /
                     R(12.0 * h * h);
            } else {
                throw std::invalid_argument("--oracle for expratio supports k <= 2");
            }
            rec.has_oracle = true;
            rec.oracle = to_double(fd.re);
            rec.discrepancy = mag(res.value - fd);
        }
    } else {
        throw std::invalid_argument("unknown function '" + fn + "'");
    }

    const auto t1 = std::chrono::steady_clock::now();
    rec.has_value = true;
    rec.value_re = to_double(res.value.re);
    rec.value_im = to_double(res.value.im);
    if constexpr (std::is_same_v<R, DDouble>) {
        rec.value_re_lo = res.value.re.lo();
        rec.value_im_lo = res.value.im.lo();
    }
    rec.condition = res.condition;
    rec.method = to_string(res.method);
    if (g.timing)
        rec.elapsed_us =
            std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    return rec;
}

OutputRecord run_point_dispatch(const std::string& fn, const ParamList& params,
                                const GlobalOpts& g) {
    if (g.precision == "dd") return run_point<DDouble>(fn, params, g);
    return run_point<double>(fn, params, g);
}

int classify_and_report(const std::exception& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    }
    if (dynamic_cast<const ConvergenceError*>(&e)) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 3;
    }
    if (dynamic_cast<const std::domain_error*>(&e) ||
        dynamic_cast<const std::overflow_error*>(&e)) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    }
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
}

int emit_single(const std::string& fn, const ParamList& params, const GlobalOpts& g) {
    OutputFormat fmt = g.format == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
    try {
        OutputRecord rec = run_point_dispatch(fn, params, g);
        if (fmt == OutputFormat::csv) std::printf("%s\n", lerchcli::csv_header().c_str());
        std::printf("%s\n", lerchcli::format_record(rec, fmt).c_str());
        return 0;
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }
}

int run_check(const std::string& suite, const GlobalOpts& g) {
    lerchcli::CheckOptions opt;
    opt.max_k = g.max_k;
    opt.seed = g.seed;
    opt.tol = g.tol;
    opt.quad_tol = g.quad_tol;
    opt.guard = g.guard;

    std::vector<lerchcli::PropertyResult> results;
    auto append = [&](std::vector<lerchcli::PropertyResult> v) {
        results.insert(results.end(), v.begin(), v.end());
    };
    if (suite == "exact" || suite == "all") append(lerchcli::check_exact(opt));
    if (suite == "identities" || suite == "all") append(lerchcli::check_identities(opt));
    if (suite == "trig" || suite == "all") append(lerchcli::check_trig(opt));
    if (suite == "hurwitz" || suite == "all") append(lerchcli::check_hurwitz(opt));
    if (results.empty()) {
        std::fprintf(stderr, "usage error: unknown suite '%s'\n", suite.c_str());
        return 1;
    }
    int failures = 0;
    for (const auto& r : results) {
        std::printf("%s %-42s worst=%-12.5g tol=%s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst,
                    r.tol == 0.0 ? "exact" : lerchcli::format_double(r.tol).c_str());
        if (!r.pass) ++failures;
    }
    std::printf("%s: %zu properties, %d failed\n", suite.c_str(), results.size(), failures);
    return failures == 0 ? 0 : 4;
}

int run_sweep(const std::string& fn, const std::vector<std::string>& specs,
              const GlobalOpts& g) {
    OutputFormat fmt = g.format == "csv" ? OutputFormat::csv : OutputFormat::jsonl;
    std::vector<lerchcli::Axis> axes;
    try {
        for (const auto& s : specs) axes.push_back(lerchcli::parse_axis(s));
        if (axes.empty()) throw std::invalid_argument("sweep needs at least one parameter range");
    } catch (const std::exception& e) {
        return classify_and_report(e);
    }

    std::size_t total = 1;
    for (const auto& a : axes) total *= a.values.size();
    std::vector<OutputRecord> records(total);

    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(total);
    int usage_error = 0;
#pragma omp parallel for schedule(dynamic) if (!g.serial)
    for (std::ptrdiff_t flat = 0; flat < n; ++flat) {
        ParamList params;
        std::size_t rem = static_cast<std::size_t>(flat);
        for (std::size_t ai = axes.size(); ai-- > 0;) {
            const auto& ax = axes[ai];
            params.emplace_back(ax.name, ax.values[rem % ax.values.size()]);
            rem /= ax.values.size();
        }
        std::reverse(params.begin(), params.end());
        try {
            records[flat] = run_point_dispatch(fn, params, g);
        } catch (const std::invalid_argument&) {
#pragma omp atomic write
            usage_error = 1;
        } catch (const ConvergenceError&) {
            records[flat].function = fn;
            records[flat].params = params;
            records[flat].error = "convergence";
        } catch (const std::domain_error&) {
            records[flat].function = fn;
            records[flat].params = params;
            records[flat].error = "domain";
        } catch (const std::overflow_error&) {
            records[flat].function = fn;
            records[flat].params = params;
            records[flat].error = "overflow";
        } catch (const std::exception&) {
            records[flat].function = fn;
            records[flat].params = params;
            records[flat].error = "internal";
        }
    }
    if (usage_error) {
        std::fprintf(stderr, "usage error: malformed sweep parameters\n");
        return 1;
    }
    if (fmt == OutputFormat::csv) std::printf("%s\n", lerchcli::csv_header().c_str());
    for (const auto& rec : records)
        std::printf("%s\n", lerchcli::format_record(rec, fmt).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lerch Phi / polylogarithm at negative integer order, k-th trig "
                 "derivatives, and Hurwitz zeta integral representations"};
    app.require_subcommand(0, 1);

    GlobalOpts g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--precision", g.precision, "Working precision")
        ->check(CLI::IsMember({"double", "dd"}));
    app.add_option("--guard", g.guard, "Singular-input guard distance");
    app.add_option("--quad-tol", g.quad_tol, "Quadrature relative tolerance");
    app.add_option("--quad-max-subdiv", g.quad_max_subdiv, "Quadrature subdivision cap");
    app.add_option("--quad-order", g.quad_order, "Quadrature panel order");
    app.add_option("--seed", g.seed, "Seed for pseudo-random test grids");
    app.add_option("--tol", g.tol, "Tolerance override (series stop / check suites)");
    app.add_option("--max-k", g.max_k, "Cap for k/m ranges in check suites");
    app.add_flag("--oracle", g.oracle, "Also print the exact-oracle value (deriv)");
    app.add_flag("--timing", g.timing, "Include elapsed_us in records");
    app.add_flag("--serial", g.serial, "Disable OpenMP parallelism");

    std::function<int()> action;

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    eval->fallthrough();
    struct {
        long m = 0, k = 0;
        std::string z, u, b, x, method;
    } ev;
    {
        auto* p = eval->add_subcommand("polylog", "Li_{-m}(z)");
        p->fallthrough();
        p->add_option("-m", ev.m, "order (evaluates order -m)")->required();
        p->add_option("-z", ev.z, "complex argument")->required();
        p->add_option("--method", ev.method, "stirling|closed|transf");
        p->callback([&]() {
            action = [&]() {
                ParamList params{{"m", std::to_string(ev.m)}, {"z", ev.z}};
                if (!ev.method.empty()) params.emplace_back("method", ev.method);
                return emit_single("polylog", params, g);
            };
        });
    }
    {
        auto* p = eval->add_subcommand("lerch", "Phi(z,-m,u) and variants");
        p->fallthrough();
        p->add_option("-m", ev.m, "order (closed form evaluates order -m)");
        p->add_option("-k", ev.k, "order for cot/series parameterizations");
        p->add_option("-z", ev.z, "complex argument");
        p->add_option("-b", ev.b, "phase parameter (cot form)");
        p->add_option("-u", ev.u, "shift parameter")->required();
        p->add_option("--method", ev.method, "closed|cot|series");
        p->callback([&]() {
            action = [&]() {
                std::string method = ev.method.empty() ? "closed" : ev.method;
                ParamList params;
                if (method == "closed") {
                    params = {{"m", std::to_string(ev.m)}, {"z", ev.z}, {"u", ev.u}};
                } else if (method == "cot") {
                    params = {{"k", std::to_string(ev.k)}, {"b", ev.b}, {"u", ev.u}};
                } else {
                    params = {{"k", std::to_string(ev.k)}, {"z", ev.z}, {"u", ev.u}};
                }
                params.emplace_back("method", method);
                return emit_single("lerch", params, g);
            };
        });
    }
    {
        auto* p = eval->add_subcommand("hurwitz", "zeta(k,b)");
        p->fallthrough();
        p->add_option("-k", ev.k, "integer order >= 2")->required();
        p->add_option("-b", ev.b, "complex parameter")->required();
        p->add_option("--method", ev.method,
                      "series|integral_v1|elementary|half_integer|integral_v2|analytic_final");
        p->callback([&]() {
            action = [&]() {
                ParamList params{{"k", std::to_string(ev.k)}, {"b", ev.b}};
                if (!ev.method.empty()) params.emplace_back("method", ev.method);
                return emit_single("hurwitz", params, g);
            };
        });
    }
    {
        auto* p = eval->add_subcommand("genfunc", "f(x) = sum_{k>=2} x^k zeta(k,b)");
        p->fallthrough();
        p->add_option("-x", ev.x, "complex argument")->required();
        p->add_option("-b", ev.b, "complex parameter")->required();
        p->callback([&]() {
            action = [&]() {
                return emit_single("genfunc", {{"x", ev.x}, {"b", ev.b}}, g);
            };
        });
    }

    // ---- deriv ----
    auto* deriv = app.add_subcommand("deriv", "k-th derivatives of trig functions");
    deriv->fallthrough();
    struct {
        long k = 0;
        double a = 1.0, x = 0.0, shift = 0.0;
        std::string ac, bc;
    } dv;
    for (const char* fname : {"cot", "csc", "tan", "sec"}) {
        auto* p = deriv->add_subcommand(fname, std::string("d^k ") + fname + "(a x + shift) / dx^k");
        p->fallthrough();
        p->add_option("-k", dv.k, "derivative order")->required();
        p->add_option("-a", dv.a, "frequency")->required();
        p->add_option("-x", dv.x, "evaluation point")->required();
        p->add_option("--shift", dv.shift, "arc translation");
        std::string fn = fname;
        p->callback([&, fn]() {
            action = [&, fn]() {
                ParamList params{{"k", std::to_string(dv.k)},
                                 {"a", lerchcli::format_double(dv.a)},
                                 {"x", lerchcli::format_double(dv.x)},
                                 {"shift", lerchcli::format_double(dv.shift)}};
                return emit_single(fn, params, g);
            };
        });
    }
    {
        auto* p = deriv->add_subcommand("expratio",
                                        "d^k/dx^k [ x/(e^{ax+b}-1) ] at x = 0");
        p->fallthrough();
        p->add_option("-k", dv.k, "derivative order >= 1")->required();
        p->add_option("-a", dv.ac, "complex frequency")->required();
        p->add_option("-b", dv.bc, "complex offset")->required();
        p->callback([&]() {
            action = [&]() {
                ParamList params{{"k", std::to_string(dv.k)}, {"a", dv.ac}, {"b", dv.bc}};
                return emit_single("expratio", params, g);
            };
        });
    }

    // ---- check ----
    auto* check = app.add_subcommand("check", "Run property suites");
    check->fallthrough();
    std::string suite;
    check->add_option("suite", suite, "exact|identities|trig|hurwitz|all")->required();
    check->callback([&]() { action = [&]() { return run_check(suite, g); }; });

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "Evaluate over a Cartesian parameter grid");
    sweep->fallthrough();
    std::string sweep_fn;
    std::vector<std::string> sweep_specs;
    sweep->add_option("function", sweep_fn,
                      "lerch|polylog|hurwitz|genfunc|cot|csc|tan|sec|expratio")
        ->required();
    sweep->add_option("ranges", sweep_specs, "name=spec parameter ranges")->required();
    sweep->callback([&]() { action = [&]() { return run_sweep(sweep_fn, sweep_specs, g); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (!action) {
        std::printf("%s", app.help().c_str());
        return 1;
    }
    return action();
}
