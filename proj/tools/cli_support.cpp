#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace lerchcli {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_header() {
    return "function,params,value_re,value_im,condition,method,error,oracle,discrepancy,elapsed_us";
}

std::string format_record(const OutputRecord& rec, OutputFormat fmt) {
    if (fmt == OutputFormat::jsonl) {
        nlohmann::ordered_json j;
        j["function"] = rec.function;
        nlohmann::ordered_json p;
        for (const auto& [k, v] : rec.params) p[k] = v;
        j["params"] = p;
        if (!rec.error.empty()) {
            j["error"] = rec.error;
        } else if (rec.has_value) {
            j["value_re"] = rec.value_re;
            j["value_im"] = rec.value_im;
            if (rec.dd) {
                j["value_re_lo"] = rec.value_re_lo;
                j["value_im_lo"] = rec.value_im_lo;
            }
            j["condition"] = rec.condition;
            j["method"] = rec.method;
            if (rec.has_oracle) {
                j["oracle"] = rec.oracle;
                j["discrepancy"] = rec.discrepancy;
            }
        }
        if (rec.elapsed_us >= 0) j["elapsed_us"] = rec.elapsed_us;
        return j.dump();
    }
    std::string params;
    for (const auto& [k, v] : rec.params) {
        if (!params.empty()) params += ';';
        params += k + "=" + v;
    }
    std::string line = rec.function + "," + params + ",";
    if (rec.error.empty() && rec.has_value) {
        line += format_double(rec.value_re) + "," + format_double(rec.value_im) + "," +
                format_double(rec.condition) + "," + rec.method + ",";
    } else {
        line += ",,,," + rec.error;
    }
    if (rec.error.empty() && rec.has_oracle)
        line += "," + format_double(rec.oracle) + "," + format_double(rec.discrepancy);
    else
        line += ",,";
    line += rec.elapsed_us >= 0 ? "," + std::to_string(rec.elapsed_us) : ",";
    return line;
}

double parse_real(const std::string& s) {
    const char* p = s.c_str();
    char* end = nullptr;
    double v = std::strtod(p, &end);
    if (end == p || *end != '\0')
        throw std::invalid_argument("malformed number: '" + s + "'");
    return v;
}

long parse_int(const std::string& s) {
    const char* p = s.c_str();
    char* end = nullptr;
    long v = std::strtol(p, &end, 10);
    if (end == p || *end != '\0')
        throw std::invalid_argument("malformed integer: '" + s + "'");
    return v;
}

lerch::Cd parse_complex(const std::string& s) {
    const char* p = s.c_str();
    char* end = nullptr;
    double re = std::strtod(p, &end);
    if (end == p) throw std::invalid_argument("malformed complex literal: '" + s + "'");
    if (*end == '\0') return {re, 0.0};
    if (*end != '+' && *end != '-')
        throw std::invalid_argument("malformed complex literal: '" + s + "'");
    const char* q = end;
    double im = std::strtod(q, &end);
    if (end == q || *end != 'i' || *(end + 1) != '\0')
        throw std::invalid_argument("malformed complex literal: '" + s + "'");
    return {re, im};
}

Axis parse_axis(const std::string& arg) {
    auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
        throw std::invalid_argument("sweep parameter must look like name=spec: '" + arg + "'");
    Axis axis;
    axis.name = arg.substr(0, eq);
    const std::string spec = arg.substr(eq + 1);

    if (spec.rfind("circle:", 0) == 0) {
        auto c1 = spec.find(':', 7);
        if (c1 == std::string::npos)
            throw std::invalid_argument("circle spec must be circle:RADIUS:N");
        double radius = parse_real(spec.substr(7, c1 - 7));
        long n = parse_int(spec.substr(c1 + 1));
        if (n < 1) throw std::invalid_argument("circle spec needs N >= 1");
        for (long j = 0; j < n; ++j) {
            double ang = 2.0 * 3.14159265358979323846 * static_cast<double>(j) /
                         static_cast<double>(n);
            double re = radius * std::cos(ang);
            double im = radius * std::sin(ang);
            std::string lit = format_double(re);
            lit += im < 0 ? "-" : "+";
            lit += format_double(std::fabs(im)) + "i";
            axis.values.push_back(lit);
        }
        return axis;
    }

    auto dots = spec.find("..");
    if (dots != std::string::npos && dots > 0) {
        const std::string lo_s = spec.substr(0, dots);
        std::string rest = spec.substr(dots + 2);
        auto colon = rest.find(':');
        std::string hi_s = colon == std::string::npos ? rest : rest.substr(0, colon);
        if (colon == std::string::npos) {
            long lo = parse_int(lo_s);
            long hi = parse_int(hi_s);
            if (hi < lo) throw std::invalid_argument("empty range: '" + spec + "'");
            for (long v = lo; v <= hi; ++v) axis.values.push_back(std::to_string(v));
        } else {
            // half-open [lo, hi): integer ranges include both ends, stepped
            // real ranges stop short of the upper endpoint
            double lo = parse_real(lo_s);
            double hi = parse_real(hi_s);
            double step = parse_real(rest.substr(colon + 1));
            if (step <= 0.0) throw std::invalid_argument("range step must be > 0");
            for (int i = 0;; ++i) {
                double v = lo + step * i;
                if (v >= hi - step * 1e-9) break;
                axis.values.push_back(format_double(v));
            }
        }
        return axis;
    }

    axis.values.push_back(spec);
    return axis;
}

}  // namespace lerchcli
