#include "lerch/hurwitz.hpp"

namespace lerch::hurwitz {

const char* to_string(HurwitzMethod m) {
    switch (m) {
        case HurwitzMethod::series: return "series";
        case HurwitzMethod::integral_v1: return "integral_v1";
        case HurwitzMethod::elementary: return "elementary";
        case HurwitzMethod::half_integer: return "half_integer";
        case HurwitzMethod::integral_v2: return "integral_v2";
        case HurwitzMethod::analytic_final: return "analytic_final";
        case HurwitzMethod::genfunc: return "genfunc";
    }
    return "unknown";
}

bool parse_hurwitz_method(const std::string& s, HurwitzMethod& out) {
    for (auto m : {HurwitzMethod::series, HurwitzMethod::integral_v1,
                   HurwitzMethod::elementary, HurwitzMethod::half_integer,
                   HurwitzMethod::integral_v2, HurwitzMethod::analytic_final,
                   HurwitzMethod::genfunc}) {
        if (s == to_string(m)) {
            out = m;
            return true;
        }
    }
    return false;
}

}  // namespace lerch::hurwitz
