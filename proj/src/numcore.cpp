#include "lerch/numcore.hpp"

namespace lerch {

const char* to_string(Method m) {
    switch (m) {
        case Method::compensated_sum: return "compensated_sum";
        case Method::polylog_stirling: return "polylog_stirling";
        case Method::polylog_closed: return "polylog_closed";
        case Method::polylog_transf: return "polylog_transf";
        case Method::polylog_sum: return "polylog_sum";
        case Method::lerch_closed: return "lerch_closed";
        case Method::lerch_cot: return "lerch_cot";
        case Method::lerch_series: return "lerch_series";
        case Method::lerch_sum: return "lerch_sum";
        case Method::cot_adamchik: return "cot_adamchik";
        case Method::cot_polylog: return "cot_polylog";
        case Method::csc_lerch: return "csc_lerch";
        case Method::tan_polylog: return "tan_polylog";
        case Method::sec_lerch: return "sec_lerch";
        case Method::exp_ratio: return "exp_ratio";
        case Method::quadrature_open: return "quadrature_open";
        case Method::hurwitz_series: return "hurwitz_series";
        case Method::hurwitz_integral_v1: return "hurwitz_integral_v1";
        case Method::hurwitz_elementary: return "hurwitz_elementary";
        case Method::hurwitz_half_integer: return "hurwitz_half_integer";
        case Method::hurwitz_integral_v2: return "hurwitz_integral_v2";
        case Method::hurwitz_analytic_final: return "hurwitz_analytic_final";
        case Method::genfunc: return "genfunc";
    }
    return "unknown";
}

}  // namespace lerch
