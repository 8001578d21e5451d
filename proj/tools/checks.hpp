#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lerchcli {

struct CheckOptions {
    unsigned max_k = 0;      // 0 = per-property default
    std::uint64_t seed = 12345;
    double tol = 0.0;        // 0 = per-property default
    double quad_tol = 1e-10;
    double guard = 1e-12;
};

struct PropertyResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;   // worst observed discrepancy (0 for exact suites)
    double tol = 0.0;     // applied tolerance (0 = exact)
    std::string note;
};

std::vector<PropertyResult> check_exact(const CheckOptions& opt);
std::vector<PropertyResult> check_identities(const CheckOptions& opt);
std::vector<PropertyResult> check_trig(const CheckOptions& opt);
std::vector<PropertyResult> check_hurwitz(const CheckOptions& opt);

}  // namespace lerchcli
