#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lerch/complex.hpp"

namespace lerchcli {

// One evaluation record. params keeps command-line order so output is
// deterministic; error is set instead of the value fields when the point
// failed. elapsed_us is emitted only when timing was requested, so default
// output is byte-identical across runs.
struct OutputRecord {
    std::string function;
    std::vector<std::pair<std::string, std::string>> params;
    bool has_value = false;
    double value_re = 0.0;
    double value_im = 0.0;
    double value_re_lo = 0.0;  // dd low components, emitted at --precision dd
    double value_im_lo = 0.0;
    bool dd = false;
    double condition = 1.0;
    std::string method;
    std::string error;
    bool has_oracle = false;
    double oracle = 0.0;
    double discrepancy = 0.0;
    long long elapsed_us = -1;
};

enum class OutputFormat { jsonl, csv };

std::string format_record(const OutputRecord& rec, OutputFormat fmt);
std::string csv_header();

// Shortest round-trip decimal formatting.
std::string format_double(double v);

// Complex literal: FLOAT | FLOAT SIGN FLOAT 'i'. Throws std::invalid_argument.
lerch::Cd parse_complex(const std::string& s);

double parse_real(const std::string& s);
long parse_int(const std::string& s);

// Deterministic 64-bit generator for seeded test grids.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
};

// Sweep axis: name plus the expanded value list (as literal strings).
struct Axis {
    std::string name;
    std::vector<std::string> values;
};

// Parses NAME=SPEC where SPEC is one of
//   INT..INT            integer range, step 1
//   A..B:STEP           real range, inclusive of A, stepping by STEP
//   circle:RADIUS:N     N complex points on the circle of given radius
//   any other literal   single value
Axis parse_axis(const std::string& arg);

}  // namespace lerchcli
