#pragma once

// Shared scalar types, error categories, resource limits and seeded-draw
// helpers used across the library.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace esl {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// An input exceeds a configured resource cap (dense table length, scan
// range, declared entry width). The CLI maps this to exit code 3.
class UnsupportedSizeError : public std::runtime_error {
public:
    explicit UnsupportedSizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// A stated hypothesis gate rejected the input (e.g. M >= p^{2/3}).
class HypothesisViolated : public std::runtime_error {
public:
    explicit HypothesisViolated(const std::string& msg) : std::runtime_error(msg) {}
};

struct Limits {
    u64 max_prime = u64(1) << 40;          // largest supported modulus
    u64 max_table_modulus = u64(1) << 26;  // dense length-p count tables
    u64 max_scan_modulus = 1000000;        // full residue scans over a
    u64 max_mem_bytes = u64(8) << 30;      // budget for dense allocations
};

std::string u128_to_string(u128 v);

inline double u128_to_double(u128 v) {
    return double(u64(v >> 64)) * 18446744073709551616.0 + double(u64(v));
}

// Bounded draws on top of std::mt19937_64. The engine's output sequence is
// pinned by the standard; std::uniform_int_distribution is not, so records
// seeded through these helpers replay identically everywhere.
u64 rng_below(std::mt19937_64& rng, u64 bound);       // uniform in [0, bound)
i64 rng_range(std::mt19937_64& rng, i64 lo, i64 hi);  // uniform in [lo, hi]
double rng_unit(std::mt19937_64& rng);                // [0, 1) with 53 bits

}  // namespace esl
