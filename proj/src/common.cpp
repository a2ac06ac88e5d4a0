#include "expsumlab/common.hpp"

namespace esl {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int i = 40;
    while (v > 0) {
        buf[--i] = char('0' + int(v % 10));
        v /= 10;
    }
    return std::string(buf + i, buf + 40);
}

u64 rng_below(std::mt19937_64& rng, u64 bound) {
    if (bound == 0) throw std::invalid_argument("rng_below: bound must be positive");
    // rejection sampling on the top of the range keeps the draw unbiased
    const u64 limit = ~u64(0) - (~u64(0) % bound + 1) % bound;
    u64 x;
    do {
        x = rng();
    } while (x > limit);
    return x % bound;
}

i64 rng_range(std::mt19937_64& rng, i64 lo, i64 hi) {
    if (lo > hi) throw std::invalid_argument("rng_range: lo > hi");
    const u64 span = u64(hi) - u64(lo) + 1;
    if (span == 0) return i64(rng());  // full 64-bit range
    return lo + i64(rng_below(rng, span));
}

double rng_unit(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace esl
