#pragma once

// Radix-2 number-theoretic transforms over word-sized primes c*2^28 + 1,
// the exact-convolution backend behind the counting module. The prime pool
// is generated deterministically, so prime(i) is identical on every run.

#include "expsumlab/bigint.hpp"
#include "expsumlab/common.hpp"

#include <vector>

namespace esl::ntt {

struct Prime {
    u64 q;     // modulus, about 2^61
    u64 root;  // primitive root of q
};

// i-th pool prime (lazily generated, thread-safe, stable across runs).
// Every pool prime supports transform lengths up to 2^28.
const Prime& prime(std::size_t index);

// how many pool primes are needed so their product exceeds `bound`
std::size_t primes_needed(const BigUint& bound);

// in-place transform; a.size() must be a power of two <= 2^28
void transform(std::vector<u64>& a, const Prime& P, bool invert);

// cyclic convolution mod P.q; a and b are same-length power-of-two vectors
std::vector<u64> convolve_cyclic(std::vector<u64> a, std::vector<u64> b, const Prime& P);

}  // namespace esl::ntt
