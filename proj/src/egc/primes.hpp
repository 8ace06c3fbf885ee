#ifndef EGC_PRIMES_HPP
#define EGC_PRIMES_HPP

#include <cstdint>

namespace egc {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Smallest prime >= n (n >= 2).
uint64_t next_prime_u64(uint64_t n);

// Deterministic sequence of ~62-bit probe primes used for modular
// invertibility certificates. Index 0, 1, 2, ... always yields the same
// prime, so reports are reproducible.
uint64_t probe_prime(unsigned index);

} // namespace egc

#endif
