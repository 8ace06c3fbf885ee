#ifndef EGC_BINOMIAL_HPP
#define EGC_BINOMIAL_HPP

#include "egc/bigint.hpp"
#include "egc/fp.hpp"

#include <cstdint>

namespace egc {

// C(n, k); zero when k > n. Multiplicative formula, every division exact.
BigInt binom(uint64_t n, uint64_t k);

// C(n, k) mod p via the base-p digit product (Lucas). p must be prime.
Fp binom_mod_p(uint64_t n, uint64_t k, uint64_t p);

// The two closed forms of binomial coefficient this toolkit certifies mod 3:
// C(3a, b) and C(3a+2, b).
enum class Mod3Form { ThreeA, ThreeAPlusTwo };

enum class Mod3Prediction { PredictsZero, NoPrediction };

// Sufficient (not necessary) divisibility-by-3 test for the given form,
// from explicit digit/carry conditions. PredictsZero guarantees
// binom_mod_p(.,.,3) == 0; NoPrediction says nothing.
Mod3Prediction mod3_vanishing_criterion(Mod3Form form, uint64_t a, uint64_t b);

} // namespace egc

#endif
