#include "egc/binomial.hpp"

#include <stdexcept>

namespace egc {

BigInt binom(uint64_t n, uint64_t k)
{
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    // r was C(n-k+i-1, i-1) * (n-k+i); division by i is exact here.
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

Fp binom_mod_p(uint64_t n, uint64_t k, uint64_t p)
{
  PrimeField F(p);
  if (k > n) return {0, p};
  // Lucas: multiply digit-wise binomials base p. Digits are < p, so each
  // factor is a small binomial computed by the running-product formula.
  uint64_t acc = 1;
  while (n > 0 || k > 0) {
    uint64_t nd = n % p, kd = k % p;
    n /= p;
    k /= p;
    if (kd > nd) return {0, p};
    uint64_t num = 1, den = 1;
    if (kd > nd - kd) kd = nd - kd;
    for (uint64_t i = 1; i <= kd; ++i) {
      num = F.mul(num, (nd - kd + i) % p);
      den = F.mul(den, i % p);
    }
    acc = F.mul(acc, F.div(num, den));
    if (acc == 0) return {0, p};
  }
  return {acc, p};
}

Mod3Prediction mod3_vanishing_criterion(Mod3Form form, uint64_t a, uint64_t b)
{
  if (form == Mod3Form::ThreeA) {
    // C(3a, b) == 0 mod 3 whenever:
    if (b % 3 != 0) return Mod3Prediction::PredictsZero;
    if (a % 3 == 0 && b % 9 != 0) return Mod3Prediction::PredictsZero;
    if (a % 9 == 0 && b % 27 != 0) return Mod3Prediction::PredictsZero;
    return Mod3Prediction::NoPrediction;
  }
  // C(3a+2, b) == 0 mod 3 whenever:
  uint64_t n = 3 * a + 2;
  if (n >= 9 && b < 9 && n - b < 9) return Mod3Prediction::PredictsZero;
  if (n >= 18 && b < 9 && n - b < 18) return Mod3Prediction::PredictsZero;
  if (n >= 27 && b < 27 && n - b < 27) return Mod3Prediction::PredictsZero;
  return Mod3Prediction::NoPrediction;
}

} // namespace egc
