#ifndef EGC_FP_HPP
#define EGC_FP_HPP

// Prime-field scalars. The field object carries the (checked) modulus;
// elements are plain reduced residues, so bulk storage stays compact.

#include "egc/primes.hpp"

#include <cstdint>
#include <stdexcept>

namespace egc {

class PrimeField {
public:
  explicit PrimeField(uint64_t p) : p_(p)
  {
    if (p >= (1ull << 62)) throw std::invalid_argument("modulus too large");
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime");
  }

  uint64_t p() const { return p_; }

  uint64_t reduce_int(long long v) const
  {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<uint64_t>(r);
  }

  uint64_t add(uint64_t a, uint64_t b) const
  {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }

  uint64_t mul(uint64_t a, uint64_t b) const
  {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p_);
  }

  uint64_t pow(uint64_t a, uint64_t e) const
  {
    uint64_t r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  uint64_t inv(uint64_t a) const
  {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    return pow(a, p_ - 2);
  }

  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }

private:
  uint64_t p_;
};

// A single residue tagged with its field, for scalar-level results.
struct Fp {
  uint64_t value = 0;
  uint64_t p = 0;

  bool operator==(const Fp&) const = default;
};

} // namespace egc

#endif
