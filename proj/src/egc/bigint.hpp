#ifndef EGC_BIGINT_HPP
#define EGC_BIGINT_HPP

// Exact scalar arithmetic. BigInt/BigRat are GMP-backed: mpq_class keeps
// rationals canonical (positive denominator, coprime num/den) after every
// operation, which is exactly the invariant we need.

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace egc {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt gcd(const BigInt& a, const BigInt& b)
{
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long e)
{
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool divisible(const BigInt& a, const BigInt& d)
{
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

// Exact quotient; caller guarantees divisibility.
inline BigInt divexact(const BigInt& a, const BigInt& d)
{
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline uint64_t mod_ui(const BigInt& a, uint64_t m)
{
  BigInt r;
  mpz_mod_ui(r.get_mpz_t(), a.get_mpz_t(), m);
  return r.get_ui();
}

inline BigRat rat(const BigInt& num, const BigInt& den)
{
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const BigInt& a) { return a.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

} // namespace egc

#endif
