#include "egc/linalg.hpp"

#include "egc/primes.hpp"

#include <stdexcept>

namespace egc {

int rank_dense_exact(const DenseIntMat& m)
{
  return m.rank_exact();
}

InvertibilityCertificate is_invertible_exact(const DenseIntMat& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("is_invertible_exact: matrix not square");
  InvertibilityCertificate cert;
  for (unsigned attempt = 0; attempt < 4; ++attempt) {
    uint64_t p = probe_prime(attempt);
    ++cert.probes;
    DenseModMat mp(m, p);
    if (mp.nonsingular()) {
      cert.invertible = true;
      cert.method = "modular_det";
      cert.prime = p;
      return cert;
    }
  }
  cert.invertible = m.rank_exact() == m.rows();
  cert.method = "exact_elimination";
  cert.prime = 0;
  return cert;
}

int rank_mod_p(const SparseModMat& m)
{
  return m.rank();
}

} // namespace egc
