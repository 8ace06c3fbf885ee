#ifndef EGC_LINALG_HPP
#define EGC_LINALG_HPP

#include "egc/densemat.hpp"
#include "egc/sparsemat.hpp"

#include <string>

namespace egc {

// Exact rank over the rationals (fraction-free elimination).
int rank_dense_exact(const DenseIntMat& m);

struct InvertibilityCertificate {
  bool invertible = false;
  // "modular_det": nonzero determinant mod `prime` (sound certificate of
  // rational invertibility). "exact_elimination": decided exactly; prime 0.
  std::string method;
  uint64_t prime = 0;
  int probes = 0; // modular attempts made
};

// Nonzero determinant mod one deterministic ~62-bit probe prime certifies
// invertibility; a singular residue escalates to more primes and finally
// to exact elimination, so "false" is always exact.
InvertibilityCertificate is_invertible_exact(const DenseIntMat& m);

// Exact rank over GF(p) for sparse prime-field storage.
int rank_mod_p(const SparseModMat& m);

} // namespace egc

#endif
