#ifndef EGC_FAMILIES_HPP
#define EGC_FAMILIES_HPP

// The univariate restrictions (y_0 = y_1 = 1) of the power products whose
// coefficient rows assemble the certificate matrices. Each family member
// is a shifted row of a Pascal power: f = sum_j C(e,j) y2^(base+3j).

#include "egc/bigint.hpp"
#include "egc/poly.hpp"

#include <cstdint>
#include <vector>

namespace egc {

// L: rows of the (54k^2-27k+4) x (54k^2-27k+3) stack (window step 3,
//    base exponent 36k^2-18k+2).
// W: the shifted families behind the (54k^2-27k)^2 matrix (window base
//    36k^2-18k+4); full index ranges, before forced peeling.
// A/B: the two auxiliary full-row-rank families, parameterized by t.
enum class FContext { L, W, A, B };

struct FamilyTerm {
  int64_t base;  // lowest y2-exponent
  int64_t binexp; // row is C(binexp, j) at exponents base+3j
};

// Closed form of family member (i, u) in the given context.
FamilyTerm family_term(int k, FContext ctx, int i, int64_t u, int64_t t = -1);

// Inclusive upper index of u for family i in the given context.
int64_t family_umax(int k, FContext ctx, int i, int64_t t = -1);

// Number of families in the context (L/W: 4; A: 1; B: 2).
int family_count(FContext ctx);

// The family member as a univariate polynomial in y2, built by the
// binomial theorem (never by repeated multiplication).
QPoly build_f(const QCtx& y2ctx, int k, FContext ctx, int i, int64_t u, int64_t t = -1);

// One-variable ring the families live in.
QCtx y2_ring();

struct Window {
  int64_t start = 0; // y2-exponent of column 1
  int64_t step = 3;
  int64_t length = 0;
};

Window window_L(int k);
Window window_W(int k);

// Dense coefficient row of f over the window; errors when the support
// leaves the window or its residue class.
std::vector<BigInt> coeff_row(const QPoly& f, const Window& w);

} // namespace egc

#endif
