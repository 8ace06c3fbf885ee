#include "egc/families.hpp"

#include "egc/binomial.hpp"

#include <stdexcept>

namespace egc {

namespace {

int64_t sq(int64_t k) { return k * k; }

void check_range(int k, FContext ctx, int i, int64_t u, int64_t t)
{
  if (u < 0 || u > family_umax(k, ctx, i, t))
    throw std::out_of_range("family index out of range");
}

} // namespace

int family_count(FContext ctx)
{
  switch (ctx) {
    case FContext::L:
    case FContext::W: return 4;
    case FContext::A: return 1;
    case FContext::B: return 2;
  }
  return 0;
}

int64_t family_umax(int k, FContext ctx, int i, int64_t t)
{
  const int64_t K = k;
  switch (ctx) {
    case FContext::L:
      switch (i) {
        case 1: return 6 * sq(K) - K - 1;
        case 2: return 18 * sq(K) - 9 * K;
        case 3: return 18 * sq(K) - 10 * K + 1;
        case 4: return 12 * sq(K) - 7 * K;
      }
      break;
    case FContext::W:
      switch (i) {
        case 1: return 18 * sq(K) - 7 * K - 1;
        case 2: return 18 * sq(K) - 9 * K - 1;
        case 3: return 18 * sq(K) - 9 * K;
        case 4: return 18 * sq(K) - 11 * K;
      }
      break;
    case FContext::A:
      if (t < 0) throw std::invalid_argument("context A needs parameter t");
      if (i == 1) return t / 3;
      break;
    case FContext::B:
      if (t < 0) throw std::invalid_argument("context B needs parameter t");
      if (i == 1) return t / 3;
      if (i == 2) {
        int64_t top = t - (6 * K - 2);
        return top < 0 ? -1 : top / 3;
      }
      break;
  }
  throw std::out_of_range("no such family in this context");
}

FamilyTerm family_term(int k, FContext ctx, int i, int64_t u, int64_t t)
{
  check_range(k, ctx, i, u, t);
  const int64_t K = k;
  switch (ctx) {
    case FContext::L:
      switch (i) {
        case 1: return {54 * sq(K) - 21 * K - 1 - 3 * u, 3 * u};
        case 2: return {90 * sq(K) - 45 * K + 2 - 3 * u, 3 * u + 2};
        case 3: return {90 * sq(K) - 39 * K + 2 - 3 * u, 3 * u};
        case 4: return {126 * sq(K) - 57 * K + 5 - 3 * u, 3 * u};
      }
      break;
    case FContext::W:
      switch (i) {
        case 1: return {54 * sq(K) - 21 * K - 2 - 3 * u, 3 * u};
        case 2: return {90 * sq(K) - 45 * K + 1 - 3 * u, 3 * u + 2};
        case 3: return {90 * sq(K) - 39 * K + 1 - 3 * u, 3 * u};
        case 4: return {126 * sq(K) - 57 * K + 4 - 3 * u, 3 * u};
      }
      break;
    case FContext::A:
      return {t - 3 * u, 3 * u};
    case FContext::B: {
      if (i == 1) return {t - 3 * u, 3 * u};
      int64_t c = 12 * sq(K) - 6 * K + 1;
      return {t + 3 * c - 3 * u, 3 * u};
    }
  }
  throw std::out_of_range("no such family in this context");
}

QCtx y2_ring()
{
  return QCtx{Ring::with_vars({"y2"}), MonomialOrder::degrevlex(), QQ{}};
}

QPoly build_f(const QCtx& y2ctx, int k, FContext ctx, int i, int64_t u, int64_t t)
{
  FamilyTerm ft = family_term(k, ctx, i, u, t);
  if (ft.base + 3 * ft.binexp > 65535)
    throw std::domain_error("build_f: exponent exceeds representable range; "
                            "use closed-form matrix construction for this k");
  std::vector<std::pair<Expo, BigInt>> terms;
  terms.reserve(ft.binexp + 1);
  for (int64_t j = 0; j <= ft.binexp; ++j) {
    Expo ex;
    ex.set(0, static_cast<uint16_t>(ft.base + 3 * j));
    terms.emplace_back(ex, binom(ft.binexp, j));
  }
  return to_qpoly_from_int_terms(y2ctx, std::move(terms));
}

Window window_L(int k)
{
  const int64_t K = k;
  return {36 * sq(K) - 18 * K + 2, 3, 54 * sq(K) - 27 * K + 3};
}

Window window_W(int k)
{
  const int64_t K = k;
  return {36 * sq(K) - 18 * K + 4, 3, 54 * sq(K) - 27 * K};
}

std::vector<BigInt> coeff_row(const QPoly& f, const Window& w)
{
  std::vector<BigInt> row(w.length, BigInt(0));
  for (const auto& [ex, c] : f.terms) {
    int64_t e = ex[0];
    if ((e - w.start) % w.step != 0)
      throw std::domain_error("coeff_row: exponent outside the window residue class");
    int64_t col = (e - w.start) / w.step;
    if (col < 0 || col >= w.length)
      throw std::domain_error("coeff_row: exponent outside the window range");
    row[col] = BigInt(c.get_num());
  }
  return row;
}

} // namespace egc
