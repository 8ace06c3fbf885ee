#ifndef EGC_POLY_HPP
#define EGC_POLY_HPP

// Sparse multivariate polynomials, generic over the coefficient field.
// Terms are kept sorted strictly descending in the context's monomial
// order; no zero coefficients are ever stored.

#include "egc/bigint.hpp"
#include "egc/fp.hpp"
#include "egc/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace egc {

// ---- coefficient fields ----

struct QQ {
  using Elem = BigRat;
  static Elem zero() { return BigRat(0); }
  static Elem one() { return BigRat(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

struct GFp {
  using Elem = uint64_t;
  PrimeField f;
  explicit GFp(uint64_t p) : f(p) {}
  static Elem zero() { return 0; }
  static Elem one() { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return f.add(a, b); }
  Elem sub(Elem a, Elem b) const { return f.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return f.mul(a, b); }
  Elem div(Elem a, Elem b) const { return f.div(a, b); }
  Elem neg(Elem a) const { return f.neg(a); }
  bool eq(Elem a, Elem b) const { return a == b; }
};

// ---- context: ring + order + field ----

template <class F>
struct PolyCtx {
  Ring ring;
  MonomialOrder ord;
  F field;

  int cmp(const Expo& a, const Expo& b) const { return ord.cmp(a, b, ring.nvars()); }
};

using QCtx = PolyCtx<QQ>;
using FpCtx = PolyCtx<GFp>;

template <class F>
struct Poly {
  using Elem = typename F::Elem;
  using Term = std::pair<Expo, Elem>;
  std::vector<Term> terms; // strictly descending in the context order

  bool is_zero() const { return terms.empty(); }
  const Expo& lm() const { return terms.front().first; }
  const Elem& lc() const { return terms.front().second; }
  size_t size() const { return terms.size(); }
};

using QPoly = Poly<QQ>;
using FpPoly = Poly<GFp>;

// Sort, merge duplicates, drop zeros.
template <class F>
Poly<F> make_poly(const PolyCtx<F>& ctx, std::vector<typename Poly<F>::Term> terms)
{
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return ctx.cmp(a.first, b.first) > 0; });
  Poly<F> out;
  out.terms.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.terms.empty() && out.terms.back().first == t.first)
      out.terms.back().second = ctx.field.add(out.terms.back().second, t.second);
    else
      out.terms.push_back(std::move(t));
    if (!out.terms.empty() && ctx.field.is_zero(out.terms.back().second)) out.terms.pop_back();
  }
  return out;
}

template <class F>
Poly<F> poly_add(const PolyCtx<F>& ctx, const Poly<F>& a, const Poly<F>& b)
{
  Poly<F> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ctx.cmp(a.terms[i].first, b.terms[j].first);
    if (c > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.terms.push_back(b.terms[j++]);
    } else {
      auto s = ctx.field.add(a.terms[i].second, b.terms[j].second);
      if (!ctx.field.is_zero(s)) out.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.terms.push_back(b.terms[j]);
  return out;
}

// a -= c * x^m * b   (the reduction workhorse)
template <class F>
Poly<F> poly_sub_mul(const PolyCtx<F>& ctx, const Poly<F>& a, const typename F::Elem& c,
                     const Expo& m, const Poly<F>& b)
{
  Poly<F> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Expo bm = expo_mul(m, b.terms[j].first);
    int cc = ctx.cmp(a.terms[i].first, bm);
    if (cc > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cc < 0) {
      out.terms.emplace_back(bm, ctx.field.neg(ctx.field.mul(c, b.terms[j].second)));
      ++j;
    } else {
      auto s = ctx.field.sub(a.terms[i].second, ctx.field.mul(c, b.terms[j].second));
      if (!ctx.field.is_zero(s)) out.terms.emplace_back(a.terms[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.terms.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j)
    out.terms.emplace_back(expo_mul(m, b.terms[j].first),
                           ctx.field.neg(ctx.field.mul(c, b.terms[j].second)));
  return out;
}

template <class F>
Poly<F> poly_sub(const PolyCtx<F>& ctx, const Poly<F>& a, const Poly<F>& b)
{
  Expo one;
  return poly_sub_mul(ctx, a, F::one(), one, b);
}

template <class F>
Poly<F> poly_scale(const PolyCtx<F>& ctx, const Poly<F>& a, const typename F::Elem& c)
{
  Poly<F> out;
  if (ctx.field.is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) out.terms.emplace_back(t.first, ctx.field.mul(t.second, c));
  return out;
}

template <class F>
Poly<F> poly_mul_term(const PolyCtx<F>& ctx, const Poly<F>& a, const typename F::Elem& c,
                      const Expo& m)
{
  Poly<F> out;
  if (ctx.field.is_zero(c)) return out;
  out.terms.reserve(a.terms.size());
  for (const auto& t : a.terms)
    out.terms.emplace_back(expo_mul(m, t.first), ctx.field.mul(t.second, c));
  return out;
}

template <class F>
Poly<F> poly_mul(const PolyCtx<F>& ctx, const Poly<F>& a, const Poly<F>& b)
{
  std::vector<typename Poly<F>::Term> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms)
      acc.emplace_back(expo_mul(ta.first, tb.first), ctx.field.mul(ta.second, tb.second));
  return make_poly(ctx, std::move(acc));
}

template <class F>
Poly<F> poly_pow(const PolyCtx<F>& ctx, Poly<F> base, unsigned long e)
{
  Poly<F> r;
  r.terms.emplace_back(Expo{}, F::one());
  while (e) {
    if (e & 1) r = poly_mul(ctx, r, base);
    e >>= 1;
    if (e) base = poly_mul(ctx, base, base);
  }
  return r;
}

template <class F>
bool poly_eq(const PolyCtx<F>& ctx, const Poly<F>& a, const Poly<F>& b)
{
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (!(a.terms[i].first == b.terms[i].first) ||
        !ctx.field.eq(a.terms[i].second, b.terms[i].second))
      return false;
  return true;
}

// Exact monomial support. Rejects the zero polynomial: support is only
// defined for nonzero inputs here.
template <class F>
std::vector<Expo> mon(const Poly<F>& f)
{
  if (f.is_zero()) throw std::invalid_argument("mon: zero polynomial has no support");
  std::vector<Expo> out;
  out.reserve(f.terms.size());
  for (const auto& t : f.terms) out.push_back(t.first);
  return out;
}

template <class F>
bool is_homogeneous(const Poly<F>& f, uint32_t* deg_out = nullptr)
{
  if (f.is_zero()) return true;
  uint32_t d = f.terms.front().first.deg;
  for (const auto& t : f.terms)
    if (t.first.deg != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

// ---- rational-specific helpers ----

// Scale a nonzero rational polynomial so all coefficients are integers,
// their gcd is 1, and the leading coefficient is positive.
void make_primitive(QPoly& f);

// Leading coefficient 1.
void make_monic(const QCtx& ctx, QPoly& f);

QPoly to_qpoly_from_int_terms(const QCtx& ctx, std::vector<std::pair<Expo, BigInt>> terms);

FpPoly reduce_mod_p(const FpCtx& fctx, const QPoly& f);

BigRat poly_eval(const QPoly& f, const std::vector<BigRat>& point);

} // namespace egc

#endif
