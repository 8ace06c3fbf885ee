#ifndef EGC_GROEBNER_HPP
#define EGC_GROEBNER_HPP

// Buchberger engine: normal-strategy pair selection (lowest lcm degree,
// ties by lcm then indices), Gebauer-Moeller pair pruning, fraction-free
// reduction over the rationals with content stripping. Deterministic for
// fixed input and order.

#include "egc/budget.hpp"
#include "egc/poly.hpp"

#include <optional>
#include <set>
#include <vector>

namespace egc {

template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> elems; // reduced: monic, sorted descending by lead
  MonomialOrder ord;
};

using QGroebner = GroebnerBasis<QQ>;

// Exact normal form: no monomial of the result is divisible by any leading
// monomial of the basis, and f - result lies in the ideal of the basis.
template <class F>
Poly<F> normal_form(const PolyCtx<F>& ctx, Poly<F> f, const std::vector<Poly<F>>& basis);

// Reduced Groebner basis of the input generators.
template <class F>
GroebnerBasis<F> buchberger(const PolyCtx<F>& ctx, const std::vector<Poly<F>>& gens,
                            BudgetClock& clock);

// Mutual normal-form reduction of two reduced bases.
template <class F>
bool ideal_equal(const PolyCtx<F>& ctx, const GroebnerBasis<F>& a, const GroebnerBasis<F>& b);

// ---- implementation ----

namespace gb_detail {

template <class F>
int find_reducer(const PolyCtx<F>& ctx, const Expo& m, const std::vector<Poly<F>>& basis)
{
  (void)ctx;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero() && expo_divides(basis[i].lm(), m)) return static_cast<int>(i);
  return -1;
}

// Reduction up to a nonzero scalar; result is primitive (QQ) or monic (GFp).
// Over QQ the update is h <- a*h - b*m*g with integer multipliers, and the
// already-emitted remainder tail is rescaled alongside.
template <class F>
Poly<F> reduce_primitive(const PolyCtx<F>& ctx, Poly<F> h, const std::vector<Poly<F>>& basis)
{
  std::vector<typename Poly<F>::Term> rem;
  int steps = 0;
  while (!h.is_zero()) {
    int gi = find_reducer(ctx, h.lm(), basis);
    if (gi < 0) {
      rem.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
      continue;
    }
    const Poly<F>& g = basis[gi];
    Expo m = expo_div(h.lm(), g.lm());
    if constexpr (std::is_same_v<F, QQ>) {
      BigInt h0(h.lc().get_num()), g0(g.lc().get_num());
      BigInt d = gcd(h0, g0);
      BigRat a(divexact(g0, d)), b(divexact(h0, d));
      if (sgn(a) < 0) { a = -a; b = -b; }
      if (a != 1) {
        for (auto& t : rem) t.second *= a;
        for (auto& t : h.terms) t.second *= a;
      }
      h = poly_sub_mul(ctx, h, b, m, g);
    } else {
      h = poly_sub_mul(ctx, h, ctx.field.div(h.lc(), g.lc()), m, g);
    }
    if constexpr (std::is_same_v<F, QQ>) {
      if ((++steps & 0x1f) == 0 && !h.is_zero()) {
        // periodic joint content strip to keep integers small
        BigInt gc = 0;
        for (const auto& t : rem) gc = gcd(gc, BigInt(t.second.get_num()));
        for (const auto& t : h.terms) {
          gc = gcd(gc, BigInt(t.second.get_num()));
          if (gc == 1) break;
        }
        if (gc > 1) {
          BigRat inv = rat(1, gc);
          for (auto& t : rem) t.second *= inv;
          for (auto& t : h.terms) t.second *= inv;
        }
      }
    }
  }
  Poly<F> out;
  out.terms = std::move(rem);
  if (out.is_zero()) return out;
  if constexpr (std::is_same_v<F, QQ>) {
    make_primitive(out);
  } else {
    auto inv = ctx.field.inv(out.lc());
    for (auto& t : out.terms) t.second = ctx.field.mul(t.second, inv);
  }
  return out;
}

struct PairKey {
  uint32_t deg;
  Expo lcm;
  int i, j;
};

template <class F>
struct PairCmp {
  const PolyCtx<F>* ctx;
  bool operator()(const PairKey& a, const PairKey& b) const
  {
    if (a.deg != b.deg) return a.deg < b.deg;
    // lexicographic tie-break on the lcm exponent vector
    for (int v = 0; v < kMaxVars; ++v)
      if (a.lcm.e[v] != b.lcm.e[v]) return a.lcm.e[v] > b.lcm.e[v];
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Gebauer-Moeller update: add basis element t, prune new and old pairs.
template <class F>
void gm_update(const PolyCtx<F>& ctx, const std::vector<Poly<F>>& g,
               std::set<PairKey, PairCmp<F>>& pairs, int t)
{
  const Expo& lt = g[t].lm();
  struct Cand {
    Expo lcm;
    int i;
    bool alive = true;
  };
  std::vector<Cand> cand;
  cand.reserve(t);
  for (int i = 0; i < t; ++i) cand.push_back({expo_lcm(g[i].lm(), lt), i, true});

  // drop (i,t) when another new pair's lcm properly divides its lcm
  for (auto& a : cand) {
    for (const auto& b : cand) {
      if (!b.alive || a.i == b.i) continue;
      if (!(b.lcm == a.lcm) && expo_divides(b.lcm, a.lcm)) {
        a.alive = false;
        break;
      }
    }
  }
  // among equal lcms keep the smallest index
  for (auto& a : cand) {
    if (!a.alive) continue;
    for (auto& b : cand) {
      if (!b.alive || b.i <= a.i) continue;
      if (b.lcm == a.lcm) b.alive = false;
    }
  }
  // Buchberger's coprimality criterion
  for (auto& a : cand) {
    if (a.alive && expo_coprime(g[a.i].lm(), lt)) a.alive = false;
  }

  // prune old pairs whose lcm the new lead divides strictly
  for (auto it = pairs.begin(); it != pairs.end();) {
    const auto& pk = *it;
    if (expo_divides(lt, pk.lcm) &&
        !(expo_lcm(g[pk.i].lm(), lt) == pk.lcm) &&
        !(expo_lcm(g[pk.j].lm(), lt) == pk.lcm)) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }

  for (const auto& a : cand) {
    if (a.alive) pairs.insert(PairKey{a.lcm.deg, a.lcm, a.i, t});
  }
}

template <class F>
Poly<F> spoly(const PolyCtx<F>& ctx, const Poly<F>& f, const Poly<F>& g)
{
  Expo l = expo_lcm(f.lm(), g.lm());
  Expo mf = expo_div(l, f.lm());
  Expo mg = expo_div(l, g.lm());
  if constexpr (std::is_same_v<F, QQ>) {
    BigInt f0(f.lc().get_num()), g0(g.lc().get_num());
    BigInt d = gcd(f0, g0);
    Poly<F> a = poly_mul_term(ctx, f, BigRat(divexact(g0, d)), mf);
    Poly<F> b = poly_mul_term(ctx, g, BigRat(divexact(f0, d)), mg);
    return poly_sub(ctx, a, b);
  } else {
    Poly<F> a = poly_mul_term(ctx, f, ctx.field.div(F::one(), f.lc()), mf);
    Poly<F> b = poly_mul_term(ctx, g, ctx.field.div(F::one(), g.lc()), mg);
    return poly_sub(ctx, a, b);
  }
}

} // namespace gb_detail

template <class F>
Poly<F> normal_form(const PolyCtx<F>& ctx, Poly<F> f, const std::vector<Poly<F>>& basis)
{
  std::vector<typename Poly<F>::Term> rem;
  while (!f.is_zero()) {
    int gi = gb_detail::find_reducer(ctx, f.lm(), basis);
    if (gi < 0) {
      rem.push_back(f.terms.front());
      f.terms.erase(f.terms.begin());
      continue;
    }
    const Poly<F>& g = basis[gi];
    f = poly_sub_mul(ctx, f, ctx.field.div(f.lc(), g.lc()), expo_div(f.lm(), g.lm()), g);
  }
  Poly<F> out;
  out.terms = std::move(rem);
  return out;
}

// Minimalize + tail-reduce + normalize leading coefficients.
template <class F>
std::vector<Poly<F>> interreduce(const PolyCtx<F>& ctx, std::vector<Poly<F>> basis)
{
  // drop zero and lead-redundant elements (deterministically: scan with
  // all others)
  std::vector<Poly<F>> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (expo_divides(basis[j].lm(), basis[i].lm())) {
        if (!(basis[j].lm() == basis[i].lm()) || j < i) redundant = true;
      }
    }
    if (!redundant) kept.push_back(basis[i]);
  }
  // tail-reduce each against the others until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < kept.size(); ++i) {
      std::vector<Poly<F>> others;
      others.reserve(kept.size() - 1);
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j]);
      Poly<F> red = gb_detail::reduce_primitive(ctx, kept[i], others);
      if (!poly_eq(ctx, red, kept[i])) changed = true;
      kept[i] = std::move(red);
    }
    kept.erase(std::remove_if(kept.begin(), kept.end(),
                              [](const Poly<F>& p) { return p.is_zero(); }),
               kept.end());
  }
  for (auto& g : kept) {
    if constexpr (std::is_same_v<F, QQ>) {
      make_monic(ctx, g);
    } else {
      auto inv = ctx.field.inv(g.lc());
      for (auto& t : g.terms) t.second = ctx.field.mul(t.second, inv);
    }
  }
  std::sort(kept.begin(), kept.end(),
            [&](const Poly<F>& a, const Poly<F>& b) { return ctx.cmp(a.lm(), b.lm()) > 0; });
  return kept;
}

template <class F>
GroebnerBasis<F> buchberger(const PolyCtx<F>& ctx, const std::vector<Poly<F>>& gens,
                            BudgetClock& clock)
{
  std::vector<Poly<F>> g;
  gb_detail::PairCmp<F> cmp{&ctx};
  std::set<gb_detail::PairKey, gb_detail::PairCmp<F>> pairs(cmp);

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    Poly<F> h = gb_detail::reduce_primitive(ctx, f, g);
    if (h.is_zero()) continue;
    g.push_back(std::move(h));
    gb_detail::gm_update(ctx, g, pairs, static_cast<int>(g.size()) - 1);
  }

  while (!pairs.empty()) {
    clock.count_pair();
    auto it = pairs.begin();
    auto [deg, l, i, j] = *it;
    pairs.erase(it);
    Poly<F> s = gb_detail::spoly(ctx, g[i], g[j]);
    Poly<F> h = gb_detail::reduce_primitive(ctx, std::move(s), g);
    if (h.is_zero()) continue;
    g.push_back(std::move(h));
    gb_detail::gm_update(ctx, g, pairs, static_cast<int>(g.size()) - 1);
  }

  GroebnerBasis<F> out;
  out.ord = ctx.ord;
  out.elems = interreduce(ctx, std::move(g));
  return out;
}

template <class F>
bool ideal_equal(const PolyCtx<F>& ctx, const GroebnerBasis<F>& a, const GroebnerBasis<F>& b)
{
  for (const auto& f : a.elems)
    if (!normal_form(ctx, f, b.elems).is_zero()) return false;
  for (const auto& f : b.elems)
    if (!normal_form(ctx, f, a.elems).is_zero()) return false;
  return true;
}

} // namespace egc

#endif
