#include "egc/kernel.hpp"

namespace egc {

namespace {

Ring graph_ring(const SectionMap& map)
{
  std::vector<std::string> names = map.source.names;
  names.insert(names.end(), map.target.names.begin(), map.target.names.end());
  return Ring::with_vars(names);
}

// shift a source-ring exponent into the graph ring (identity embedding)
Expo embed_source(const Expo& e) { return e; }

Expo embed_target(const Expo& e, int ny)
{
  Expo out;
  for (int i = 0; i + ny < kMaxVars; ++i) out.set(i + ny, e[i]);
  return out;
}

template <class F>
std::vector<Poly<F>> graph_generators(const PolyCtx<F>& gctx, const SectionMap& map,
                                      const std::vector<Poly<F>>& sections)
{
  const int ny = map.source_vars();
  std::vector<Poly<F>> gens;
  for (int i = 0; i < map.target_vars(); ++i) {
    std::vector<typename Poly<F>::Term> terms;
    for (const auto& [e, c] : sections[i].terms) terms.emplace_back(embed_source(e), c);
    Expo xi;
    xi.set(ny + i, 1);
    terms.emplace_back(xi, gctx.field.neg(F::one()));
    gens.push_back(make_poly(gctx, std::move(terms)));
  }
  return gens;
}

template <class F>
std::vector<Poly<F>> eliminate_source(const PolyCtx<F>& gctx, const GroebnerBasis<F>& gb, int ny,
                                      int nx)
{
  std::vector<Poly<F>> out;
  for (const auto& g : gb.elems) {
    bool pure_x = true;
    for (const auto& [e, c] : g.terms) {
      for (int v = 0; v < ny && pure_x; ++v)
        if (e[v] != 0) pure_x = false;
      if (!pure_x) break;
    }
    if (!pure_x) continue;
    Poly<F> q;
    for (const auto& [e, c] : g.terms) {
      Expo xe;
      for (int v = 0; v < nx; ++v) xe.set(v, e[ny + v]);
      q.terms.emplace_back(xe, c);
    }
    out.push_back(std::move(q));
  }
  return out;
}

} // namespace

IdealBasis kernel_of_map(const SectionMap& map, BudgetClock& clock, KernelOptions opts)
{
  const int ny = map.source_vars();
  const int nx = map.target_vars();
  Ring gring = graph_ring(map);
  MonomialOrder ord = opts.pure_lex ? MonomialOrder::lex() : MonomialOrder::block(ny);
  QCtx gctx{gring, ord, QQ{}};

  auto gens = graph_generators(gctx, map, map.sections);
  GroebnerBasis<QQ> gb = buchberger(gctx, gens, clock);

  IdealBasis out;
  out.ring = map.target;
  QCtx xctx{map.target, MonomialOrder::degrevlex(), QQ{}};
  std::vector<QPoly> xs;
  for (auto& f : eliminate_source(gctx, gb, ny, nx)) {
    xs.push_back(make_poly(xctx, std::move(f.terms)));
  }
  GroebnerBasis<QQ> xgb = buchberger(xctx, xs, clock);
  out.gens = std::move(xgb.elems);

  for (const auto& g : out.gens) {
    if (!substitute(g, map).is_zero())
      throw std::logic_error("kernel_of_map: generator does not substitute to zero");
  }
  return out;
}

std::vector<FpPoly> kernel_of_map_mod_p(const SectionMap& map, uint64_t p, BudgetClock& clock)
{
  const int ny = map.source_vars();
  const int nx = map.target_vars();
  Ring gring = graph_ring(map);
  FpCtx gctx{gring, MonomialOrder::block(ny), GFp(p)};

  std::vector<FpPoly> sections;
  FpCtx sctx{map.source, MonomialOrder::degrevlex(), GFp(p)};
  for (const auto& s : map.sections) sections.push_back(reduce_mod_p(sctx, s));

  auto gens = graph_generators(gctx, map, sections);
  GroebnerBasis<GFp> gb = buchberger(gctx, gens, clock);

  FpCtx xctx{map.target, MonomialOrder::degrevlex(), GFp(p)};
  std::vector<FpPoly> out;
  for (auto& f : eliminate_source(gctx, gb, ny, nx)) out.push_back(make_poly(xctx, std::move(f.terms)));
  auto xgb = buchberger(xctx, out, clock);
  return std::move(xgb.elems);
}

} // namespace egc
