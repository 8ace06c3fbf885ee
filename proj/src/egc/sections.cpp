#include "egc/sections.hpp"

namespace egc {

SectionMap make_section_map(Ring source, Ring target, std::vector<QPoly> sections)
{
  if (sections.size() != static_cast<size_t>(target.nvars()))
    throw std::invalid_argument("section count must match target variable count");
  uint32_t deg = 0;
  bool have_deg = false;
  bool any_nonzero = false;
  for (const auto& s : sections) {
    if (s.is_zero()) continue;
    any_nonzero = true;
    uint32_t d = 0;
    if (!is_homogeneous(s, &d)) throw std::invalid_argument("sections must be homogeneous");
    if (have_deg && d != deg)
      throw std::invalid_argument("sections must share a common degree");
    deg = d;
    have_deg = true;
  }
  if (!any_nonzero) throw std::invalid_argument("at least one section must be nonzero");
  SectionMap m;
  m.source = std::move(source);
  m.target = std::move(target);
  m.degree = deg;
  m.sections = std::move(sections);
  return m;
}

SectionMap make_section_map(const ParsedMap& parsed)
{
  return make_section_map(parsed.source, Ring::with_vars(parsed.target_names), parsed.sections);
}

QPoly substitute(const QPoly& f, const SectionMap& map)
{
  QCtx ctx{map.source, MonomialOrder::degrevlex(), QQ{}};
  // cache section powers, most monomial batches reuse them heavily
  std::vector<std::vector<QPoly>> cache(map.sections.size());
  auto power = [&](int i, uint16_t e) -> const QPoly& {
    auto& col = cache[i];
    if (col.empty()) {
      col.resize(1);
      col[0].terms.emplace_back(Expo{}, QQ::one());
    }
    while (col.size() <= e) {
      col.push_back(poly_mul(ctx, col.back(), map.sections[i]));
    }
    return col[e];
  };

  QPoly acc;
  for (const auto& [ev, c] : f.terms) {
    for (int i = map.target_vars(); i < kMaxVars; ++i)
      if (ev.e[i] != 0) throw std::invalid_argument("substitute: ring mismatch");
    QPoly term;
    term.terms.emplace_back(Expo{}, c);
    for (int i = 0; i < map.target_vars(); ++i)
      if (ev[i] != 0) term = poly_mul(ctx, term, power(i, ev[i]));
    acc = poly_add(ctx, acc, term);
  }
  return acc;
}

SubstituteModP::SubstituteModP(const SectionMap& map, uint64_t p)
    : map_(map), fctx_{map.source, MonomialOrder::degrevlex(), GFp(p)},
      pow_cache_(map.sections.size())
{
}

const FpPoly& SubstituteModP::power(int section, uint16_t e)
{
  auto& col = pow_cache_[section];
  if (col.empty()) {
    col.resize(1);
    col[0].terms.emplace_back(Expo{}, GFp::one());
  }
  while (col.size() <= e) {
    if (col.size() == 1) {
      col.push_back(reduce_mod_p(fctx_, map_.sections[section]));
    } else {
      col.push_back(poly_mul(fctx_, col.back(), col[1]));
    }
  }
  return col[e];
}

FpPoly SubstituteModP::expand_monomial(const Expo& ev)
{
  FpPoly acc;
  acc.terms.emplace_back(Expo{}, GFp::one());
  for (int i = 0; i < map_.target_vars(); ++i)
    if (ev[i] != 0) acc = poly_mul(fctx_, acc, power(i, ev[i]));
  return acc;
}

} // namespace egc
