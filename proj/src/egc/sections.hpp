#ifndef EGC_SECTIONS_HPP
#define EGC_SECTIONS_HPP

// Section maps: a tuple of homogeneous forms of common degree defining a
// rational map P^n --> P^r, plus the substitution homomorphism x_i -> s_i.

#include "egc/parse.hpp"
#include "egc/poly.hpp"

#include <unordered_map>

namespace egc {

struct SectionMap {
  Ring source; // y-ring (n+1 variables)
  Ring target; // x-ring (r+1 variables)
  uint32_t degree = 0;
  std::vector<QPoly> sections; // in the source ring, one per target variable

  int source_vars() const { return source.nvars(); }
  int target_vars() const { return target.nvars(); }
};

// Validates homogeneity of common degree and at least one nonzero section.
SectionMap make_section_map(const ParsedMap& parsed);

SectionMap make_section_map(Ring source, Ring target, std::vector<QPoly> sections);

// Image of F under x_i -> s_i, expanded and collected exactly.
QPoly substitute(const QPoly& f, const SectionMap& map);

// Same homomorphism with coefficients reduced into GF(p). Section powers
// are cached across calls, which makes per-monomial bulk expansion cheap.
class SubstituteModP {
public:
  SubstituteModP(const SectionMap& map, uint64_t p);

  // expansion of the monomial x^ev (ev indexed by target variables)
  FpPoly expand_monomial(const Expo& ev);

  const FpCtx& ctx() const { return fctx_; }

private:
  const FpPoly& power(int section, uint16_t e);

  const SectionMap& map_;
  FpCtx fctx_;
  std::vector<std::vector<FpPoly>> pow_cache_;
};

} // namespace egc

#endif
