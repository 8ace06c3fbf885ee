#ifndef EGC_KERNEL_HPP
#define EGC_KERNEL_HPP

// Kernel of the substitution homomorphism x_i -> s_i: the defining ideal
// of the closure of the image of the rational map.

#include "egc/groebner.hpp"
#include "egc/sections.hpp"

namespace egc {

struct IdealBasis {
  Ring ring;
  std::vector<QPoly> gens; // nonzero homogeneous, reduced GB in degrevlex
};

struct KernelOptions {
  // Default: block order eliminating the source variables over the graph
  // ideal (same elimination guarantee, much smaller bases). The pure lex
  // route is kept for cross-checking.
  bool pure_lex = false;
};

// Every returned generator substitutes to zero under the map; this is
// checked unconditionally. Budget overruns raise BudgetExceeded.
IdealBasis kernel_of_map(const SectionMap& map, BudgetClock& clock, KernelOptions opts = {});

// Same elimination over GF(p) (for field-stability cross-checks).
std::vector<FpPoly> kernel_of_map_mod_p(const SectionMap& map, uint64_t p, BudgetClock& clock);

} // namespace egc

#endif
