#include "egc/groebner.hpp"

namespace egc {

// Explicit instantiations for the two coefficient fields in use.
template Poly<QQ> normal_form<QQ>(const PolyCtx<QQ>&, Poly<QQ>, const std::vector<Poly<QQ>>&);
template Poly<GFp> normal_form<GFp>(const PolyCtx<GFp>&, Poly<GFp>, const std::vector<Poly<GFp>>&);

template GroebnerBasis<QQ> buchberger<QQ>(const PolyCtx<QQ>&, const std::vector<Poly<QQ>>&,
                                          BudgetClock&);
template GroebnerBasis<GFp> buchberger<GFp>(const PolyCtx<GFp>&, const std::vector<Poly<GFp>>&,
                                            BudgetClock&);

template bool ideal_equal<QQ>(const PolyCtx<QQ>&, const GroebnerBasis<QQ>&,
                              const GroebnerBasis<QQ>&);
template bool ideal_equal<GFp>(const PolyCtx<GFp>&, const GroebnerBasis<GFp>&,
                               const GroebnerBasis<GFp>&);

} // namespace egc
