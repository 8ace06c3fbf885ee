#include "egc/poly.hpp"

namespace egc {

void make_primitive(QPoly& f)
{
  if (f.is_zero()) return;
  BigInt den_lcm = 1;
  for (const auto& t : f.terms) den_lcm = lcm(den_lcm, BigInt(t.second.get_den()));
  BigInt num_gcd = 0;
  for (const auto& t : f.terms) {
    BigInt scaled = BigInt(t.second.get_num()) * divexact(den_lcm, BigInt(t.second.get_den()));
    num_gcd = gcd(num_gcd, scaled);
  }
  if (sgn(f.lc()) < 0) num_gcd = -num_gcd;
  BigRat factor = rat(den_lcm, num_gcd);
  for (auto& t : f.terms) t.second *= factor;
}

void make_monic(const QCtx& ctx, QPoly& f)
{
  if (f.is_zero()) return;
  BigRat inv = 1 / f.lc();
  for (auto& t : f.terms) t.second *= inv;
  (void)ctx;
}

QPoly to_qpoly_from_int_terms(const QCtx& ctx, std::vector<std::pair<Expo, BigInt>> terms)
{
  std::vector<QPoly::Term> qt;
  qt.reserve(terms.size());
  for (auto& t : terms) qt.emplace_back(t.first, BigRat(std::move(t.second)));
  return make_poly(ctx, std::move(qt));
}

FpPoly reduce_mod_p(const FpCtx& fctx, const QPoly& f)
{
  uint64_t p = fctx.field.f.p();
  std::vector<FpPoly::Term> terms;
  terms.reserve(f.terms.size());
  for (const auto& t : f.terms) {
    BigInt num(t.second.get_num()), den(t.second.get_den());
    uint64_t dn = mod_ui(den, p);
    if (dn == 0) throw std::domain_error("reduce_mod_p: denominator vanishes mod p");
    uint64_t c = fctx.field.f.div(mod_ui(num, p), dn);
    if (c != 0) terms.emplace_back(t.first, c);
  }
  return make_poly(fctx, std::move(terms));
}

BigRat poly_eval(const QPoly& f, const std::vector<BigRat>& point)
{
  BigRat acc(0);
  for (const auto& t : f.terms) {
    BigRat v = t.second;
    for (size_t i = 0; i < point.size(); ++i)
      for (uint16_t e = 0; e < t.first.e[i]; ++e) v *= point[i];
    acc += v;
  }
  return acc;
}

} // namespace egc
