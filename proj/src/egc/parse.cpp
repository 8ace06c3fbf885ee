#include "egc/parse.hpp"

#include <cctype>
#include <sstream>

namespace egc {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip_ws()
  {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eof()
  {
    skip_ws();
    return pos >= s.size();
  }

  char peek()
  {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool accept(char c)
  {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
  }

  std::string ident()
  {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected identifier at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }

  BigInt integer()
  {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("expected integer at offset " + std::to_string(pos));
    return BigInt(s.substr(start, pos - start));
  }

  bool at_digit()
  {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  bool at_ident()
  {
    skip_ws();
    return pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_');
  }
};

// term := [integer] {'*'? factor}   factor := ident ['^' integer]
std::pair<Expo, BigInt> parse_term(Lexer& lx, const Ring& ring)
{
  BigInt coeff = 1;
  Expo ex;
  bool saw_factor = false;
  if (lx.at_digit()) {
    coeff = lx.integer();
    saw_factor = true;
  }
  for (;;) {
    if (lx.accept('*')) {
      // explicit product, factor must follow
    } else if (!lx.at_ident()) {
      break;
    }
    if (lx.at_digit()) {
      coeff *= lx.integer();
      saw_factor = true;
      continue;
    }
    std::string name = lx.ident();
    int vi = ring.var_index(name);
    if (vi < 0) throw ParseError("unknown variable '" + name + "'");
    unsigned long e = 1;
    if (lx.accept('^')) e = lx.integer().get_ui();
    ex.set(vi, static_cast<uint16_t>(ex[vi] + e));
    saw_factor = true;
  }
  if (!saw_factor) throw ParseError("empty term at offset " + std::to_string(lx.pos));
  return {ex, coeff};
}

QPoly parse_poly_expr(Lexer& lx, const QCtx& ctx)
{
  std::vector<std::pair<Expo, BigInt>> terms;
  int sign = 1;
  if (lx.accept('-')) sign = -1;
  else lx.accept('+');
  for (;;) {
    auto [ex, c] = parse_term(lx, ctx.ring);
    terms.emplace_back(ex, sign * c);
    if (lx.accept('+')) sign = 1;
    else if (lx.accept('-')) sign = -1;
    else break;
  }
  return to_qpoly_from_int_terms(ctx, std::move(terms));
}

} // namespace

QPoly parse_poly(const QCtx& ctx, const std::string& text)
{
  Lexer lx(text);
  QPoly f = parse_poly_expr(lx, ctx);
  if (!lx.eof()) throw ParseError("trailing input at offset " + std::to_string(lx.pos));
  return f;
}

ParsedMap parse_section_map(const std::string& text)
{
  Lexer lx(text);
  if (lx.ident() != "ring") throw ParseError("section map must start with 'ring'");
  std::vector<std::string> yvars;
  while (!lx.accept(';')) yvars.push_back(lx.ident());
  if (yvars.empty()) throw ParseError("ring declaration needs at least one variable");

  ParsedMap out;
  out.source = Ring::with_vars(yvars);
  QCtx ctx{out.source, MonomialOrder::degrevlex(), QQ{}};

  if (lx.ident() != "map") throw ParseError("expected 'map' after ring declaration");
  for (;;) {
    std::string xname = lx.ident();
    for (const auto& prev : out.target_names)
      if (prev == xname) throw ParseError("duplicate map variable '" + xname + "'");
    if (out.source.var_index(xname) >= 0)
      throw ParseError("map variable '" + xname + "' collides with a ring variable");
    lx.expect('=');
    QPoly f = parse_poly_expr(lx, ctx);
    out.target_names.push_back(xname);
    out.sections.push_back(std::move(f));
    if (!lx.accept(';')) break;
    if (lx.eof()) break;
  }
  if (out.sections.empty()) throw ParseError("map declaration needs at least one section");
  return out;
}

std::string poly_to_string(const QCtx& ctx, const QPoly& f)
{
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c] : f.terms) {
    BigRat a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else if (sgn(a) < 0) {
      os << " - ";
      a = -a;
    } else {
      os << " + ";
    }
    bool unit = (a == 1);
    if (!unit || ex.deg == 0) os << a.get_str();
    bool need_star = !unit && ex.deg > 0;
    for (int i = 0; i < ctx.ring.nvars(); ++i) {
      if (ex[i] == 0) continue;
      if (need_star) os << "*";
      os << ctx.ring.names[i];
      if (ex[i] > 1) os << "^" << ex[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string section_map_to_string(const ParsedMap& m)
{
  std::ostringstream os;
  os << "ring";
  for (const auto& n : m.source.names) os << " " << n;
  os << ";\nmap";
  QCtx ctx{m.source, MonomialOrder::degrevlex(), QQ{}};
  for (size_t i = 0; i < m.sections.size(); ++i) {
    os << (i == 0 ? " " : "    ") << m.target_names[i] << " = "
       << poly_to_string(ctx, m.sections[i]) << ";\n";
  }
  return os.str();
}

} // namespace egc
