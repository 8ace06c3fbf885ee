#ifndef EGC_PARSE_HPP
#define EGC_PARSE_HPP

// Text grammar shared with the CLI:
//
//   ring y0 y1 y2;
//   map x0 = y1^5*y2; x1 = y0^5*y1; x2 = y1^6 + y1^3*y2^3; ...
//
// Integer coefficients, '^' powers, '*' products, '+'/'-' sums;
// whitespace-insensitive. A bare polynomial expression (no 'ring'/'map'
// header) can also be parsed against an explicit ring.

#include "egc/poly.hpp"

#include <string>

namespace egc {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParsedMap {
  Ring source;                    // the y-ring the sections live in
  std::vector<std::string> target_names; // x-variables, in declaration order
  std::vector<QPoly> sections;    // one per target variable, in ctx(source)
};

QPoly parse_poly(const QCtx& ctx, const std::string& text);

ParsedMap parse_section_map(const std::string& text);

std::string poly_to_string(const QCtx& ctx, const QPoly& f);

std::string section_map_to_string(const ParsedMap& m);

} // namespace egc

#endif
