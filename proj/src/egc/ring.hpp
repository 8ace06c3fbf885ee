#ifndef EGC_RING_HPP
#define EGC_RING_HPP

// Exponent vectors and monomial orders. Exponents live in a fixed-size
// array sized for the widest ring this toolkit ever touches (graph rings
// for threefold maps: 4 source + 6 target variables).

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace egc {

constexpr int kMaxVars = 12;

struct Expo {
  std::array<uint16_t, kMaxVars> e{};
  uint32_t deg = 0;

  uint16_t operator[](int i) const { return e[i]; }

  void set(int i, uint16_t v)
  {
    deg += v;
    deg -= e[i];
    e[i] = v;
  }

  bool operator==(const Expo& o) const { return deg == o.deg && e == o.e; }
};

inline Expo expo_mul(const Expo& a, const Expo& b)
{
  Expo r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

inline bool expo_divides(const Expo& a, const Expo& b) // a | b
{
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Expo expo_div(const Expo& b, const Expo& a) // b / a, assumes a | b
{
  Expo r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint16_t>(b.e[i] - a.e[i]);
  r.deg = b.deg - a.deg;
  return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b)
{
  Expo r;
  uint32_t d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e[i] = std::max(a.e[i], b.e[i]);
    d += r.e[i];
  }
  r.deg = d;
  return r;
}

inline bool expo_coprime(const Expo& a, const Expo& b)
{
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

struct ExpoHash {
  size_t operator()(const Expo& x) const
  {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < kMaxVars; ++i) {
      h ^= x.e[i];
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct Ring {
  std::vector<std::string> names;

  int nvars() const { return static_cast<int>(names.size()); }

  int var_index(const std::string& name) const
  {
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  static Ring with_vars(std::vector<std::string> names)
  {
    if (static_cast<int>(names.size()) > kMaxVars)
      throw std::invalid_argument("too many ring variables");
    return Ring{std::move(names)};
  }
};

enum class OrderKind { Lex, DegRevLex, Block };

// Block orders compare the leading variable group first (degrevlex within
// each group), which gives the elimination property for that group.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  int block_split = 0; // vars [0, block_split) form the eliminated group

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
  static MonomialOrder block(int split) { return {OrderKind::Block, split}; }

  // three-way: >0 when a > b
  int cmp(const Expo& a, const Expo& b, int nvars) const
  {
    switch (kind) {
      case OrderKind::Lex:
        for (int i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::DegRevLex:
        return cmp_degrevlex(a, b, 0, nvars);
      case OrderKind::Block: {
        int c = cmp_degrevlex(a, b, 0, block_split);
        if (c != 0) return c;
        return cmp_degrevlex(a, b, block_split, nvars);
      }
    }
    return 0;
  }

private:
  static int cmp_degrevlex(const Expo& a, const Expo& b, int lo, int hi)
  {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

} // namespace egc

#endif
