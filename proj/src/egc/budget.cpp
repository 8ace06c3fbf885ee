#include "egc/budget.hpp"

#include <cstdlib>

namespace egc {

Budget Budget::parse(const std::string& spec)
{
  Budget b;
  auto colon = spec.find(':');
  std::string pairs = spec.substr(0, colon);
  std::string secs = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (!pairs.empty()) b.max_pairs = std::stoll(pairs);
  if (!secs.empty()) b.wall_ms = std::stoll(secs) * 1000;
  if (b.max_pairs <= 0 || b.wall_ms <= 0)
    throw std::invalid_argument("budget values must be positive");
  return b;
}

Budget Budget::defaults_from_env()
{
  if (const char* env = std::getenv("EGCERT_BUDGET")) {
    return parse(env);
  }
  return Budget{};
}

} // namespace egc
