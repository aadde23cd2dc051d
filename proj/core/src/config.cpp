#include "sylab/config.hpp"

#include <cstdlib>
#include <string>

#include "sylab/error.hpp"

namespace sylab {

std::size_t brute_force_limit() {
  if (const char* env = std::getenv("SY_LAB_BRUTE_LIMIT"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v > 64 ? 64 : static_cast<std::size_t>(v);
  }
  return kDefaultBruteForceLimit;
}

void require_brute_force(std::size_t n, const char* what) {
  std::size_t limit = brute_force_limit();
  if (n > limit) {
    fail(ErrorKind::SizeLimit, std::string(what) + ": ground set of " + std::to_string(n) +
                                   " elements exceeds the enumeration limit " + std::to_string(limit));
  }
}

}  // namespace sylab
