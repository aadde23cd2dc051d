#pragma once

#include <cstddef>

namespace sylab {

inline constexpr std::size_t kDefaultBruteForceLimit = 24;

// Ground-set size above which exhaustive enumeration refuses to run.
// SY_LAB_BRUTE_LIMIT overrides the default; values above 64 are clamped.
std::size_t brute_force_limit();

// Throws SizeLimit when n exceeds brute_force_limit().
void require_brute_force(std::size_t n, const char* what);

}  // namespace sylab
