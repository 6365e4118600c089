#pragma once

// Shared power-basis tables for Q(zeta_n); internal to the library.

#include <cstdint>
#include <vector>

namespace qdouble::detail {

struct CyclotomicBasis {
  std::int64_t n = 1;
  std::size_t phi = 1;
  /// residue[k] = x^k mod Phi_n for 0 <= k < n, each of length phi.
  std::vector<std::vector<std::int64_t>> residue;
};

/// Cached per conductor; the returned reference stays valid for the lifetime
/// of the process. Thread safe.
const CyclotomicBasis& basis(std::int64_t n);

std::vector<std::int64_t> prime_factors(std::int64_t n);

inline std::int64_t canonical_conductor(std::int64_t n) { return n % 4 == 2 ? n / 2 : n; }

}  // namespace qdouble::detail
