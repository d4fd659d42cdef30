#pragma once

// Test-only reference computations, kept independent of the library paths
// they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "dtri/polyring.hpp"

namespace dtri::oracle {

// p(0..n) by Euler's pentagonal-number recurrence.
inline std::vector<Integer> partition_numbers(unsigned n) {
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (long j = 1;; ++j) {
      for (long g : {j * (3 * j - 1) / 2, j * (3 * j + 1) / 2}) {
        if (g > static_cast<long>(m)) continue;
        if (j % 2 == 1)
          p[m] += p[m - g];
        else
          p[m] -= p[m - g];
      }
      if (j * (3 * j - 1) / 2 > static_cast<long>(m)) break;
    }
  }
  return p;
}

// Coefficient list of the product of (1 - q^r) via explicit subset sums
// (no polynomial multiplication).
inline std::vector<Integer> pochhammer_by_subsets(unsigned d) {
  std::vector<Integer> c(d * (d + 1) / 2 + 1);
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    unsigned deg = 0, bits = 0;
    for (unsigned r = 1; r <= d; ++r)
      if (mask & (1u << (r - 1))) deg += r, ++bits;
    c[deg] += bits % 2 ? -1 : 1;
  }
  return c;
}

inline IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<long> coef(-bound, bound);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  return IntPolynomial(std::move(c));
}

}  // namespace dtri::oracle
