#pragma once

// Clifford algebra oracle working on raw index words, independent of the
// bitmask sign computation in the library.

#include <bit>
#include <random>
#include <vector>

#include "edcalc/extraspecial.hpp"

namespace testing {

using edcalc::extraspecial::CliffordUnit;

// Clifford words reduced by the defining relations alone:
// e_i e_j = -e_j e_i (i != j) and e_i e_i = -1.
struct Word {
  int sign = 1;
  std::vector<int> idx;
};

inline Word reduce_word(std::vector<int> w, int sign = 1) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] == w[p + 1]) {
        w.erase(w.begin() + p, w.begin() + p + 2);
        sign = -sign;
        changed = true;
        break;
      }
      if (w[p] > w[p + 1]) {
        std::swap(w[p], w[p + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  return {sign, w};
}

inline Word oracle_product(const CliffordUnit& a, const CliffordUnit& b) {
  auto w = a.indices();
  const auto j = b.indices();
  w.insert(w.end(), j.begin(), j.end());
  return reduce_word(w, a.sign() * b.sign());
}

inline bool same(const CliffordUnit& u, const Word& w) {
  return u.sign() == w.sign && u.indices() == w.idx;
}

inline std::vector<CliffordUnit> all_units(int N) {
  std::vector<CliffordUnit> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    if (std::popcount(mask) % 2) continue;
    out.emplace_back(N, mask, 1);
    out.emplace_back(N, mask, -1);
  }
  return out;
}

inline CliffordUnit random_unit(std::mt19937_64& rng, int N) {
  std::uint64_t mask = rng() & ((std::uint64_t{1} << N) - 1);
  if (std::popcount(mask) % 2) mask ^= 1;
  return CliffordUnit(N, mask, (rng() & 1) ? 1 : -1);
}

}  // namespace testing
