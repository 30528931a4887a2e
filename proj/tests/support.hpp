#pragma once

// Helpers shared by the test binaries. The oracles here deliberately avoid
// the library's own enumeration and elimination code.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "edcalc/edcore.hpp"

namespace testing {

using edcalc::BigInt;
using edcalc::Rank;

// Rank of 64-bit rows by plain Gaussian elimination.
inline int naive_rank(std::vector<std::uint64_t> rows) {
  int r = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto it = std::find_if(rows.begin() + r, rows.end(),
                           [&](std::uint64_t v) { return (v >> bit) & 1u; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[r]);
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (static_cast<int>(j) != r && ((rows[j] >> bit) & 1u)) rows[j] ^= rows[r];
    }
    ++r;
  }
  return r;
}

inline BigInt pow2(std::uint64_t e) { return BigInt(1) << e; }

inline BigInt naive_weight(std::uint64_t r, const std::vector<Rank>& n) {
  std::uint64_t e = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if ((r >> i) & 1u) e += static_cast<std::uint64_t>(n[i]);
  }
  return pow2(e);
}

// All 2^k elements spanned by `gens` (assumed independent).
inline std::vector<std::uint64_t> span_of(const std::vector<std::uint64_t>& gens) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << gens.size()); ++c) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if ((c >> i) & 1u) v ^= gens[i];
    }
    out.push_back(v);
  }
  return out;
}

// Minimum total weight over all k-subsets of nonzero elements that are
// independent. Also reports how many bases were seen.
struct NaiveMin {
  BigInt total;
  std::uint64_t bases = 0;
};

inline NaiveMin naive_min_basis(const std::vector<std::uint64_t>& gens,
                                const std::vector<Rank>& n) {
  const int k = static_cast<int>(gens.size());
  std::vector<std::uint64_t> elems;
  for (auto v : span_of(gens)) {
    if (v != 0) elems.push_back(v);
  }
  NaiveMin best;
  bool have = false;
  std::vector<int> pick(k);
  // Lexicographic k-combinations of the nonzero elements.
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k == 0) return best;
  while (true) {
    std::vector<std::uint64_t> rows;
    for (int i : pick) rows.push_back(elems[i]);
    if (naive_rank(rows) == k) {
      ++best.bases;
      BigInt total = 0;
      for (auto v : rows) total += naive_weight(v, n);
      if (!have || total < best.total) best.total = total;
      have = true;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == static_cast<int>(elems.size()) - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// k independent random vectors in F2^m.
inline std::vector<std::uint64_t> random_independent(std::mt19937_64& rng, int m,
                                                     int k) {
  std::uniform_int_distribution<std::uint64_t> d(
      1, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  std::vector<std::uint64_t> out;
  while (static_cast<int>(out.size()) < k) {
    out.push_back(d(rng));
    if (naive_rank(out) < static_cast<int>(out.size())) out.pop_back();
  }
  return out;
}

inline std::vector<edcalc::gf2::BitVec> as_bitvecs(const std::vector<std::uint64_t>& v,
                                                   int m) {
  std::vector<edcalc::gf2::BitVec> out;
  for (auto x : v) out.emplace_back(m, x);
  return out;
}

inline BigInt naive_group_dim(const std::vector<Rank>& n) {
  BigInt d = 0;
  for (Rank x : n) d += BigInt(2) * x * x + x;
  return d;
}

}  // namespace testing
