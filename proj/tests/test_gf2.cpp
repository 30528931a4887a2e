#include <doctest.h>

#include <bit>
#include <set>

#include "edcalc/error.hpp"
#include "edcalc/gf2.hpp"
#include "support.hpp"

using namespace edcalc;
using gf2::BitVec;
using gf2::Subspace;

namespace {

int dot(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

}  // namespace

TEST_CASE("bitvec basics") {
  const std::vector<int> c = {1, 1, 1, 0};
  const BitVec v = BitVec::from_coords(c);
  CHECK(v.dim() == 4);
  CHECK(v.bits() == 0b0111);
  CHECK(v.to_string() == "1110");
  CHECK(v.coords() == c);
  CHECK(v.support() == std::vector<int>{0, 1, 2});
  CHECK(v.popcount() == 3);
  CHECK(v.lowest() == 0);
  CHECK(BitVec(4).lowest() == -1);
  CHECK((v ^ BitVec::ones(4)) == BitVec::unit(4, 3));
  CHECK_THROWS_AS(BitVec(3, 0b1000), Error);
  const std::vector<int> bad = {0, 2};
  CHECK_THROWS_AS(BitVec::from_coords(bad), Error);
}

TEST_CASE("lex order puts coordinate 0 first") {
  CHECK(gf2::lex_less(BitVec(3, 0b100), BitVec(3, 0b001)));  // 001 < 100
  CHECK_FALSE(gf2::lex_less(BitVec(3, 0b001), BitVec(3, 0b001)));
}

TEST_CASE("rref is canonical") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const int k = static_cast<int>(rng() % (m + 1));
    const auto gens = testing::random_independent(rng, m, k);
    // A random invertible recombination spans the same space.
    std::vector<std::uint64_t> mixed = gens;
    for (int step = 0; step < 10 && k > 1; ++step) {
      const auto i = rng() % k, j = rng() % k;
      if (i != j) mixed[i] ^= mixed[j];
    }
    const Subspace a = gf2::rref(m, testing::as_bitvecs(gens, m));
    const Subspace b = gf2::rref(m, testing::as_bitvecs(mixed, m));
    CHECK(a == b);
    CHECK(a.dim() == k);
    const auto piv = a.pivots();
    CHECK(std::is_sorted(piv.begin(), piv.end()));
    for (std::size_t r = 0; r < a.basis().size(); ++r) {
      // Each pivot column is a unit column.
      for (std::size_t s = 0; s < a.basis().size(); ++s) {
        CHECK(a.basis()[s].test(piv[r]) == (r == s));
      }
    }
  }
}

TEST_CASE("rank agrees with naive elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 20);
    std::vector<std::uint64_t> rows(rng() % 8);
    for (auto& r : rows) r = rng() & ((std::uint64_t{1} << m) - 1);
    CHECK(gf2::rank(m, testing::as_bitvecs(rows, m)) == testing::naive_rank(rows));
  }
}

TEST_CASE("annihilator against exhaustive orthogonality") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const auto gens = testing::random_independent(rng, m, static_cast<int>(rng() % (m + 1)));
    const Subspace s = gf2::rref(m, testing::as_bitvecs(gens, m));
    const Subspace perp = gf2::annihilator(s);
    int orthogonal = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
      bool ok = true;
      for (auto g : gens) ok = ok && dot(v, g) == 0;
      orthogonal += ok;
      CHECK(perp.contains(BitVec(m, v)) == ok);
    }
    CHECK(orthogonal == (1 << perp.dim()));
  }
}

TEST_CASE("double annihilator and dimension identity, m <= 16") {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 16);
    const int k = static_cast<int>(rng() % (m + 1));
    const Subspace s = gf2::rref(m, testing::as_bitvecs(testing::random_independent(rng, m, k), m));
    const Subspace perp = gf2::annihilator(s);
    CHECK(s.dim() + perp.dim() == m);
    CHECK(gf2::annihilator(perp) == s);
  }
}

TEST_CASE("element enumeration") {
  std::mt19937_64 rng(8);
  for (int k = 0; k <= 6; ++k) {
    const auto gens = testing::random_independent(rng, 10, k);
    const Subspace s = gf2::rref(10, testing::as_bitvecs(gens, 10));
    const auto elems = gf2::enumerate_elements(s);
    std::set<std::uint64_t> seen;
    for (const auto& e : elems) {
      CHECK_FALSE(e.is_zero());
      CHECK(s.contains(e));
      seen.insert(e.bits());
    }
    CHECK(seen.size() == (std::size_t{1} << k) - 1);
  }
  const Subspace big = gf2::full_space(30);
  CHECK_THROWS_AS(gf2::enumerate_elements(big, 24), Error);
}

TEST_CASE("basis counts") {
  // prod_{i<k} (2^k - 2^i) / k!
  const std::vector<std::uint64_t> expected = {1, 1, 3, 28, 840, 83328};
  for (int k = 0; k < static_cast<int>(expected.size()); ++k) {
    CHECK(gf2::basis_count(k) == expected[k]);
  }
  CHECK(gf2::basis_count(40) == UINT64_MAX);
  for (int k = 0; k <= 4; ++k) {
    const Subspace s = gf2::full_space(k);
    const auto bases = gf2::enumerate_bases(s, 1000000);
    CHECK(bases.size() == expected[k]);
    std::set<std::vector<std::uint64_t>> distinct;
    for (const auto& b : bases) {
      CHECK(gf2::rank(k, b) == k);
      std::vector<std::uint64_t> key;
      for (const auto& v : b) key.push_back(v.bits());
      std::sort(key.begin(), key.end());
      distinct.insert(key);
    }
    CHECK(distinct.size() == bases.size());
  }
  CHECK_THROWS_AS(gf2::enumerate_bases(gf2::full_space(4), 100), Error);
}
