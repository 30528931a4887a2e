#pragma once

// Linear algebra over F2 on bit-vectors of length at most 64.
//
// Coordinate i of a vector (0-based here, 1-based in user-facing output)
// is bit i of the machine word, so factor i of a group corresponds to bit i.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace edcalc::gf2 {

inline constexpr int kMaxDim = 64;

class BitVec {
 public:
  BitVec() = default;
  // Throws DimensionMismatch if m is outside [0, 64] or bits has set bits >= m.
  explicit BitVec(int m, std::uint64_t bits = 0);

  static BitVec unit(int m, int i);
  static BitVec ones(int m);
  // Builds from a 0/1 coordinate list; entries other than 0/1 are rejected.
  static BitVec from_coords(std::span<const int> coords);

  int dim() const noexcept { return m_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool test(int i) const noexcept { return (bits_ >> i) & 1u; }
  bool is_zero() const noexcept { return bits_ == 0; }
  int popcount() const noexcept;
  // Lowest set coordinate, or -1 for the zero vector.
  int lowest() const noexcept;

  std::vector<int> support() const;
  std::vector<int> coords() const;
  // "1110" style, coordinate 0 first.
  std::string to_string() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  int m_ = 0;
  std::uint64_t bits_ = 0;
};

// Lexicographic order on coordinate tuples (r_1, ..., r_m) with 0 < 1.
bool lex_less(const BitVec& a, const BitVec& b) noexcept;

// Incremental independence test (xor basis keyed by the highest pivot).
class XorBasis {
 public:
  explicit XorBasis(int m);

  // Returns true and absorbs v when v is independent of what was inserted.
  bool insert(const BitVec& v);
  bool spans(const BitVec& v) const;
  int rank() const noexcept { return rank_; }

 private:
  std::uint64_t reduce(std::uint64_t v) const noexcept;

  int m_;
  int rank_ = 0;
  std::vector<std::uint64_t> rows_;  // rows_[b] has lowest bit b, or 0
};

int rank(int m, std::span<const BitVec> vectors);

class Subspace {
 public:
  // Zero subspace of F2^m.
  explicit Subspace(int m = 0);

  int ambient_dim() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  // Reduced row-echelon basis, pivots strictly increasing.
  const std::vector<BitVec>& basis() const noexcept { return basis_; }
  std::vector<int> pivots() const;

  bool contains(const BitVec& v) const;
  // Residual of v after eliminating against the pivots.
  BitVec reduce(const BitVec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace rref(int m, std::span<const BitVec> vectors);

  int m_;
  std::vector<BitVec> basis_;
};

Subspace rref(int m, std::span<const BitVec> vectors);
Subspace full_space(int m);
// Orthogonal complement under the mod-2 dot product.
Subspace annihilator(const Subspace& s);

inline constexpr int kDefaultMaxEnumDim = 24;

// All 2^k - 1 nonzero elements, in Gray-code order.
std::vector<BitVec> enumerate_elements(const Subspace& s,
                                       int max_dim = kDefaultMaxEnumDim);

// Number of unordered bases of a k-dimensional F2 space, saturating at
// UINT64_MAX.
std::uint64_t basis_count(int k);

// Visits each unordered basis of s exactly once. The callback returns false
// to stop early. Throws EnumerationTooLarge when basis_count(dim) > cap.
void for_each_basis(const Subspace& s, std::uint64_t cap,
                    const std::function<bool(std::span<const BitVec>)>& visit);

std::vector<std::vector<BitVec>> enumerate_bases(const Subspace& s,
                                                 std::uint64_t cap);

}  // namespace edcalc::gf2
