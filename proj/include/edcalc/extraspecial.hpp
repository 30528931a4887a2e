#pragma once

// The extraspecial 2-group Delta(N) = {+-c(I) : I in [N], |I| even} inside
// Spin(N), products of such groups, and lower-bound certificates built from
// finite abelian subgroups with finite centralizer.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edcalc/edcore.hpp"
#include "edcalc/gf2.hpp"

namespace edcalc::extraspecial {

inline constexpr int kMaxN = 63;

// +-c(i_1, ..., i_k) with i_1 < ... < i_k in [1, N], k even.
class CliffordUnit {
 public:
  CliffordUnit() = default;
  // Bit (i - 1) of `mask` stands for index i.
  CliffordUnit(int N, std::uint64_t mask, int sign = 1);

  // Indices are 1-based and need not be sorted; repeats are rejected.
  static CliffordUnit from_indices(int N, std::span<const int> indices,
                                   int sign = 1);
  static CliffordUnit scalar(int N, int sign);

  int N() const noexcept { return N_; }
  int sign() const noexcept { return negative_ ? -1 : 1; }
  std::uint64_t mask() const noexcept { return mask_; }
  std::vector<int> indices() const;
  bool is_scalar() const noexcept { return mask_ == 0; }
  std::string to_string() const;

  friend bool operator==(const CliffordUnit&, const CliffordUnit&) = default;

 private:
  int N_ = 0;
  std::uint64_t mask_ = 0;
  bool negative_ = false;
};

CliffordUnit multiply(const CliffordUnit& a, const CliffordUnit& b);
bool commutes(const CliffordUnit& a, const CliffordUnit& b);
CliffordUnit square(const CliffordUnit& a);
CliffordUnit inverse(const CliffordUnit& a);
// Positions of -1 in the diagonal matrix d(I); the sign is forgotten.
std::vector<int> vector_image(const CliffordUnit& a);

// Component i lives in Delta(N_i).
using CliffordTuple = std::vector<CliffordUnit>;

CliffordTuple multiply(const CliffordTuple& a, const CliffordTuple& b);
CliffordTuple square(const CliffordTuple& a);
CliffordTuple identity_tuple(std::span<const int> dims);
// Scalar tuple with -1 exactly at the set bits of `signs`.
CliffordTuple scalar_tuple(std::span<const int> dims, const gf2::BitVec& signs);
// Sign pattern of a scalar tuple; throws InvalidArgument otherwise.
gf2::BitVec scalar_signs(const CliffordTuple& t);
// a b a^-1 b^-1 as a sign pattern; always scalar in a product of Delta's.
gf2::BitVec commutator_signs(const CliffordTuple& a, const CliffordTuple& b);
std::string to_string(const CliffordTuple& t);

inline constexpr std::uint64_t kDefaultClosureCap = std::uint64_t{1} << 20;

// Breadth-first closure under right multiplication by the generators.
std::vector<CliffordTuple> closure(std::span<const CliffordTuple> generators,
                                   std::span<const int> dims,
                                   std::uint64_t cap = kDefaultClosureCap);

struct QuotientRank {
  std::uint64_t order = 0;
  int rank = 0;
};

// Order and rank of H = H'/(H' cap mu), mu read as scalar tuples. Throws
// NonAbelianQuotient when some commutator falls outside mu.
QuotientRank quotient_rank(std::span<const CliffordTuple> h_prime,
                           const gf2::Subspace& mu);

// Sufficient test: per factor, refining {I, complement} over the images of
// that factor's components must leave only singletons.
bool centralizer_finite(std::span<const CliffordTuple> tuples,
                        std::span<const int> dims);

struct Certificate {
  GroupSpecB spec;
  std::vector<CliffordTuple> generators;
  // Free-form remarks attached by builtin constructors.
  std::vector<std::string> notes;
};

struct CertReport {
  bool abelian_in_quotient = false;
  std::uint64_t closure_order = 0;
  std::uint64_t subgroup_order = 0;
  int rank = 0;
  bool centralizer_finite = false;
  std::optional<int> lower_bound;
  std::optional<std::string> failure_reason;
  std::vector<std::string> notes;
};

std::vector<int> factor_dims(const GroupSpecB& spec);

CertReport verify_certificate(const Certificate& cert,
                              std::uint64_t cap = kDefaultClosureCap);

// Generators (c(i,i+1), ..., c(i,i+1)) for i <= 2n and the sign flips h_l,
// l < m, over the diagonal quotient of Spin(2n+1)^m.
Certificate builtin_diagonal(Rank n, int m);
// Two-factor diagonal quotients [n1, n2] with n1 < n2 from the small list.
Certificate builtin_pair(Rank n1, Rank n2);
// Maximal quotients [1,1,1], [1,1,2], [1,1,3].
Certificate builtin_small3(std::span<const Rank> variant);
// Maximal quotient of Spin(3)^4.
Certificate builtin_small4();

// "builtin:diagonal:N:M", "builtin:pair:A:B", "builtin:small3:1:1:K",
// "builtin:small4".
Certificate builtin_certificate(const std::string& name);

}  // namespace edcalc::extraspecial
