#pragma once

// Essential dimension of reduced groups (Spin(2n_1+1) x ... x Spin(2n_m+1))/mu.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "edcalc/gf2.hpp"

namespace edcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rank = std::int64_t;

inline constexpr Rank kMaxFactorRank = (Rank{1} << 31) - 1;

// Factor i is Spin(2 n[i] + 1). A set bit i in a mu generator means the
// generator's i-th coordinate is -1.
struct GroupSpecB {
  std::vector<Rank> n;
  std::vector<gf2::BitVec> mu_gens;

  int m() const noexcept { return static_cast<int>(n.size()); }
};

// Builds the spec whose dual subspace is span(r_gens), i.e. mu = R^perp.
GroupSpecB spec_from_dual(std::vector<Rank> n,
                          std::span<const gf2::BitVec> r_gens);

gf2::Subspace mu_subspace(const GroupSpecB& spec);
gf2::Subspace compute_R(const GroupSpecB& spec);

// Throws EmptySpec, InvalidRank, DimensionMismatch or NotReducedError.
void validate(const GroupSpecB& spec);

BigInt group_dim(std::span<const Rank> n);

struct WeightedVector {
  gf2::BitVec r;
  std::uint64_t exponent = 0;
  BigInt weight;
};

WeightedVector weight_of(const gf2::BitVec& r, std::span<const Rank> n);

struct MinBasis {
  std::vector<gf2::BitVec> basis;
  BigInt total;
};

// Matroid greedy over the nonzero elements of R sorted by
// (exponent, lexicographic coordinates).
MinBasis greedy_min_basis(const gf2::Subspace& R, std::span<const Rank> n,
                          int max_enum_dim = gf2::kDefaultMaxEnumDim);

// Exhaustive minimum over every unordered basis; the test oracle for greedy.
MinBasis brute_min_basis(const gf2::Subspace& R, std::span<const Rank> n,
                         std::uint64_t cap);

// Membership in the small-group lists; the argument need not be sorted.
bool is_small(std::vector<Rank> multiset);

// Sorted {n_i : i in supp(r)}.
std::vector<Rank> support_multiset(const gf2::BitVec& r,
                                   std::span<const Rank> n);

// Raw value min_B sum weight - dim G; may be negative.
BigInt lower_bound_formula(const GroupSpecB& spec,
                           int max_enum_dim = gf2::kDefaultMaxEnumDim);

// sum weight(B) - dim G when no basis vector has a small support multiset,
// otherwise nullopt. Throws NotABasis when `basis` is not a basis of R.
std::optional<BigInt> upper_bound_for_basis(const GroupSpecB& spec,
                                            std::span<const gf2::BitVec> basis);

enum class BoundKind { Exact, LowerBound };

struct KnownCase {
  BoundKind kind;
  Rank value;
  std::string rule;
  std::string citation;
};

// One row of the known-value ledger, rendered by `edcalc table`.
struct KnownCaseRule {
  std::string rule;
  BoundKind kind;
  std::string description;
  std::string group;
  std::string citation;
};

const std::vector<KnownCaseRule>& known_case_ledger();

// Every ledger entry matching the spec (factors sorted, mu compared as a
// subspace).
std::vector<KnownCase> known_case_matches(const GroupSpecB& spec);
// Strongest match: any exact entry, otherwise the largest lower bound.
std::optional<KnownCase> known_cases(const GroupSpecB& spec);

bool is_diagonal_mu(const GroupSpecB& spec);
bool is_maximal_mu(const GroupSpecB& spec);

enum class EdStatus { Exact, BoundsOnly };

struct TraceEntry {
  std::string rule;
  std::string citation;
  std::string detail;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct EdResult {
  EdStatus status = EdStatus::BoundsOnly;
  BigInt lower;
  std::optional<BigInt> upper;
  std::vector<gf2::BitVec> minimal_basis;
  BigInt basis_total_weight;
  BigInt group_dim;
  // Citation of the rule that fixed the value (Exact) or the lower bound.
  std::string decisive_citation;
  std::vector<TraceEntry> trace;
  std::vector<std::string> warnings;
  // A resource cap prevented the full search and the result is bounds-only.
  bool cap_exceeded = false;
};

struct EdOptions {
  std::uint64_t basis_cap = 100000;
  int max_enum_dim = gf2::kDefaultMaxEnumDim;
};

EdResult compute_ed(const GroupSpecB& spec, const EdOptions& options = {});

}  // namespace edcalc
