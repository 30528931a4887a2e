#include "edcalc/edcore.hpp"

#include <algorithm>
#include <sstream>

#include "edcalc/error.hpp"

namespace edcalc {

using gf2::BitVec;
using gf2::Subspace;

namespace {

std::string basis_string(std::span<const BitVec> basis) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i) os << ", ";
    os << '(';
    for (int j = 0; j < basis[i].dim(); ++j) {
      if (j) os << ',';
      os << (basis[i].test(j) ? 1 : 0);
    }
    os << ')';
  }
  os << '}';
  return os.str();
}

std::string multiset_string(std::span<const Rank> ms) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) os << ',';
    os << ms[i];
  }
  os << ']';
  return os.str();
}

BigInt total_weight(std::span<const BitVec> basis, std::span<const Rank> n) {
  BigInt total = 0;
  for (const auto& r : basis) total += weight_of(r, n).weight;
  return total;
}

// First basis vector whose support multiset is small, if any.
std::optional<BitVec> first_small(std::span<const BitVec> basis,
                                  std::span<const Rank> n) {
  for (const auto& r : basis) {
    if (is_small(support_multiset(r, n))) return r;
  }
  return std::nullopt;
}

// Sum of 2^{n_i} lower estimate: every nonzero r in R weighs at least
// 2^{min n_i}, so any basis totals at least k * 2^{min n_i}.
BigInt relaxed_min_total(const Subspace& R, std::span<const Rank> n) {
  if (R.dim() == 0) return 0;
  const Rank smallest = *std::min_element(n.begin(), n.end());
  return BigInt(R.dim()) * (BigInt(1) << static_cast<unsigned>(smallest));
}

}  // namespace

GroupSpecB spec_from_dual(std::vector<Rank> n, std::span<const BitVec> r_gens) {
  const int m = static_cast<int>(n.size());
  const Subspace R = gf2::rref(m, r_gens);
  const Subspace mu = gf2::annihilator(R);
  return GroupSpecB{std::move(n), mu.basis()};
}

Subspace mu_subspace(const GroupSpecB& spec) {
  return gf2::rref(spec.m(), spec.mu_gens);
}

Subspace compute_R(const GroupSpecB& spec) {
  return gf2::annihilator(mu_subspace(spec));
}

void validate(const GroupSpecB& spec) {
  const int m = spec.m();
  if (m == 0) throw Error(ErrorCode::EmptySpec, "empty spec: no factors");
  if (m > gf2::kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch,
                "at most 64 factors are supported, got " + std::to_string(m));
  }
  for (int i = 0; i < m; ++i) {
    if (spec.n[i] < 1 || spec.n[i] > kMaxFactorRank) {
      throw Error(ErrorCode::InvalidRank,
                  "factor " + std::to_string(i + 1) + ": rank n = " +
                      std::to_string(spec.n[i]) + " outside [1, 2^31 - 1]");
    }
  }
  for (const auto& g : spec.mu_gens) {
    if (g.dim() != m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "mu generator " + g.to_string() + " has length " +
                      std::to_string(g.dim()) + ", expected " +
                      std::to_string(m));
    }
  }
  const Subspace mu = mu_subspace(spec);
  for (int i = 0; i < m; ++i) {
    if (mu.contains(BitVec::unit(m, i))) {
      throw NotReducedError(
          i + 1, "not reduced: mu contains the center of factor " +
                     std::to_string(i + 1) + " (Spin(" +
                     std::to_string(2 * spec.n[i] + 1) +
                     ")) as a direct factor; replace it by an SO factor");
    }
  }
}

BigInt group_dim(std::span<const Rank> n) {
  BigInt total = 0;
  for (Rank ni : n) {
    const BigInt b(ni);
    total += 2 * b * b + b;
  }
  return total;
}

WeightedVector weight_of(const BitVec& r, std::span<const Rank> n) {
  if (r.dim() != static_cast<int>(n.size())) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length " + std::to_string(r.dim()) +
                    " does not match " + std::to_string(n.size()) +
                    " factors");
  }
  std::uint64_t exponent = 0;
  for (int i : r.support()) exponent += static_cast<std::uint64_t>(n[i]);
  return WeightedVector{r, exponent, BigInt(1) << exponent};
}

MinBasis greedy_min_basis(const Subspace& R, std::span<const Rank> n,
                          int max_enum_dim) {
  struct Candidate {
    std::uint64_t exponent;
    BitVec r;
  };
  std::vector<Candidate> candidates;
  for (const auto& r : gf2::enumerate_elements(R, max_enum_dim)) {
    candidates.push_back({weight_of(r, n).exponent, r});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.exponent != b.exponent) return a.exponent < b.exponent;
              return gf2::lex_less(a.r, b.r);
            });

  MinBasis out;
  gf2::XorBasis independent(R.ambient_dim());
  for (const auto& c : candidates) {
    if (static_cast<int>(out.basis.size()) == R.dim()) break;
    if (independent.insert(c.r)) {
      out.basis.push_back(c.r);
      out.total += BigInt(1) << c.exponent;
    }
  }
  return out;
}

MinBasis brute_min_basis(const Subspace& R, std::span<const Rank> n,
                         std::uint64_t cap) {
  std::optional<MinBasis> best;
  gf2::for_each_basis(R, cap, [&](std::span<const BitVec> basis) {
    BigInt total = total_weight(basis, n);
    if (!best || total < best->total) {
      best = MinBasis{{basis.begin(), basis.end()}, std::move(total)};
    }
    return true;
  });
  return best.value_or(MinBasis{});
}

bool is_small(std::vector<Rank> ms) {
  std::sort(ms.begin(), ms.end());
  using V = std::vector<Rank>;
  switch (ms.size()) {
    case 1:
      return ms[0] >= 1 && ms[0] <= 6;
    case 2:
      return (ms[0] == 1 && ms[1] <= 5) || ms == V{2, 2} || ms == V{2, 3};
    case 3:
      return ms == V{1, 1, 1} || ms == V{1, 1, 2} || ms == V{1, 1, 3};
    case 4:
      return ms == V{1, 1, 1, 1};
    default:
      return false;
  }
}

std::vector<Rank> support_multiset(const BitVec& r, std::span<const Rank> n) {
  std::vector<Rank> out;
  for (int i : r.support()) out.push_back(n[i]);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt lower_bound_formula(const GroupSpecB& spec, int max_enum_dim) {
  const MinBasis best = greedy_min_basis(compute_R(spec), spec.n, max_enum_dim);
  return best.total - group_dim(spec.n);
}

std::optional<BigInt> upper_bound_for_basis(const GroupSpecB& spec,
                                            std::span<const BitVec> basis) {
  const Subspace R = compute_R(spec);
  const int m = spec.m();
  for (const auto& r : basis) {
    if (r.dim() != m) {
      throw Error(ErrorCode::DimensionMismatch,
                  "basis vector " + r.to_string() + " has wrong length");
    }
  }
  if (static_cast<int>(basis.size()) != R.dim() ||
      gf2::rank(m, basis) != R.dim() ||
      !std::all_of(basis.begin(), basis.end(),
                   [&](const BitVec& r) { return R.contains(r); })) {
    throw Error(ErrorCode::NotABasis,
                basis_string(basis) + " is not a basis of R");
  }
  if (first_small(basis, spec.n)) return std::nullopt;
  return total_weight(basis, spec.n) - group_dim(spec.n);
}

EdResult compute_ed(const GroupSpecB& spec, const EdOptions& options) {
  validate(spec);

  EdResult res;
  res.group_dim = group_dim(spec.n);
  const Subspace R = compute_R(spec);
  res.trace.push_back({"dual-subspace", "Thm-2.3",
                       "R = mu^perp, dim " + std::to_string(R.dim()) +
                           ", basis " + basis_string(R.basis())});

  {
    bool holds = true;
    for (int i = 0; i < spec.m(); ++i) {
      const bool direct = R.contains(BitVec::unit(spec.m(), i));
      if (!(spec.n[i] >= 7 || (spec.n[i] >= 3 && !direct))) holds = false;
    }
    res.trace.push_back({"main-theorem-hypothesis", "Thm-2.3",
                         holds ? "holds" : "does not hold"});
  }

  const auto known = known_case_matches(spec);
  std::optional<KnownCase> strongest = known_cases(spec);

  if (R.dim() > options.max_enum_dim) {
    // Greedy is out of reach; fall back to a relaxed lower estimate and the
    // RREF basis as the only upper-bound candidate.
    res.cap_exceeded = true;
    res.warnings.push_back("dim R = " + std::to_string(R.dim()) +
                           " exceeds the enumeration cap (dimension " +
                           std::to_string(options.max_enum_dim) +
                           "); minimal basis not computed");
    const BigInt relaxed = relaxed_min_total(R, spec.n) - res.group_dim;
    res.trace.push_back({"lower-bound-relaxed", "Prop-4.4",
                         "k * 2^{min n_i} - dim G = " + relaxed.str()});
    res.lower = std::max(BigInt(0), relaxed);
    res.decisive_citation = "Prop-4.4";
    if (auto ub = upper_bound_for_basis(spec, R.basis())) {
      res.upper = *ub;
      res.trace.push_back({"upper-bound-basis", "Cor-3.5",
                           "RREF basis gives " + ub->str()});
      if (*ub == res.lower) {
        res.status = EdStatus::Exact;
        res.cap_exceeded = false;
        res.trace.push_back({"bounds-coincide", "Cor-3.5",
                             "relaxed lower bound meets the RREF upper bound; ed = " +
                                 ub->str()});
      }
    }
  } else {
    const MinBasis best = greedy_min_basis(R, spec.n, options.max_enum_dim);
    res.minimal_basis = best.basis;
    res.basis_total_weight = best.total;
    res.trace.push_back({"greedy-minimal-basis", "Thm-2.3",
                         basis_string(best.basis) + ", total weight " +
                             best.total.str()});
    const BigInt formula = best.total - res.group_dim;
    res.trace.push_back({"lower-bound-formula", "Prop-4.4",
                         "raw value " + formula.str()});

    if (auto bad = first_small(best.basis, spec.n); !bad) {
      res.status = EdStatus::Exact;
      res.lower = formula;
      res.upper = formula;
      res.decisive_citation = "Rem-3.6";
      res.trace.push_back(
          {"exact-nonsmall-minimal-basis", "Rem-3.6",
           "every minimal-basis support is non-small; ed = " + formula.str()});
    } else {
      res.trace.push_back(
          {"small-support", "Lists-3.1-3.4",
           "basis vector " + basis_string(std::span(&*bad, 1)) +
               " has small support " +
               multiset_string(support_multiset(*bad, spec.n))});
      res.lower = std::max(BigInt(0), formula);
      res.decisive_citation = "Prop-4.4";

      std::optional<BigInt> best_upper;
      std::vector<BitVec> best_upper_basis;
      auto consider = [&](std::span<const BitVec> basis) {
        if (first_small(basis, spec.n)) return;
        BigInt value = total_weight(basis, spec.n) - res.group_dim;
        if (!best_upper || value < *best_upper) {
          best_upper = std::move(value);
          best_upper_basis.assign(basis.begin(), basis.end());
        }
      };
      if (gf2::basis_count(R.dim()) <= options.basis_cap) {
        gf2::for_each_basis(R, options.basis_cap,
                            [&](std::span<const BitVec> basis) {
                              consider(basis);
                              return true;
                            });
      } else {
        consider(best.basis);
        res.warnings.push_back(
            "basis search skipped: " + std::to_string(R.dim()) +
            "-dimensional R exceeds the basis cap of " +
            std::to_string(options.basis_cap) + "; only the greedy basis was tried");
        res.trace.push_back({"basis-cap-exceeded", "Cor-3.5",
                             "only the greedy basis was tried"});
        res.cap_exceeded = true;
      }
      if (best_upper) {
        res.upper = best_upper;
        res.trace.push_back({"upper-bound-basis", "Cor-3.5",
                             basis_string(best_upper_basis) + " gives " +
                                 best_upper->str()});
        if (*best_upper == formula) {
          // A basis of minimal total weight with non-small supports.
          res.status = EdStatus::Exact;
          res.lower = formula;
          res.decisive_citation = "Rem-3.6";
          res.trace.push_back({"bounds-coincide", "Rem-3.6",
                               "a minimal-weight basis with non-small supports"
                               " exists; ed = " + formula.str()});
        }
      }
    }
  }

  for (const auto& kc : known) {
    res.trace.push_back({kc.rule, kc.citation,
                         std::string(kc.kind == BoundKind::Exact ? "ed = "
                                                                 : "ed >= ") +
                             std::to_string(kc.value)});
  }

  if (strongest) {
    const BigInt value(strongest->value);
    if (strongest->kind == BoundKind::Exact) {
      if (res.status == EdStatus::Exact && res.lower != value) {
        res.warnings.push_back("known exact value " + value.str() +
                               " disagrees with computed " + res.lower.str());
      }
      if (res.upper && *res.upper < value) {
        res.warnings.push_back("known exact value " + value.str() +
                               " exceeds the computed upper bound");
      }
      if (res.status != EdStatus::Exact) {
        res.status = EdStatus::Exact;
        res.lower = value;
        res.upper = value;
        res.decisive_citation = strongest->citation;
        res.cap_exceeded = false;
      }
    } else if (res.status == EdStatus::Exact) {
      if (value > res.lower) {
        res.warnings.push_back("known lower bound " + value.str() +
                               " exceeds the exact value " + res.lower.str());
      }
    } else if (value > res.lower) {
      res.lower = value;
      res.decisive_citation = strongest->citation;
    }
  }
  if (res.upper && *res.upper < res.lower) {
    res.warnings.push_back("lower bound exceeds upper bound");
  }
  return res;
}

}  // namespace edcalc
