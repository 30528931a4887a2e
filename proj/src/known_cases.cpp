#include <algorithm>

#include "edcalc/edcore.hpp"

namespace edcalc {

namespace {

using V = std::vector<Rank>;

enum class MuShape { Diagonal, Maximal };

struct TableRow {
  V ranks;
  MuShape mu;
  Rank lower;
  const char* rule;
  const char* citation;
};

// Certified lower bounds for the small quotients.
const std::vector<TableRow>& small_quotient_rows() {
  static const std::vector<TableRow> rows = {
      {{2, 2}, MuShape::Diagonal, 5, "spin5-squared-diagonal", "Disp-5.2"},
      {{1, 2}, MuShape::Diagonal, 4, "pair-diagonal-lower", "Lemma-5.7"},
      {{1, 3}, MuShape::Diagonal, 4, "pair-diagonal-lower", "Lemma-5.7"},
      {{1, 4}, MuShape::Diagonal, 5, "pair-diagonal-lower", "Lemma-5.7"},
      {{1, 5}, MuShape::Diagonal, 7, "pair-diagonal-lower", "Lemma-5.7"},
      {{2, 3}, MuShape::Diagonal, 5, "pair-diagonal-lower", "Lemma-5.7"},
      {{1, 1, 1}, MuShape::Maximal, 3, "small-maximal-lower", "Lemma-5.8"},
      {{1, 1, 2}, MuShape::Maximal, 4, "small-maximal-lower", "Lemma-5.8"},
      {{1, 1, 3}, MuShape::Maximal, 5, "small-maximal-lower", "Lemma-5.8"},
      {{1, 1, 1, 1}, MuShape::Maximal, 5, "small-maximal-lower", "Lemma-5.8"},
  };
  return rows;
}

std::string spin_product(const V& ranks) {
  std::string out;
  for (std::size_t i = 0; i < ranks.size();) {
    std::size_t j = i;
    while (j < ranks.size() && ranks[j] == ranks[i]) ++j;
    if (!out.empty()) out += " x ";
    out += "Spin(" + std::to_string(2 * ranks[i] + 1) + ")";
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string multiset(const V& ranks) {
  std::string out = "[";
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(ranks[i]);
  }
  return out + "]";
}

}  // namespace

bool is_diagonal_mu(const GroupSpecB& spec) {
  const int m = spec.m();
  const gf2::BitVec ones = gf2::BitVec::ones(m);
  return mu_subspace(spec) == gf2::rref(m, std::span(&ones, 1));
}

bool is_maximal_mu(const GroupSpecB& spec) {
  const int m = spec.m();
  const gf2::BitVec ones = gf2::BitVec::ones(m);
  return mu_subspace(spec) == gf2::annihilator(gf2::rref(m, std::span(&ones, 1)));
}

const std::vector<KnownCaseRule>& known_case_ledger() {
  static const std::vector<KnownCaseRule> ledger = [] {
    std::vector<KnownCaseRule> out = {
        {"spin3-power-diagonal", BoundKind::Exact, "Spin(3)^m/diag = m+1",
         "m >= 2", "Prop 5.2"},
        {"pair-diagonal-exact", BoundKind::Exact, "[1,2] = 4",
         "(Spin(3) x Spin(5))/diag", "Prop 5.9"},
        {"pair-diagonal-exact", BoundKind::Exact, "[1,3] = 4",
         "(Spin(3) x Spin(7))/diag", "Prop 5.9"},
        {"equal-rank-diagonal", BoundKind::LowerBound,
         "Spin(2n+1)^m/diag lower \u2265 m+2n-1", "m >= 2", "Lemma 5.6"},
    };
    for (const auto& row : small_quotient_rows()) {
      std::string citation = row.citation;
      std::replace(citation.begin(), citation.end(), '-', ' ');
      out.push_back({row.rule, BoundKind::LowerBound,
                     multiset(row.ranks) + " lower \u2265 " +
                         std::to_string(row.lower),
                     "(" + spin_product(row.ranks) + ")/" +
                         (row.mu == MuShape::Diagonal ? "diag" : "maximal"),
                     citation});
    }
    return out;
  }();
  return ledger;
}

std::vector<KnownCase> known_case_matches(const GroupSpecB& spec) {
  std::vector<KnownCase> out;
  const int m = spec.m();
  if (m < 2) return out;
  V sorted = spec.n;
  std::sort(sorted.begin(), sorted.end());
  const bool diagonal = is_diagonal_mu(spec);
  const bool maximal = is_maximal_mu(spec);
  const bool all_equal = sorted.front() == sorted.back();

  if (diagonal && all_equal && sorted.front() == 1) {
    out.push_back({BoundKind::Exact, m + 1, "spin3-power-diagonal", "Prop-5.2"});
  }
  if (diagonal && (sorted == V{1, 2} || sorted == V{1, 3})) {
    out.push_back({BoundKind::Exact, 4, "pair-diagonal-exact", "Prop-5.9"});
  }
  if (diagonal && all_equal) {
    out.push_back({BoundKind::LowerBound, m + 2 * sorted.front() - 1,
                   "equal-rank-diagonal", "Lemma-5.6"});
  }
  for (const auto& row : small_quotient_rows()) {
    const bool shape = row.mu == MuShape::Diagonal ? diagonal : maximal;
    if (shape && sorted == row.ranks) {
      out.push_back({BoundKind::LowerBound, row.lower, row.rule, row.citation});
    }
  }
  return out;
}

std::optional<KnownCase> known_cases(const GroupSpecB& spec) {
  std::optional<KnownCase> best;
  for (const auto& kc : known_case_matches(spec)) {
    if (!best) {
      best = kc;
    } else if (kc.kind == BoundKind::Exact && best->kind != BoundKind::Exact) {
      best = kc;
    } else if (kc.kind == best->kind && kc.kind == BoundKind::LowerBound &&
               kc.value > best->value) {
      best = kc;
    }
  }
  return best;
}

}  // namespace edcalc
