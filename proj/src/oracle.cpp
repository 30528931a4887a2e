#include "edcalc/oracle.hpp"

#include <sstream>

#include "edcalc/error.hpp"
#include "edcalc/report.hpp"

namespace edcalc::oracle {

DualCase random_case(std::mt19937_64& rng, const RandomLimits& limits) {
  std::uniform_int_distribution<int> m_dist(1, limits.max_factors);
  const int m = m_dist(rng);
  std::uniform_int_distribution<int> k_dist(0, std::min(limits.max_dual_dim, m));
  const int k = k_dist(rng);
  std::uniform_int_distribution<Rank> n_dist(1, limits.max_rank);
  std::uniform_int_distribution<std::uint64_t> bits_dist(
      1, (m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1));

  DualCase out;
  for (int i = 0; i < m; ++i) out.n.push_back(n_dist(rng));
  gf2::XorBasis basis(m);
  std::vector<gf2::BitVec> gens;
  while (static_cast<int>(gens.size()) < k) {
    gf2::BitVec v(m, bits_dist(rng));
    if (basis.insert(v)) gens.push_back(v);
  }
  out.R = gf2::rref(m, gens);
  return out;
}

Comparison compare(std::span<const Rank> n, const gf2::Subspace& R,
                   std::uint64_t basis_cap) {
  Comparison c;
  c.exhaustive = brute_min_basis(R, n, basis_cap).total;
  c.greedy = greedy_min_basis(R, n).total;
  return c;
}

Outcome run_spec(const GroupSpecB& spec, std::uint64_t basis_cap) {
  Outcome out;
  std::ostringstream os;
  try {
    validate(spec);
  } catch (const NotReducedError& e) {
    // The comparison only involves R and the weights; reduction is irrelevant.
    os << "warning: " << e.what() << '\n';
  }
  const gf2::Subspace R = compute_R(spec);
  const Comparison c = compare(spec.n, R, basis_cap);
  out.trials = 1;
  out.agreements = c.agree() ? 1 : 0;
  os << "dim R: " << R.dim() << '\n';
  os << (c.agree() ? "agree" : "DISAGREE") << " (" << c.greedy
     << (c.agree() ? " = " : " != ") << c.exhaustive << ")\n";
  if (!c.agree()) {
    out.counterexamples.push_back(report::dual_spec_to_json(spec.n, R).dump());
    os << "counterexample: " << out.counterexamples.back() << '\n';
  }
  out.text = os.str();
  return out;
}

Outcome run_random(int trials, std::uint64_t seed, std::uint64_t basis_cap,
                   const RandomLimits& limits) {
  Outcome out;
  std::ostringstream os;
  os << "seed: " << seed << '\n';
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const DualCase dc = random_case(rng, limits);
    const Comparison c = compare(dc.n, dc.R, basis_cap);
    ++out.trials;
    if (c.agree()) {
      ++out.agreements;
      continue;
    }
    out.counterexamples.push_back(report::dual_spec_to_json(dc.n, dc.R).dump());
    os << "counterexample (trial " << t + 1 << ", greedy " << c.greedy
       << " != exhaustive " << c.exhaustive << "): " << out.counterexamples.back()
       << '\n';
  }
  os << "agree: " << out.agreements << "/" << out.trials << '\n';
  out.text = os.str();
  return out;
}

}  // namespace edcalc::oracle
