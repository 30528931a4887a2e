#include "edcalc/extraspecial.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "edcalc/error.hpp"

namespace edcalc::extraspecial {

namespace {

std::uint64_t mask_for(int N) {
  return N >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << N) - 1);
}

void require_same_N(const CliffordUnit& a, const CliffordUnit& b) {
  if (a.N() != b.N()) {
    throw Error(ErrorCode::DimensionMismatch,
                "Delta(" + std::to_string(a.N()) + ") vs Delta(" +
                    std::to_string(b.N()) + ")");
  }
}

void require_same_length(const CliffordTuple& a, const CliffordTuple& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "tuples of different length");
  }
}

// Parity of #{(i, j) in I x J : i > j}.
int inversion_parity(std::uint64_t I, std::uint64_t J) {
  int parity = 0;
  for (std::uint64_t b = J; b != 0; b &= b - 1) {
    const int j = std::countr_zero(b);
    const std::uint64_t above = j >= 63 ? 0 : (I & (~std::uint64_t{0} << (j + 1)));
    parity ^= std::popcount(above) & 1;
  }
  return parity;
}

struct TupleKey {
  std::uint64_t signs = 0;
  std::vector<std::uint64_t> masks;

  friend bool operator==(const TupleKey&, const TupleKey&) = default;
};

struct TupleKeyHash {
  std::size_t operator()(const TupleKey& k) const noexcept {
    std::uint64_t h = k.signs * 0x9e3779b97f4a7c15ULL;
    for (auto m : k.masks) {
      h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

TupleKey key_of(const CliffordTuple& t) {
  TupleKey k;
  k.masks.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].sign() < 0) k.signs |= std::uint64_t{1} << i;
    k.masks.push_back(t[i].mask());
  }
  return k;
}

// Row echelon form over F2 for vectors wider than one word.
class WideXorBasis {
 public:
  bool insert(std::vector<std::uint64_t> v) {
    reduce(v);
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w] != 0) {
        pivots_.emplace_back(w, std::countr_zero(v[w]));
        rows_.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto [w, b] = pivots_[r];
      if ((v[w] >> b) & 1u) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] ^= rows_[r][i];
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::pair<std::size_t, int>> pivots_;
};

gf2::BitVec mask_commutator(std::span<const std::uint64_t> a,
                            std::span<const std::uint64_t> b) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::popcount(a[i] & b[i]) & 1) bits |= std::uint64_t{1} << i;
  }
  return gf2::BitVec(static_cast<int>(a.size()), bits);
}

}  // namespace

CliffordUnit::CliffordUnit(int N, std::uint64_t mask, int sign)
    : N_(N), mask_(mask), negative_(sign < 0) {
  if (N < 1 || N > kMaxN) {
    throw Error(ErrorCode::InvalidArgument,
                "Delta(N) needs 1 <= N <= " + std::to_string(kMaxN) + ", got " +
                    std::to_string(N));
  }
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  }
  if ((mask & ~mask_for(N)) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "index beyond N = " + std::to_string(N));
  }
  if (std::popcount(mask) % 2 != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "c(I) requires |I| even, got |I| = " +
                    std::to_string(std::popcount(mask)));
  }
}

CliffordUnit CliffordUnit::from_indices(int N, std::span<const int> indices,
                                        int sign) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > N || i > kMaxN) {
      throw Error(ErrorCode::InvalidArgument,
                  "index " + std::to_string(i) + " outside [1, " +
                      std::to_string(N) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (mask & bit) {
      throw Error(ErrorCode::InvalidArgument,
                  "repeated index " + std::to_string(i) + " in c(I)");
    }
    mask |= bit;
  }
  return CliffordUnit(N, mask, sign);
}

CliffordUnit CliffordUnit::scalar(int N, int sign) {
  return CliffordUnit(N, 0, sign);
}

std::vector<int> CliffordUnit::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = mask_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string CliffordUnit::to_string() const {
  std::string s = negative_ ? "-" : "";
  if (mask_ == 0) return s + "1";
  s += "c(";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + ")";
}

CliffordUnit multiply(const CliffordUnit& a, const CliffordUnit& b) {
  require_same_N(a, b);
  const int flips = inversion_parity(a.mask(), b.mask()) +
                    std::popcount(a.mask() & b.mask());
  const int sign = a.sign() * b.sign() * (flips % 2 ? -1 : 1);
  return CliffordUnit(a.N(), a.mask() ^ b.mask(), sign);
}

bool commutes(const CliffordUnit& a, const CliffordUnit& b) {
  return multiply(a, b) == multiply(b, a);
}

CliffordUnit square(const CliffordUnit& a) {
  const std::uint64_t k = std::popcount(a.mask());
  return CliffordUnit::scalar(a.N(), (k * (k + 1) / 2) % 2 ? -1 : 1);
}

CliffordUnit inverse(const CliffordUnit& a) {
  // a^2 is +-1, so a^-1 = a^2 * a.
  return multiply(square(a), a);
}

std::vector<int> vector_image(const CliffordUnit& a) { return a.indices(); }

CliffordTuple multiply(const CliffordTuple& a, const CliffordTuple& b) {
  require_same_length(a, b);
  CliffordTuple out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(multiply(a[i], b[i]));
  return out;
}

CliffordTuple square(const CliffordTuple& a) {
  CliffordTuple out;
  out.reserve(a.size());
  for (const auto& u : a) out.push_back(square(u));
  return out;
}

CliffordTuple identity_tuple(std::span<const int> dims) {
  CliffordTuple out;
  for (int N : dims) out.push_back(CliffordUnit::scalar(N, 1));
  return out;
}

CliffordTuple scalar_tuple(std::span<const int> dims, const gf2::BitVec& signs) {
  if (signs.dim() != static_cast<int>(dims.size())) {
    throw Error(ErrorCode::DimensionMismatch, "sign pattern length mismatch");
  }
  CliffordTuple out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out.push_back(CliffordUnit::scalar(dims[i], signs.test(static_cast<int>(i)) ? -1 : 1));
  }
  return out;
}

gf2::BitVec scalar_signs(const CliffordTuple& t) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t[i].is_scalar()) {
      throw Error(ErrorCode::InvalidArgument, to_string(t) + " is not scalar");
    }
    if (t[i].sign() < 0) bits |= std::uint64_t{1} << i;
  }
  return gf2::BitVec(static_cast<int>(t.size()), bits);
}

gf2::BitVec commutator_signs(const CliffordTuple& a, const CliffordTuple& b) {
  require_same_length(a, b);
  CliffordTuple inv_a, inv_b;
  for (const auto& u : a) inv_a.push_back(inverse(u));
  for (const auto& u : b) inv_b.push_back(inverse(u));
  return scalar_signs(multiply(multiply(multiply(a, b), inv_a), inv_b));
}

std::string to_string(const CliffordTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ", ";
    s += t[i].to_string();
  }
  return s + ")";
}

std::vector<CliffordTuple> closure(std::span<const CliffordTuple> generators,
                                   std::span<const int> dims,
                                   std::uint64_t cap) {
  for (const auto& g : generators) {
    if (g.size() != dims.size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "generator " + to_string(g) + " has " +
                      std::to_string(g.size()) + " components, expected " +
                      std::to_string(dims.size()));
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (g[i].N() != dims[i]) {
        throw Error(ErrorCode::DimensionMismatch,
                    "generator " + to_string(g) + ": component " +
                        std::to_string(i + 1) + " is not in Delta(" +
                        std::to_string(dims[i]) + ")");
      }
    }
  }
  std::vector<CliffordTuple> elements{identity_tuple(dims)};
  std::unordered_set<TupleKey, TupleKeyHash> seen{key_of(elements.front())};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      CliffordTuple next = multiply(elements[head], g);
      if (seen.insert(key_of(next)).second) {
        if (elements.size() >= cap) {
          throw Error(ErrorCode::EnumerationTooLarge,
                      "subgroup closure exceeds " + std::to_string(cap) +
                          " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

QuotientRank quotient_rank(std::span<const CliffordTuple> h_prime,
                           const gf2::Subspace& mu) {
  const int m = mu.ambient_dim();

  // Commutators only see the index masks and are bilinear in them, so a
  // basis of the mask tuples is enough for the abelian test.
  WideXorBasis image_basis;
  std::vector<gf2::BitVec> central;  // scalar elements lying in mu
  for (const auto& x : h_prime) {
    if (static_cast<int>(x.size()) != m) {
      throw Error(ErrorCode::DimensionMismatch, "tuple length vs mu ambient");
    }
    const TupleKey k = key_of(x);
    image_basis.insert(k.masks);
    if (std::all_of(k.masks.begin(), k.masks.end(),
                    [](std::uint64_t v) { return v == 0; })) {
      gf2::BitVec s(m, k.signs);
      if (mu.contains(s)) central.push_back(s);
    }
  }
  const auto& rows = image_basis.rows();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      const gf2::BitVec c = mask_commutator(rows[a], rows[b]);
      if (!mu.contains(c)) {
        throw Error(ErrorCode::NonAbelianQuotient,
                    "NonAbelianQuotient: commutator with signs " +
                        c.to_string() + " is not in mu");
      }
    }
  }

  const gf2::Subspace kernel = gf2::rref(m, central);
  auto coset = [&](const CliffordTuple& x) {
    TupleKey k = key_of(x);
    k.signs = kernel.reduce(gf2::BitVec(m, k.signs)).bits();
    return k;
  };
  std::unordered_set<TupleKey, TupleKeyHash> cosets, squares;
  for (const auto& x : h_prime) {
    cosets.insert(coset(x));
    squares.insert(coset(square(x)));
  }
  QuotientRank out;
  out.order = cosets.size();
  const std::uint64_t ratio = out.order / squares.size();
  if (ratio * squares.size() != out.order || !std::has_single_bit(ratio)) {
    throw Error(ErrorCode::InvalidArgument,
                "input is not a subgroup: |H| / |H^2| = " +
                    std::to_string(out.order) + " / " +
                    std::to_string(squares.size()));
  }
  out.rank = std::countr_zero(ratio);
  return out;
}

bool centralizer_finite(std::span<const CliffordTuple> tuples,
                        std::span<const int> dims) {
  for (std::size_t f = 0; f < dims.size(); ++f) {
    const int N = dims[f];
    // block[j] labels the partition block of index j + 1.
    std::vector<int> block(N, 0);
    for (const auto& t : tuples) {
      if (t.size() != dims.size()) {
        throw Error(ErrorCode::DimensionMismatch, "tuple length mismatch");
      }
      const std::uint64_t image = t[f].mask();
      std::vector<std::pair<int, int>> signature(N);
      for (int j = 0; j < N; ++j) {
        signature[j] = {block[j], static_cast<int>((image >> j) & 1u)};
      }
      auto sorted = signature;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int j = 0; j < N; ++j) {
        block[j] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), signature[j]) -
            sorted.begin());
      }
    }
    auto distinct = block;
    std::sort(distinct.begin(), distinct.end());
    if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) {
      return false;
    }
  }
  return true;
}

std::vector<int> factor_dims(const GroupSpecB& spec) {
  std::vector<int> dims;
  for (Rank n : spec.n) {
    if (n > (kMaxN - 1) / 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "certificates support Spin(N) with N <= " +
                      std::to_string(kMaxN));
    }
    dims.push_back(static_cast<int>(2 * n + 1));
  }
  return dims;
}

CertReport verify_certificate(const Certificate& cert, std::uint64_t cap) {
  validate(cert.spec);
  CertReport report;
  report.notes = cert.notes;
  const auto dims = factor_dims(cert.spec);
  const gf2::Subspace mu = mu_subspace(cert.spec);

  for (std::size_t g = 0; g < cert.generators.size(); ++g) {
    const auto& t = cert.generators[g];
    bool ok = t.size() == dims.size();
    for (std::size_t i = 0; ok && i < t.size(); ++i) ok = t[i].N() == dims[i];
    if (!ok) {
      report.failure_reason = "ShapeMismatch: generator " + std::to_string(g + 1) +
                              " " + to_string(t) +
                              " does not match the factor ranks";
      return report;
    }
  }

  for (std::size_t a = 0; a < cert.generators.size(); ++a) {
    for (std::size_t b = a + 1; b < cert.generators.size(); ++b) {
      const gf2::BitVec c =
          commutator_signs(cert.generators[a], cert.generators[b]);
      if (!mu.contains(c)) {
        report.failure_reason =
            "NonAbelianQuotient: commutator of generators " +
            std::to_string(a + 1) + " and " + std::to_string(b + 1) +
            " has signs " + c.to_string() + " outside mu";
        return report;
      }
    }
  }
  report.abelian_in_quotient = true;

  std::vector<CliffordTuple> elements;
  try {
    elements = closure(cert.generators, dims, cap);
  } catch (const Error& e) {
    report.failure_reason = std::string("EnumerationTooLarge: ") + e.what();
    return report;
  }
  report.closure_order = elements.size();
  const QuotientRank qr = quotient_rank(elements, mu);
  report.subgroup_order = qr.order;
  report.rank = qr.rank;

  report.centralizer_finite = centralizer_finite(cert.generators, dims);
  if (!report.centralizer_finite) {
    report.failure_reason =
        "CentralizerNotCertified: some factor keeps a block of size > 1";
    return report;
  }
  report.lower_bound = report.rank;
  return report;
}

}  // namespace edcalc::extraspecial
