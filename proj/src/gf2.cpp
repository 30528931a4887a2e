#include "edcalc/gf2.hpp"

#include <bit>
#include <limits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "edcalc/error.hpp"

namespace edcalc::gf2 {

namespace {

std::uint64_t mask_for(int m) {
  return m >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
}

void require_same_dim(int a, int b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " +
                    std::to_string(b));
  }
}

}  // namespace

BitVec::BitVec(int m, std::uint64_t bits) : m_(m), bits_(bits) {
  if (m < 0 || m > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch,
                "ambient dimension " + std::to_string(m) + " outside [0, 64]");
  }
  if ((bits & ~mask_for(m)) != 0) {
    throw Error(ErrorCode::DimensionMismatch,
                "bit set beyond ambient dimension " + std::to_string(m));
  }
}

BitVec BitVec::unit(int m, int i) {
  if (i < 0 || i >= m) {
    throw Error(ErrorCode::InvalidArgument, "unit index out of range");
  }
  return BitVec(m, std::uint64_t{1} << i);
}

BitVec BitVec::ones(int m) { return BitVec(m, mask_for(m)); }

BitVec BitVec::from_coords(std::span<const int> coords) {
  const int m = static_cast<int>(coords.size());
  if (m > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "vector longer than 64");
  }
  std::uint64_t bits = 0;
  for (int i = 0; i < m; ++i) {
    if (coords[i] == 1) {
      bits |= std::uint64_t{1} << i;
    } else if (coords[i] != 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "vector entries must be 0 or 1, got " +
                      std::to_string(coords[i]));
    }
  }
  return BitVec(m, bits);
}

int BitVec::popcount() const noexcept { return std::popcount(bits_); }

int BitVec::lowest() const noexcept {
  return bits_ == 0 ? -1 : std::countr_zero(bits_);
}

std::vector<int> BitVec::support() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::vector<int> BitVec::coords() const {
  std::vector<int> out(m_);
  for (int i = 0; i < m_; ++i) out[i] = test(i) ? 1 : 0;
  return out;
}

std::string BitVec::to_string() const {
  std::string s(m_, '0');
  for (int i = 0; i < m_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  require_same_dim(m_, other.m_);
  bits_ ^= other.bits_;
  return *this;
}

bool lex_less(const BitVec& a, const BitVec& b) noexcept {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return !a.test(std::countr_zero(diff));
}

XorBasis::XorBasis(int m) : m_(m), rows_(m, 0) {}

std::uint64_t XorBasis::reduce(std::uint64_t v) const noexcept {
  while (v != 0) {
    const int b = std::countr_zero(v);
    if (rows_[b] == 0) return v;
    v ^= rows_[b];
  }
  return 0;
}

bool XorBasis::insert(const BitVec& v) {
  require_same_dim(m_, v.dim());
  const std::uint64_t r = reduce(v.bits());
  if (r == 0) return false;
  rows_[std::countr_zero(r)] = r;
  ++rank_;
  return true;
}

bool XorBasis::spans(const BitVec& v) const {
  require_same_dim(m_, v.dim());
  return reduce(v.bits()) == 0;
}

int rank(int m, std::span<const BitVec> vectors) {
  XorBasis xb(m);
  for (const auto& v : vectors) xb.insert(v);
  return xb.rank();
}

Subspace::Subspace(int m) : m_(m) {
  if (m < 0 || m > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch,
                "ambient dimension " + std::to_string(m) + " outside [0, 64]");
  }
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  out.reserve(basis_.size());
  for (const auto& row : basis_) out.push_back(row.lowest());
  return out;
}

BitVec Subspace::reduce(const BitVec& v) const {
  require_same_dim(m_, v.dim());
  std::uint64_t bits = v.bits();
  for (const auto& row : basis_) {
    if ((bits >> row.lowest()) & 1u) bits ^= row.bits();
  }
  return BitVec(m_, bits);
}

bool Subspace::contains(const BitVec& v) const { return reduce(v).is_zero(); }

Subspace rref(int m, std::span<const BitVec> vectors) {
  Subspace out(m);
  std::vector<std::uint64_t> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    require_same_dim(m, v.dim());
    if (!v.is_zero()) rows.push_back(v.bits());
  }
  std::size_t next = 0;
  for (int col = 0; col < m && next < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t found = next;
    while (found < rows.size() && !(rows[found] & bit)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit)) rows[r] ^= rows[next];
    }
    ++next;
  }
  rows.resize(next);
  out.basis_.reserve(next);
  for (auto bits : rows) out.basis_.emplace_back(m, bits);
  return out;
}

Subspace full_space(int m) {
  std::vector<BitVec> units;
  for (int i = 0; i < m; ++i) units.push_back(BitVec::unit(m, i));
  return rref(m, units);
}

Subspace annihilator(const Subspace& s) {
  const int m = s.ambient_dim();
  std::uint64_t pivot_mask = 0;
  for (int p : s.pivots()) pivot_mask |= std::uint64_t{1} << p;

  std::vector<BitVec> gens;
  for (int f = 0; f < m; ++f) {
    if ((pivot_mask >> f) & 1u) continue;
    std::uint64_t v = std::uint64_t{1} << f;
    for (const auto& row : s.basis()) {
      if (row.test(f)) v |= std::uint64_t{1} << row.lowest();
    }
    gens.emplace_back(m, v);
  }
  return rref(m, gens);
}

std::vector<BitVec> enumerate_elements(const Subspace& s, int max_dim) {
  const int k = s.dim();
  if (k > max_dim) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "subspace of dimension " + std::to_string(k) +
                    " exceeds the enumeration cap of dimension " +
                    std::to_string(max_dim));
  }
  std::vector<BitVec> out;
  if (k == 0) return out;
  const std::uint64_t total = (std::uint64_t{1} << k) - 1;
  out.reserve(total);
  BitVec cur(s.ambient_dim());
  for (std::uint64_t i = 1; i <= total; ++i) {
    cur ^= s.basis()[std::countr_zero(i)];
    out.push_back(cur);
  }
  return out;
}

std::uint64_t basis_count(int k) {
  using boost::multiprecision::cpp_int;
  cpp_int ordered = 1;
  for (int i = 0; i < k; ++i) {
    ordered *= (cpp_int(1) << k) - (cpp_int(1) << i);
  }
  for (int i = 2; i <= k; ++i) ordered /= i;
  if (ordered > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return ordered.convert_to<std::uint64_t>();
}

namespace {

struct BasisWalker {
  const std::vector<BitVec>& elements;
  int k;
  const std::function<bool(std::span<const BitVec>)>& visit;
  std::vector<BitVec> chosen;
  bool stopped = false;

  void walk(std::size_t start, const XorBasis& xb) {
    const int depth = static_cast<int>(chosen.size());
    if (depth == k) {
      if (!visit(chosen)) stopped = true;
      return;
    }
    for (std::size_t i = start; i < elements.size() && !stopped; ++i) {
      if (elements.size() - i < static_cast<std::size_t>(k - depth)) break;
      XorBasis next = xb;
      if (!next.insert(elements[i])) continue;
      chosen.push_back(elements[i]);
      walk(i + 1, next);
      chosen.pop_back();
    }
  }
};

}  // namespace

void for_each_basis(const Subspace& s, std::uint64_t cap,
                    const std::function<bool(std::span<const BitVec>)>& visit) {
  const std::uint64_t count = basis_count(s.dim());
  if (count > cap) {
    throw Error(ErrorCode::EnumerationTooLarge,
                "subspace of dimension " + std::to_string(s.dim()) + " has " +
                    (count == std::numeric_limits<std::uint64_t>::max()
                         ? std::string("more than 2^64")
                         : std::to_string(count)) +
                    " bases, cap is " + std::to_string(cap));
  }
  const auto elements = enumerate_elements(s, kMaxDim);
  BasisWalker walker{elements, s.dim(), visit, {}};
  walker.walk(0, XorBasis(s.ambient_dim()));
}

std::vector<std::vector<BitVec>> enumerate_bases(const Subspace& s,
                                                 std::uint64_t cap) {
  std::vector<std::vector<BitVec>> out;
  for_each_basis(s, cap, [&](std::span<const BitVec> b) {
    out.emplace_back(b.begin(), b.end());
    return true;
  });
  return out;
}

}  // namespace edcalc::gf2
