#include <bit>
#include <charconv>
#include <optional>
#include <sstream>

#include "edcalc/error.hpp"
#include "edcalc/extraspecial.hpp"

namespace edcalc::extraspecial {

namespace {

using Indices = std::vector<int>;

CliffordUnit c(int N, const Indices& idx, int sign = 1) {
  return CliffordUnit::from_indices(N, idx, sign);
}

// {1, 3, ..., 4*ceil(n/2) - 1}
Indices odd_run(Rank n) {
  Indices out;
  const Rank top = 4 * ((n + 1) / 2) - 1;
  for (Rank i = 1; i <= top; i += 2) out.push_back(static_cast<int>(i));
  return out;
}

gf2::BitVec diagonal_generator(int m) { return gf2::BitVec::ones(m); }

std::vector<gf2::BitVec> maximal_generators(int m) {
  // (-1,-1,1,...), (1,-1,-1,1,...), ... span the kernel of the product map.
  std::vector<gf2::BitVec> out;
  for (int i = 0; i + 1 < m; ++i) {
    out.emplace_back(m, (std::uint64_t{3}) << i);
  }
  return out;
}

Certificate from_table(std::vector<Rank> n,
                       const std::vector<std::vector<std::pair<int, Indices>>>& rows) {
  Certificate cert;
  const int m = static_cast<int>(n.size());
  cert.spec = GroupSpecB{std::move(n), maximal_generators(m)};
  const auto dims = factor_dims(cert.spec);
  for (const auto& row : rows) {
    CliffordTuple t;
    for (std::size_t i = 0; i < row.size(); ++i) {
      t.push_back(c(dims[i], row[i].second, row[i].first));
    }
    cert.generators.push_back(std::move(t));
  }
  return cert;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

// When the listed generators do not verify, search for the nearest
// certificate that differs in a single component and reaches `target`.
void repair_single_component(Certificate& cert, int target) {
  const CertReport listed = verify_certificate(cert);
  if (listed.lower_bound && *listed.lower_bound == target) return;
  cert.notes.push_back("listed generators fail: " +
                       listed.failure_reason.value_or(
                           "rank " + std::to_string(listed.rank)));
  const auto dims = factor_dims(cert.spec);
  std::optional<Certificate> best;
  int best_distance = 0;
  std::string best_desc;
  for (std::size_t g = 0; g < cert.generators.size(); ++g) {
    for (std::size_t i = 0; i < dims.size(); ++i) {
      const CliffordUnit& old = cert.generators[g][i];
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dims[i]); ++mask) {
        if (std::popcount(mask) % 2 != 0 || mask == old.mask()) continue;
        const int distance = std::popcount(mask ^ old.mask());
        if (best && distance >= best_distance) continue;
        Certificate trial = cert;
        trial.generators[g][i] = CliffordUnit(dims[i], mask, old.sign());
        const CertReport r = verify_certificate(trial);
        if (r.lower_bound && *r.lower_bound == target) {
          best_desc = "generator " + std::to_string(g + 1) + " component " +
                      std::to_string(i + 1) + ": " + old.to_string() + " -> " +
                      trial.generators[g][i].to_string();
          best = std::move(trial);
          best_distance = distance;
        }
      }
    }
  }
  if (!best) {
    cert.notes.push_back("no single-component repair certifies rank " +
                         std::to_string(target));
    return;
  }
  best->notes = cert.notes;
  best->notes.push_back("nearest single-component repair used (" + best_desc +
                        ")");
  cert = std::move(*best);
}

Rank parse_rank(const std::string& s) {
  Rank v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::Parse, "expected an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

Certificate builtin_diagonal(Rank n, int m) {
  if (n < 1 || m < 2 || m > gf2::kMaxDim || 2 * n + 1 > kMaxN) {
    throw Error(ErrorCode::InvalidArgument,
                "diagonal certificate needs n >= 1, 2 <= m <= 64 and 2n+1 <= " +
                    std::to_string(kMaxN));
  }
  Certificate cert;
  cert.spec = GroupSpecB{std::vector<Rank>(m, n), {diagonal_generator(m)}};
  const int N = static_cast<int>(2 * n + 1);
  for (int i = 1; i <= 2 * n; ++i) {
    cert.generators.emplace_back(m, c(N, {i, i + 1}));
  }
  for (int l = 0; l + 1 < m; ++l) {
    CliffordTuple h(m, CliffordUnit::scalar(N, 1));
    h[l] = CliffordUnit::scalar(N, -1);
    cert.generators.push_back(std::move(h));
  }
  return cert;
}

Certificate builtin_pair(Rank n1, Rank n2) {
  if (!(n1 >= 1 && n1 < n2 && is_small({n1, n2}))) {
    throw Error(ErrorCode::InvalidArgument,
                "pair certificate needs n1 < n2 with [n1,n2] one of [1,2], "
                "[1,3], [1,4], [1,5], [2,3]");
  }
  Certificate cert;
  cert.spec = GroupSpecB{{n1, n2}, {diagonal_generator(2)}};
  const int N1 = static_cast<int>(2 * n1 + 1);
  const int N2 = static_cast<int>(2 * n2 + 1);
  const int l = static_cast<int>(n2 + 1);

  std::vector<Indices> first(l + 1), second(l + 1);
  first[1] = odd_run(n1);
  second[1] = odd_run(n2);
  for (int i = 2; i <= l; ++i) second[i] = {2 * i - 3, 2 * i - 2};
  for (int k = 2; k <= n2 - n1 + 2; ++k) first[k] = {1, 2};
  for (int i = static_cast<int>(n2 - n1 + 3); i <= n2 + 1; ++i) {
    const int j = static_cast<int>(i + n1 - n2);
    first[i] = {2 * j - 3, 2 * j - 2};
  }
  for (int i = 1; i <= l; ++i) {
    cert.generators.push_back({c(N1, first[i]), c(N2, second[i])});
  }

  const gf2::Subspace mu = mu_subspace(cert.spec);
  const gf2::BitVec h1_squared = scalar_signs(square(cert.generators.front()));
  const gf2::BitVec second_flip(2, 0b10);
  if (!mu.contains(h1_squared ^ second_flip)) {
    cert.generators.push_back(
        {CliffordUnit::scalar(N1, 1), CliffordUnit::scalar(N2, -1)});
    cert.notes.push_back("h1^2 is not (1,-1) modulo mu; added (1,-1)");
  }

  if (n1 > 1) {
    // The listed extra generator (c(4,4), c(5,7)) repeats an index. Try the
    // readings that change one of the two 4s and keep the first that
    // certifies one more than the base rank.
    cert.notes.push_back(
        "listed extra generator (c(4,4), c(5,7)) repeats index 4 and is not "
        "an element of Delta(5)");
    const std::vector<Indices> readings = {{4, 5}, {3, 4}, {2, 4}, {1, 4}};
    bool chosen = false;
    for (const auto& reading : readings) {
      Certificate trial = cert;
      trial.notes.clear();
      trial.generators.push_back({c(N1, reading), c(N2, {5, 7})});
      const CertReport r = verify_certificate(trial);
      const std::string name = "(" + trial.generators.back()[0].to_string() +
                               ", c(5,7))";
      if (r.lower_bound && *r.lower_bound == l + 1) {
        if (!chosen) {
          cert.generators.push_back(trial.generators.back());
          cert.notes.push_back("reading " + name + " certifies rank " +
                               std::to_string(*r.lower_bound) + "; used");
          chosen = true;
        } else {
          cert.notes.push_back("reading " + name + " also certifies rank " +
                               std::to_string(*r.lower_bound));
        }
      } else {
        cert.notes.push_back(
            "reading " + name + " fails: " +
            r.failure_reason.value_or("rank " + std::to_string(r.rank)));
      }
    }
    if (!chosen) {
      cert.notes.push_back("no reading verified; extra generator omitted");
    }
  }
  return cert;
}

Certificate builtin_small3(std::span<const Rank> variant) {
  const std::vector<Rank> v(variant.begin(), variant.end());
  if (v == std::vector<Rank>{1, 1, 1}) {
    return from_table({1, 1, 1}, {
        {{1, {1, 3}}, {1, {1, 3}}, {1, {1, 3}}},
        {{1, {1, 2}}, {1, {1, 2}}, {1, {}}},
        {{1, {1, 2}}, {1, {}}, {1, {1, 2}}},
    });
  }
  if (v == std::vector<Rank>{1, 1, 2}) {
    return from_table({1, 1, 2}, {
        {{1, {1, 2}}, {1, {1, 2}}, {1, {2, 4}}},
        {{1, {1, 3}}, {1, {}}, {1, {1, 2}}},
        {{1, {}}, {1, {1, 3}}, {1, {3, 4}}},
        {{1, {1, 3}}, {1, {1, 3}}, {1, {}}},
    });
  }
  if (v == std::vector<Rank>{1, 1, 3}) {
    Certificate cert = from_table({1, 1, 3}, {
        {{1, {1, 2}}, {1, {1, 3}}, {1, {1, 2}}},
        {{1, {1, 2}}, {1, {1, 2}}, {1, {1, 3, 5, 7}}},
        {{1, {}}, {1, {1, 3}}, {1, {3, 4}}},
        {{1, {1, 2}}, {1, {1, 3}}, {1, {1, 2, 5, 6}}},
        {{1, {1, 3}}, {1, {}}, {1, {2, 5}}},
    });
    repair_single_component(cert, 5);
    return cert;
  }
  throw Error(ErrorCode::InvalidArgument,
              "small3 variant must be [1,1,1], [1,1,2] or [1,1,3]");
}

Certificate builtin_small4() {
  return from_table({1, 1, 1, 1}, {
      {{1, {1, 2}}, {1, {1, 2}}, {1, {}}, {1, {}}},
      {{1, {1, 2}}, {1, {}}, {1, {1, 2}}, {1, {}}},
      {{1, {1, 2}}, {1, {}}, {1, {}}, {1, {1, 2}}},
      {{-1, {}}, {1, {}}, {1, {}}, {1, {}}},
      {{1, {1, 3}}, {1, {1, 3}}, {1, {1, 3}}, {1, {1, 3}}},
  });
}

Certificate builtin_certificate(const std::string& name) {
  const auto parts = split(name, ':');
  if (parts.size() < 2 || parts[0] != "builtin") {
    throw Error(ErrorCode::Parse, "builtin certificate names start with 'builtin:'");
  }
  const std::string& kind = parts[1];
  if (kind == "diagonal" && parts.size() == 4) {
    return builtin_diagonal(parse_rank(parts[2]),
                            static_cast<int>(parse_rank(parts[3])));
  }
  if (kind == "pair" && parts.size() == 4) {
    return builtin_pair(parse_rank(parts[2]), parse_rank(parts[3]));
  }
  if (kind == "small3" && (parts.size() == 3 || parts.size() == 5)) {
    std::vector<Rank> v;
    if (parts.size() == 3) {
      v = {1, 1, parse_rank(parts[2])};
    } else {
      for (std::size_t i = 2; i < 5; ++i) v.push_back(parse_rank(parts[i]));
    }
    return builtin_small3(v);
  }
  if (kind == "small4" && parts.size() == 2) return builtin_small4();
  throw Error(ErrorCode::Parse,
              "unknown builtin '" + name +
                  "'; expected builtin:diagonal:N:M, builtin:pair:A:B, "
                  "builtin:small3:1:1:K or builtin:small4");
}

}  // namespace edcalc::extraspecial
