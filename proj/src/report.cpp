#include "edcalc/report.hpp"

#include <sstream>

#include "edcalc/error.hpp"

namespace edcalc::report {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) schema_error(where + ": expected an integer");
  return v.get<std::int64_t>();
}

std::vector<gf2::BitVec> parse_vectors(const json& list, std::size_t m,
                                       const std::string& field) {
  if (!list.is_array()) schema_error(field + ": expected a list of vectors");
  std::vector<gf2::BitVec> out;
  for (std::size_t g = 0; g < list.size(); ++g) {
    const json& row = list[g];
    const std::string where = field + "[" + std::to_string(g) + "]";
    if (!row.is_array()) schema_error(where + ": expected a 0/1 list");
    if (row.size() != m) {
      schema_error(where + ": length " + std::to_string(row.size()) +
                   " != number of factors " + std::to_string(m));
    }
    if (m > static_cast<std::size_t>(gf2::kMaxDim)) {
      schema_error(where + ": more than 64 coordinates");
    }
    std::vector<int> coords;
    for (const auto& x : row) {
      const auto v = as_integer(x, where);
      if (v != 0 && v != 1) schema_error(where + ": entries must be 0 or 1");
      coords.push_back(static_cast<int>(v));
    }
    out.push_back(gf2::BitVec::from_coords(coords));
  }
  return out;
}

}  // namespace

ParsedSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("spec: expected a JSON object");
  if (!doc.contains("type") || doc["type"] != "B") {
    schema_error("spec: field \"type\" must be \"B\"");
  }
  if (!doc.contains("n") || !doc["n"].is_array()) {
    schema_error("spec: field \"n\" must be a list of integers");
  }
  std::vector<Rank> n;
  for (const auto& x : doc["n"]) n.push_back(as_integer(x, "n"));
  const bool has_mu = doc.contains("mu_generators");
  const bool has_r = doc.contains("r_generators");
  if (has_mu && has_r) {
    schema_error("spec: mu_generators and r_generators are mutually exclusive");
  }
  ParsedSpec out;
  if (has_r) {
    const auto r = parse_vectors(doc["r_generators"], n.size(), "r_generators");
    if (n.size() > static_cast<std::size_t>(gf2::kMaxDim)) {
      schema_error("spec: at most 64 factors");
    }
    out.spec = spec_from_dual(std::move(n), r);
    out.input = SpecInput::RGenerators;
  } else {
    std::vector<gf2::BitVec> mu;
    if (has_mu) {
      mu = parse_vectors(doc["mu_generators"], n.size(), "mu_generators");
      out.input = SpecInput::MuGenerators;
    }
    out.spec = GroupSpecB{std::move(n), std::move(mu)};
  }
  return out;
}

ParsedSpec parse_spec(const std::string& text) {
  return spec_from_json(parse_json(text));
}

json spec_to_json(const GroupSpecB& spec) {
  json mu = json::array();
  for (const auto& g : spec.mu_gens) mu.push_back(g.coords());
  return json{{"type", "B"}, {"n", spec.n}, {"mu_generators", mu}};
}

json dual_spec_to_json(std::span<const Rank> n, const gf2::Subspace& R) {
  json r = json::array();
  for (const auto& g : R.basis()) r.push_back(g.coords());
  return json{{"type", "B"},
              {"n", std::vector<Rank>(n.begin(), n.end())},
              {"r_generators", r}};
}

ReportDocument make_report(const EdResult& result) {
  ReportDocument doc;
  doc.status = result.status == EdStatus::Exact ? "exact" : "bounds";
  doc.lower = result.lower.str();
  if (result.upper) doc.upper = result.upper->str();
  if (result.status == EdStatus::Exact) doc.value = result.lower.str();
  for (const auto& r : result.minimal_basis) doc.minimal_basis.push_back(r.coords());
  doc.basis_total_weight = result.basis_total_weight.str();
  doc.group_dim = result.group_dim.str();
  doc.rule = result.decisive_citation;
  for (const auto& t : result.trace) doc.trace.push_back({t.rule, t.citation, t.detail});
  doc.warnings = result.warnings;
  doc.cap_exceeded = result.cap_exceeded;
  return doc;
}

json to_json(const ReportDocument& doc) {
  json trace = json::array();
  for (const auto& t : doc.trace) {
    trace.push_back({{"rule", t.rule}, {"citation", t.citation}, {"detail", t.detail}});
  }
  json j = {{"status", doc.status},
            {"lower", doc.lower},
            {"upper", doc.upper ? json(*doc.upper) : json(nullptr)},
            {"value", doc.value ? json(*doc.value) : json(nullptr)},
            {"minimal_basis", doc.minimal_basis},
            {"basis_total_weight", doc.basis_total_weight},
            {"group_dim", doc.group_dim},
            {"rule", doc.rule},
            {"trace", trace},
            {"warnings", doc.warnings},
            {"cap_exceeded", doc.cap_exceeded}};
  return j;
}

ReportDocument report_from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.status = j.at("status").get<std::string>();
    doc.lower = j.at("lower").get<std::string>();
    if (!j.at("upper").is_null()) doc.upper = j["upper"].get<std::string>();
    if (!j.at("value").is_null()) doc.value = j["value"].get<std::string>();
    doc.minimal_basis = j.at("minimal_basis").get<std::vector<std::vector<int>>>();
    doc.basis_total_weight = j.at("basis_total_weight").get<std::string>();
    doc.group_dim = j.at("group_dim").get<std::string>();
    doc.rule = j.at("rule").get<std::string>();
    for (const auto& t : j.at("trace")) {
      doc.trace.push_back({t.at("rule").get<std::string>(),
                           t.at("citation").get<std::string>(),
                           t.at("detail").get<std::string>()});
    }
    doc.warnings = j.at("warnings").get<std::vector<std::string>>();
    doc.cap_exceeded = j.at("cap_exceeded").get<bool>();
    return doc;
  } catch (const json::exception& e) {
    schema_error(std::string("report: ") + e.what());
  }
}

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  if (doc.status == "exact") {
    os << "status: exact, ed = " << doc.lower << ", rule: " << doc.rule << '\n';
  } else {
    os << "status: bounds, " << doc.lower << " <= ed <= "
       << doc.upper.value_or("?") << ", rule: " << doc.rule << '\n';
  }
  os << "lower: " << doc.lower << '\n';
  os << "upper: " << doc.upper.value_or("none") << '\n';
  os << "group dim: " << doc.group_dim << '\n';
  os << "minimal basis: {";
  for (std::size_t i = 0; i < doc.minimal_basis.size(); ++i) {
    if (i) os << ", ";
    os << '(';
    for (std::size_t j = 0; j < doc.minimal_basis[i].size(); ++j) {
      if (j) os << ',';
      os << doc.minimal_basis[i][j];
    }
    os << ')';
  }
  os << "}\n";
  os << "basis total weight: " << doc.basis_total_weight << '\n';
  os << "trace:\n";
  for (const auto& t : doc.trace) {
    os << "  [" << t.citation << "] " << t.rule << ": " << t.detail << '\n';
  }
  for (const auto& w : doc.warnings) os << "warning: " << w << '\n';
  return os.str();
}

extraspecial::Certificate certificate_from_json(const json& doc) {
  using extraspecial::CliffordUnit;
  if (!doc.is_object() || !doc.contains("spec") || !doc.contains("generators")) {
    schema_error("certificate: expected an object with \"spec\" and \"generators\"");
  }
  extraspecial::Certificate cert;
  cert.spec = spec_from_json(doc["spec"]).spec;
  const json& gens = doc["generators"];
  if (!gens.is_array()) schema_error("certificate: generators must be a list");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const std::string where = "generators[" + std::to_string(g) + "]";
    if (!gens[g].is_array() || gens[g].size() != cert.spec.n.size()) {
      schema_error(where + ": expected one entry per factor");
    }
    extraspecial::CliffordTuple t;
    for (std::size_t i = 0; i < gens[g].size(); ++i) {
      const json& e = gens[g][i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (!e.is_object() || !e.contains("sign") || !e.contains("indices") ||
          !e["indices"].is_array()) {
        schema_error(at + ": expected {\"sign\": +1|-1, \"indices\": [...]}");
      }
      const auto sign = as_integer(e["sign"], at + ".sign");
      if (sign != 1 && sign != -1) schema_error(at + ".sign must be +1 or -1");
      std::vector<int> idx;
      for (const auto& x : e["indices"]) {
        idx.push_back(static_cast<int>(as_integer(x, at + ".indices")));
      }
      if (!std::is_sorted(idx.begin(), idx.end()) || idx.size() % 2 != 0) {
        schema_error(at + ".indices must be a sorted list of even length");
      }
      const Rank n = cert.spec.n[i];
      if (n < 1 || 2 * n + 1 > extraspecial::kMaxN) {
        schema_error(at + ": factor rank unsupported for certificates");
      }
      try {
        t.push_back(CliffordUnit::from_indices(static_cast<int>(2 * n + 1), idx,
                                               static_cast<int>(sign)));
      } catch (const Error& err) {
        schema_error(at + ": " + err.what());
      }
    }
    cert.generators.push_back(std::move(t));
  }
  return cert;
}

extraspecial::Certificate parse_certificate(const std::string& text) {
  if (text.rfind("builtin:", 0) == 0) {
    return extraspecial::builtin_certificate(text);
  }
  return certificate_from_json(parse_json(text));
}

json certificate_to_json(const extraspecial::Certificate& cert) {
  json gens = json::array();
  for (const auto& t : cert.generators) {
    json row = json::array();
    for (const auto& u : t) row.push_back({{"sign", u.sign()}, {"indices", u.indices()}});
    gens.push_back(row);
  }
  return json{{"spec", spec_to_json(cert.spec)}, {"generators", gens}};
}

json cert_report_to_json(const extraspecial::CertReport& r) {
  return json{{"abelian_in_quotient", r.abelian_in_quotient},
              {"closure_order", r.closure_order},
              {"subgroup_order", r.subgroup_order},
              {"rank", r.rank},
              {"centralizer_finite", r.centralizer_finite},
              {"lower_bound", r.lower_bound ? json(*r.lower_bound) : json(nullptr)},
              {"failure_reason",
               r.failure_reason ? json(*r.failure_reason) : json(nullptr)},
              {"notes", r.notes}};
}

std::string render_cert_text(const extraspecial::CertReport& r) {
  std::ostringstream os;
  os << "abelian in quotient: " << (r.abelian_in_quotient ? "yes" : "no") << '\n';
  if (r.abelian_in_quotient) {
    os << "closure order: " << r.closure_order << '\n';
    os << "subgroup order: " << r.subgroup_order << '\n';
    os << "rank: " << r.rank << '\n';
    os << "centralizer finite: " << (r.centralizer_finite ? "yes" : "not certified")
       << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.lower_bound) {
    os << "lower bound " << *r.lower_bound << '\n';
  } else {
    os << "certificate invalid: " << r.failure_reason.value_or("unknown") << '\n';
  }
  return os.str();
}

std::string table_text() {
  std::ostringstream os;
  os << "Small groups (no exactness from the minimal-basis rule):\n";
  for (Rank a = 1; a <= 6; ++a) os << "  [" << a << "] small (3.1)\n";
  for (Rank a = 1; a <= 5; ++a) os << "  [1," << a << "] small (3.2)\n";
  os << "  [2,2] small (3.2)\n";
  os << "  [2,3] small (3.2)\n";
  os << "  [1,1,1] small (3.3)\n";
  os << "  [1,1,2] small (3.3)\n";
  os << "  [1,1,3] small (3.3)\n";
  os << "  [1,1,1,1] small (3.4)\n";
  os << "\nKnown values:\n";
  for (const auto& row : known_case_ledger()) {
    os << "  " << row.description << " (" << row.citation << ")  " << row.group
       << '\n';
  }
  return os.str();
}

}  // namespace edcalc::report
