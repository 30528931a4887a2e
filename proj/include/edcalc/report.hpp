#pragma once

// JSON and text documents: spec input, compute report, certificates.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "edcalc/edcore.hpp"
#include "edcalc/extraspecial.hpp"

namespace edcalc::report {

enum class SpecInput { Trivial, MuGenerators, RGenerators };

struct ParsedSpec {
  GroupSpecB spec;
  SpecInput input = SpecInput::Trivial;
};

// Schema errors throw Error(Parse); semantic checks are left to validate().
ParsedSpec parse_spec(const std::string& text);
ParsedSpec spec_from_json(const nlohmann::json& doc);
nlohmann::json spec_to_json(const GroupSpecB& spec);
// Spec document that lists R directly.
nlohmann::json dual_spec_to_json(std::span<const Rank> n,
                                 const gf2::Subspace& R);

struct TraceItem {
  std::string rule;
  std::string citation;
  std::string detail;

  friend bool operator==(const TraceItem&, const TraceItem&) = default;
};

// Mirrors EdResult with every integer as a decimal string.
struct ReportDocument {
  std::string status;  // "exact" | "bounds"
  std::string lower;
  std::optional<std::string> upper;
  std::optional<std::string> value;
  std::vector<std::vector<int>> minimal_basis;
  std::string basis_total_weight;
  std::string group_dim;
  std::string rule;
  std::vector<TraceItem> trace;
  std::vector<std::string> warnings;
  bool cap_exceeded = false;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_report(const EdResult& result);
nlohmann::json to_json(const ReportDocument& doc);
ReportDocument report_from_json(const nlohmann::json& j);
std::string render_text(const ReportDocument& doc);

extraspecial::Certificate parse_certificate(const std::string& text);
extraspecial::Certificate certificate_from_json(const nlohmann::json& doc);
nlohmann::json certificate_to_json(const extraspecial::Certificate& cert);

nlohmann::json cert_report_to_json(const extraspecial::CertReport& report);
std::string render_cert_text(const extraspecial::CertReport& report);

// Small-group lists and the known-value ledger, one row per line.
std::string table_text();

}  // namespace edcalc::report
