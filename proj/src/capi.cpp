#include "edcalc/edcalc.h"

#include <bit>
#include <string>

#include "edcalc/error.hpp"
#include "edcalc/oracle.hpp"
#include "edcalc/report.hpp"

struct edcalc_spec {
  edcalc::GroupSpecB spec;
};

struct edcalc_report {
  edcalc::report::ReportDocument doc;
  std::string json;
  std::string text;
};

struct edcalc_oracle {
  edcalc::oracle::Outcome outcome;
};

struct edcalc_cert {
  edcalc::extraspecial::CertReport report;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

edcalc_status status_for(edcalc::ErrorCode code) {
  using edcalc::ErrorCode;
  switch (code) {
    case ErrorCode::Parse:
      return EDCALC_ERR_PARSE;
    case ErrorCode::EmptySpec:
    case ErrorCode::InvalidRank:
    case ErrorCode::NotReduced:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidArgument:
      return EDCALC_ERR_VALIDATION;
    case ErrorCode::EnumerationTooLarge:
      return EDCALC_ERR_CAP;
    case ErrorCode::NonAbelianQuotient:
      return EDCALC_ERR_CERTIFICATE;
    case ErrorCode::NotABasis:
      break;
  }
  return EDCALC_ERR_INTERNAL;
}

template <class F>
edcalc_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const edcalc::Error& e) {
    last_error = std::string(edcalc::error_code_name(e.code())) + ": " + e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return EDCALC_ERR_INTERNAL;
  }
}

edcalc_options resolve(const edcalc_options* opts) {
  edcalc_options o;
  edcalc_options_init(&o);
  if (opts) o = *opts;
  return o;
}

edcalc::EdOptions ed_options(const edcalc_options& o) {
  edcalc::EdOptions e;
  e.basis_cap = o.basis_cap;
  // Enumerating dim R = k touches 2^k elements.
  e.max_enum_dim = o.enum_cap == 0 ? 0 : std::min(62, static_cast<int>(std::bit_width(o.enum_cap)) - 1);
  return e;
}

}  // namespace

extern "C" {

const char* edcalc_version(void) { return "0.1.0"; }

void edcalc_options_init(edcalc_options* opts) {
  if (!opts) return;
  opts->basis_cap = 100000;
  opts->enum_cap = std::uint64_t{1} << 24;
}

const char* edcalc_last_error(void) { return last_error.c_str(); }

edcalc_status edcalc_spec_parse(const char* json, edcalc_spec** out) {
  return guarded([&] {
    if (!json || !out) throw edcalc::Error(edcalc::ErrorCode::Parse, "null argument");
    *out = nullptr;
    auto parsed = edcalc::report::parse_spec(json);
    *out = new edcalc_spec{std::move(parsed.spec)};
    return EDCALC_OK;
  });
}

int edcalc_spec_factor_count(const edcalc_spec* spec) {
  return spec ? spec->spec.m() : 0;
}

void edcalc_spec_free(edcalc_spec* spec) { delete spec; }

edcalc_status edcalc_compute(const edcalc_spec* spec, const edcalc_options* opts,
                             edcalc_report** out) {
  return guarded([&] {
    if (!spec || !out) {
      throw edcalc::Error(edcalc::ErrorCode::InvalidArgument, "null argument");
    }
    *out = nullptr;
    edcalc::validate(spec->spec);
    const auto result = edcalc::compute_ed(spec->spec, ed_options(resolve(opts)));
    auto* r = new edcalc_report;
    r->doc = edcalc::report::make_report(result);
    r->json = edcalc::report::to_json(r->doc).dump(2);
    r->text = edcalc::report::render_text(r->doc);
    *out = r;
    if (result.cap_exceeded) {
      last_error = "resource cap exceeded; report is bounds-only";
      return EDCALC_ERR_CAP;
    }
    return EDCALC_OK;
  });
}

int edcalc_report_is_exact(const edcalc_report* r) {
  return r && r->doc.status == "exact";
}

const char* edcalc_report_lower(const edcalc_report* r) {
  return r ? r->doc.lower.c_str() : nullptr;
}

const char* edcalc_report_upper(const edcalc_report* r) {
  return r && r->doc.upper ? r->doc.upper->c_str() : nullptr;
}

const char* edcalc_report_rule(const edcalc_report* r) {
  return r ? r->doc.rule.c_str() : nullptr;
}

const char* edcalc_report_json(const edcalc_report* r) {
  return r ? r->json.c_str() : nullptr;
}

const char* edcalc_report_text(const edcalc_report* r) {
  return r ? r->text.c_str() : nullptr;
}

void edcalc_report_free(edcalc_report* r) { delete r; }

edcalc_status edcalc_oracle_spec(const edcalc_spec* spec, const edcalc_options* opts,
                                 edcalc_oracle** out) {
  return guarded([&] {
    if (!spec || !out) {
      throw edcalc::Error(edcalc::ErrorCode::InvalidArgument, "null argument");
    }
    *out = nullptr;
    auto outcome = edcalc::oracle::run_spec(spec->spec, resolve(opts).basis_cap);
    *out = new edcalc_oracle{std::move(outcome)};
    return (*out)->outcome.all_agree() ? EDCALC_OK : EDCALC_DISAGREE;
  });
}

edcalc_status edcalc_oracle_random(int trials, std::uint64_t seed,
                                   const edcalc_options* opts, edcalc_oracle** out) {
  return guarded([&] {
    if (!out || trials < 0) {
      throw edcalc::Error(edcalc::ErrorCode::InvalidArgument, "bad arguments");
    }
    *out = nullptr;
    auto outcome = edcalc::oracle::run_random(trials, seed, resolve(opts).basis_cap);
    *out = new edcalc_oracle{std::move(outcome)};
    return (*out)->outcome.all_agree() ? EDCALC_OK : EDCALC_DISAGREE;
  });
}

int edcalc_oracle_trials(const edcalc_oracle* o) { return o ? o->outcome.trials : 0; }

int edcalc_oracle_agreements(const edcalc_oracle* o) {
  return o ? o->outcome.agreements : 0;
}

const char* edcalc_oracle_text(const edcalc_oracle* o) {
  return o ? o->outcome.text.c_str() : nullptr;
}

void edcalc_oracle_free(edcalc_oracle* o) { delete o; }

edcalc_status edcalc_certify(const char* source, const edcalc_options* opts,
                             edcalc_cert** out) {
  return guarded([&] {
    if (!source || !out) throw edcalc::Error(edcalc::ErrorCode::Parse, "null argument");
    *out = nullptr;
    const auto cert = edcalc::report::parse_certificate(source);
    auto* c = new edcalc_cert;
    c->report = edcalc::extraspecial::verify_certificate(cert, resolve(opts).enum_cap);
    c->json = edcalc::report::cert_report_to_json(c->report).dump(2);
    c->text = edcalc::report::render_cert_text(c->report);
    *out = c;
    if (!c->report.lower_bound) {
      last_error = c->report.failure_reason.value_or("certificate invalid");
      return EDCALC_ERR_CERTIFICATE;
    }
    return EDCALC_OK;
  });
}

int edcalc_cert_lower_bound(const edcalc_cert* c) {
  return c && c->report.lower_bound ? *c->report.lower_bound : -1;
}

const char* edcalc_cert_json(const edcalc_cert* c) { return c ? c->json.c_str() : nullptr; }

const char* edcalc_cert_text(const edcalc_cert* c) { return c ? c->text.c_str() : nullptr; }

void edcalc_cert_free(edcalc_cert* c) { delete c; }

const char* edcalc_table_text(void) {
  static const std::string text = edcalc::report::table_text();
  return text.c_str();
}

}  // extern "C"
