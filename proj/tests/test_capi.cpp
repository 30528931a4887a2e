#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "edcalc/edcalc.h"

namespace {

const char* kExample =
    R"({"type": "B", "n": [1, 2, 3, 7], "mu_generators": [[1, 1, 0, 0], [1, 0, 1, 0]]})";

std::string compute_lower(const char* doc) {
  edcalc_spec* spec = nullptr;
  if (edcalc_spec_parse(doc, &spec) != EDCALC_OK) return "parse";
  edcalc_report* r = nullptr;
  const auto st = edcalc_compute(spec, nullptr, &r);
  edcalc_spec_free(spec);
  std::string out = st == EDCALC_OK ? edcalc_report_lower(r) : "error";
  edcalc_report_free(r);
  return out;
}

}  // namespace

TEST_CASE("compute through the C interface") {
  edcalc_spec* spec = nullptr;
  REQUIRE(edcalc_spec_parse(kExample, &spec) == EDCALC_OK);
  CHECK(edcalc_spec_factor_count(spec) == 4);
  edcalc_report* r = nullptr;
  REQUIRE(edcalc_compute(spec, nullptr, &r) == EDCALC_OK);
  CHECK(edcalc_report_is_exact(r));
  CHECK(std::string(edcalc_report_lower(r)) == "53");
  CHECK(std::string(edcalc_report_upper(r)) == "53");
  CHECK(std::string(edcalc_report_rule(r)) == "Rem-3.6");
  CHECK(std::string(edcalc_report_text(r)).rfind("status: exact, ed = 53", 0) == 0);
  CHECK(std::string(edcalc_report_json(r)).find("\"value\": \"53\"") != std::string::npos);
  edcalc_report_free(r);
  edcalc_spec_free(spec);
  CHECK(std::string(edcalc_last_error()).empty());
}

TEST_CASE("status codes") {
  edcalc_spec* spec = nullptr;
  CHECK(edcalc_spec_parse("{", &spec) == EDCALC_ERR_PARSE);
  CHECK(spec == nullptr);
  CHECK(std::strlen(edcalc_last_error()) > 0);

  REQUIRE(edcalc_spec_parse(R"({"type": "B", "n": [1, 2], "mu_generators": [[1, 0]]})", &spec) ==
          EDCALC_OK);
  edcalc_report* r = nullptr;
  CHECK(edcalc_compute(spec, nullptr, &r) == EDCALC_ERR_VALIDATION);
  CHECK(r == nullptr);
  CHECK(std::string(edcalc_last_error()).find("factor 1") != std::string::npos);
  edcalc_spec_free(spec);

  // Tight basis cap: bounds-only report plus the cap status.
  REQUIRE(edcalc_spec_parse(R"({"type": "B", "n": [1, 1, 1, 1, 1, 1]})", &spec) == EDCALC_OK);
  edcalc_options opts;
  edcalc_options_init(&opts);
  CHECK(opts.basis_cap == 100000);
  CHECK(opts.enum_cap == (1u << 24));
  opts.basis_cap = 10;
  CHECK(edcalc_compute(spec, &opts, &r) == EDCALC_ERR_CAP);
  REQUIRE(r != nullptr);
  CHECK_FALSE(edcalc_report_is_exact(r));
  edcalc_report_free(r);
  edcalc_spec_free(spec);
}

TEST_CASE("oracle through the C interface") {
  edcalc_oracle* o = nullptr;
  CHECK(edcalc_oracle_random(50, 7, nullptr, &o) == EDCALC_OK);
  CHECK(edcalc_oracle_trials(o) == 50);
  CHECK(edcalc_oracle_agreements(o) == 50);
  CHECK(std::string(edcalc_oracle_text(o)).rfind("seed: 7\n", 0) == 0);
  edcalc_oracle_free(o);

  edcalc_spec* spec = nullptr;
  REQUIRE(edcalc_spec_parse(kExample, &spec) == EDCALC_OK);
  CHECK(edcalc_oracle_spec(spec, nullptr, &o) == EDCALC_OK);
  CHECK(std::string(edcalc_oracle_text(o)).find("agree (192 = 192)") != std::string::npos);
  edcalc_oracle_free(o);
  edcalc_spec_free(spec);
}

TEST_CASE("certificates through the C interface") {
  edcalc_cert* c = nullptr;
  CHECK(edcalc_certify("builtin:pair:1:5", nullptr, &c) == EDCALC_OK);
  CHECK(edcalc_cert_lower_bound(c) == 7);
  CHECK(std::string(edcalc_cert_text(c)).find("lower bound 7") != std::string::npos);
  edcalc_cert_free(c);

  const char* bad = R"({"spec": {"type": "B", "n": [1, 1], "mu_generators": [[1, 1]]},
    "generators": [[{"sign": 1, "indices": [1, 2]}, {"sign": 1, "indices": []}],
                   [{"sign": 1, "indices": [2, 3]}, {"sign": 1, "indices": []}]]})";
  CHECK(edcalc_certify(bad, nullptr, &c) == EDCALC_ERR_CERTIFICATE);
  REQUIRE(c != nullptr);
  CHECK(edcalc_cert_lower_bound(c) == -1);
  CHECK(std::string(edcalc_cert_text(c)).find("NonAbelianQuotient") != std::string::npos);
  edcalc_cert_free(c);

  CHECK(edcalc_certify("builtin:unknown", nullptr, &c) == EDCALC_ERR_PARSE);
  CHECK(edcalc_certify("builtin:pair:3:4", nullptr, &c) == EDCALC_ERR_VALIDATION);
}

TEST_CASE("table") {
  CHECK(std::string(edcalc_table_text()).find("[2,3] small (3.2)") != std::string::npos);
}

TEST_CASE("concurrent calls are independent") {
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([t, &results] {
      results[t] = compute_lower(t % 2 ? kExample : R"({"type": "B", "n": [7, 8], "mu_generators": [[1, 1]]})");
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 0; t < 8; ++t) CHECK(results[t] == (t % 2 ? "53" : "32527"));
}
