// edcalc: command-line front end over libedcalc's C interface.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edcalc/edcalc.h"

namespace fs = std::filesystem;

namespace {

struct Flags {
  bool json = false;
  bool text = false;
  edcalc_options opts{};
};

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int fail(edcalc_status st, const std::string& context) {
  std::cerr << "edcalc: " << context << ": " << edcalc_last_error() << '\n';
  return static_cast<int>(st);
}

struct Rendered {
  int code = 0;
  std::string out;
  std::string err;
};

Rendered compute_text(const std::string& doc, const Flags& f) {
  Rendered r;
  edcalc_spec* spec = nullptr;
  edcalc_status st = edcalc_spec_parse(doc.c_str(), &spec);
  if (st != EDCALC_OK) {
    r.code = st;
    r.err = edcalc_last_error();
    return r;
  }
  edcalc_report* rep = nullptr;
  st = edcalc_compute(spec, &f.opts, &rep);
  edcalc_spec_free(spec);
  r.code = st;
  if (st != EDCALC_OK) r.err = edcalc_last_error();
  if (rep) {
    r.out = f.json ? std::string(edcalc_report_json(rep)) + "\n" : edcalc_report_text(rep);
    edcalc_report_free(rep);
  }
  return r;
}

int cmd_compute(const std::string& path, const Flags& f) {
  const auto doc = slurp(path);
  if (!doc) {
    std::cerr << "edcalc: cannot read " << path << '\n';
    return EDCALC_ERR_PARSE;
  }
  const Rendered r = compute_text(*doc, f);
  std::cout << r.out;
  if (!r.err.empty()) std::cerr << "edcalc: " << path << ": " << r.err << '\n';
  return r.code;
}

int cmd_oracle(const std::string& path, int trials, std::optional<std::uint64_t> seed,
               const Flags& f) {
  edcalc_oracle* o = nullptr;
  edcalc_status st;
  if (!path.empty()) {
    const auto doc = slurp(path);
    if (!doc) {
      std::cerr << "edcalc: cannot read " << path << '\n';
      return EDCALC_ERR_PARSE;
    }
    edcalc_spec* spec = nullptr;
    st = edcalc_spec_parse(doc->c_str(), &spec);
    if (st != EDCALC_OK) return fail(st, path);
    st = edcalc_oracle_spec(spec, &f.opts, &o);
    edcalc_spec_free(spec);
  } else {
    if (trials <= 0) {
      std::cerr << "edcalc: oracle needs a spec file or --trials N\n";
      return EDCALC_ERR_PARSE;
    }
    const std::uint64_t s = seed ? *seed : std::random_device{}();
    st = edcalc_oracle_random(trials, s, &f.opts, &o);
  }
  if (!o) return fail(st, "oracle");
  std::cout << edcalc_oracle_text(o);
  edcalc_oracle_free(o);
  return st;
}

int cmd_certify(const std::string& source, const Flags& f) {
  std::string doc = source;
  if (source.rfind("builtin:", 0) != 0) {
    const auto text = slurp(source);
    if (!text) {
      std::cerr << "edcalc: cannot read " << source << '\n';
      return EDCALC_ERR_PARSE;
    }
    doc = *text;
  }
  edcalc_cert* c = nullptr;
  const edcalc_status st = edcalc_certify(doc.c_str(), &f.opts, &c);
  if (!c) return fail(st, source);
  std::cout << (f.json ? std::string(edcalc_cert_json(c)) + "\n" : edcalc_cert_text(c));
  edcalc_cert_free(c);
  return st;
}

int cmd_batch(const std::string& dir, const Flags& f) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    std::cerr << "edcalc: not a directory: " << dir << '\n';
    return EDCALC_ERR_PARSE;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());

  // Evaluations are independent; results are printed in input order.
  std::vector<std::future<Rendered>> jobs;
  for (const auto& p : files) {
    jobs.push_back(std::async(std::launch::async, [p, &f] {
      const auto doc = slurp(p.string());
      if (!doc) return Rendered{EDCALC_ERR_PARSE, "", "cannot read file"};
      return compute_text(*doc, f);
    }));
  }
  int worst = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const Rendered r = jobs[i].get();
    std::cout << "== " << files[i].filename().string() << " (exit " << r.code << ")\n"
              << r.out;
    if (!r.err.empty()) std::cout << "error: " << r.err << '\n';
    worst = std::max(worst, r.code);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Essential dimension of quotients of products of odd spin groups"};
  app.require_subcommand(1);
  Flags f;
  edcalc_options_init(&f.opts);
  std::optional<std::uint64_t> seed;
  int trials = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", f.json, "JSON output");
    sub->add_flag("--text", f.text, "text output (default)");
    sub->add_option("--basis-cap", f.opts.basis_cap, "bases tried for the upper bound")
        ->capture_default_str();
    sub->add_option("--enum-cap", f.opts.enum_cap,
                    "closure elements / 2^(enumerable dim R)")
        ->capture_default_str();
  };

  std::string spec_path, oracle_path, cert_source, batch_dir;

  auto* compute = app.add_subcommand("compute", "compute ed(G) for a spec file");
  compute->add_option("spec", spec_path, "spec JSON")->required();
  add_common(compute);

  auto* oracle = app.add_subcommand("oracle", "greedy vs exhaustive minimal basis");
  oracle->add_option("spec", oracle_path, "spec JSON");
  oracle->add_option("--trials", trials, "random trials");
  oracle->add_option("--seed", seed, "random seed");
  add_common(oracle);

  auto* certify = app.add_subcommand("certify", "verify a lower-bound certificate");
  certify->add_option("certificate", cert_source, "certificate JSON or builtin:...")
      ->required();
  add_common(certify);

  auto* table = app.add_subcommand("table", "small groups and known values");

  auto* batch = app.add_subcommand("batch", "compute every *.json spec in a directory");
  batch->add_option("dir", batch_dir, "directory")->required();
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : EDCALC_ERR_PARSE;
  }
  if (f.json && f.text) {
    std::cerr << "edcalc: --json and --text are exclusive\n";
    return EDCALC_ERR_PARSE;
  }

  if (*compute) return cmd_compute(spec_path, f);
  if (*oracle) return cmd_oracle(oracle_path, trials, seed, f);
  if (*certify) return cmd_certify(cert_source, f);
  if (*table) {
    std::cout << edcalc_table_text();
    return 0;
  }
  if (*batch) return cmd_batch(batch_dir, f);
  return 0;
}
