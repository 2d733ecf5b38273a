#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "jclean.h"

namespace {

using json = nlohmann::ordered_json;

struct OwnedStr {
  char* p = nullptr;
  ~OwnedStr() { jc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

int to_exit(jc_status st) {
  switch (st) {
    case JC_OK: return 0;
    case JC_CHECK_FAILED: return 1;
    case JC_INPUT_ERROR: return 2;
    case JC_HYPOTHESIS_ERROR: return 3;
    case JC_CAP_EXCEEDED: return 2;
    default: return 1;
  }
}

[[noreturn]] void die(jc_status st) {
  std::cerr << "error: " << jc_last_error() << "\n";
  std::exit(to_exit(st));
}

jc_ring* open_ring(const std::string& arg) {
  jc_ring* ring = nullptr;
  jc_status st;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) {
      std::cerr << "error: cannot read " << arg << "\n";
      std::exit(2);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    st = jc_ring_from_json(buf.str().c_str(), &ring);
  } else {
    st = jc_ring_from_catalog(arg.c_str(), &ring);
  }
  if (st != JC_OK) die(st);
  return ring;
}

std::string set_line(const json& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i].get<std::string>();
  }
  return out + "}";
}

int cmd_catalog(bool as_json) {
  OwnedStr s;
  jc_status st = jc_catalog(&s.p);
  if (st != JC_OK) die(st);
  if (as_json) {
    std::cout << s.str() << "\n";
    return 0;
  }
  json j = json::parse(s.str());
  for (const auto& row : j)
    std::cout << std::left << std::setw(8) << row["name"].get<std::string>()
              << row["description"].get<std::string>() << "\n";
  return 0;
}

int cmd_analyze(const std::string& ring_arg, const std::string& js_s, bool as_json) {
  jc_ring* ring = open_ring(ring_arg);
  OwnedStr s;
  jc_status st = jc_ring_analysis(ring, &s.p);
  if (st != JC_OK) die(st);
  OwnedStr js;
  if (!js_s.empty()) {
    st = jc_ring_j_s(ring, js_s.c_str(), &js.p);
    if (st != JC_OK) die(st);
  }
  if (as_json) {
    if (js.p) {
      json merged = json::parse(s.str());
      merged["j_s"] = json::parse(js.str());
      std::cout << merged.dump(2) << "\n";
    } else {
      std::cout << s.str() << "\n";
    }
    jc_ring_free(ring);
    return 0;
  }
  json j = json::parse(s.str());
  std::cout << "ring " << j["ring"].get<std::string>() << "  size " << j["size"] << "\n";
  std::cout << "commutative: " << (j["commutative"].get<bool>() ? "true" : "false") << "\n";
  if (j["local"].get<bool>()) {
    std::cout << "local: true  (residue field size " << j["residue_size"] << ")\n";
    std::cout << "weakly bleached: " << (j["weakly_bleached"].get<bool>() ? "true" : "false")
              << "\n";
  } else {
    std::cout << "local: false";
    if (j.contains("nonlocal_witness"))
      std::cout << "  (witness: " << j["nonlocal_witness"][0].get<std::string>() << " + "
                << j["nonlocal_witness"][1].get<std::string>() << " is a unit)";
    std::cout << "\n";
  }
  std::cout << "units:       " << set_line(j["units"]) << "\n";
  std::cout << "J(R):        " << set_line(j["jacobson"]) << "\n";
  std::cout << "1+J:         " << set_line(j["one_plus_j"]) << "\n";
  std::cout << "idempotents: " << set_line(j["idempotents"]) << "\n";
  std::cout << "nilpotents:  " << set_line(j["nilpotents"]) << "\n";
  std::cout << "center:      " << set_line(j["center"]) << "\n";
  if (js.p) {
    json jj = json::parse(js.str());
    std::cout << "J_s at s=" << jj["s"].get<std::string>() << ": " << set_line(jj["j_s"]) << "\n";
  }
  jc_ring_free(ring);
  return 0;
}

int cmd_decide(const std::string& ring_arg, const std::string& s, const std::string& matrix,
               const std::string& kind, const std::string& method, bool verify) {
  jc_ring* ring = open_ring(ring_arg);
  jc_context* ctx = nullptr;
  jc_status st = jc_context_new(ring, s.c_str(), &ctx);
  if (st != JC_OK) die(st);
  OwnedStr out;
  st = jc_decide(ctx, matrix.c_str(), kind.c_str(), method.c_str(), verify ? 1 : 0, &out.p);
  if (out.p) std::cout << out.str() << "\n";
  if (st != JC_OK) {
    if (!out.p) die(st);
    std::cerr << "error: " << jc_last_error() << "\n";
  }
  jc_context_free(ctx);
  jc_ring_free(ring);
  return to_exit(st);
}

struct SuiteJob {
  std::string ring_arg;
  std::string s;
  std::vector<std::string> checks;
  std::vector<std::string> reports;  // filled by the worker
};

void run_suite_job(SuiteJob& job) {
  jc_ring* ring = open_ring(job.ring_arg);
  jc_context* ctx = nullptr;
  jc_status st = jc_context_new(ring, job.s.c_str(), &ctx);
  if (st != JC_OK) die(st);
  for (const std::string& id : job.checks) {
    OwnedStr out;
    st = jc_run_check(ctx, id.c_str(), &out.p);
    if (!out.p) die(st);  // report JSON is set even for failing checks
    job.reports.push_back(out.str());
  }
  jc_context_free(ctx);
  jc_ring_free(ring);
}

int cmd_suite(std::vector<std::string> rings, bool default_catalog,
              std::vector<std::string> checks, const std::string& s_filter, unsigned jobs,
              bool as_json) {
  if (default_catalog) {
    OwnedStr cat;
    jc_status st = jc_catalog(&cat.p);
    if (st != JC_OK) die(st);
    for (const auto& row : json::parse(cat.str())) rings.push_back(row["name"].get<std::string>());
  }
  if (rings.empty()) {
    std::cerr << "error: no rings selected; pass --ring or --default-catalog\n";
    return 2;
  }
  if (checks.empty()) {
    OwnedStr ids;
    jc_status st = jc_check_ids(&ids.p);
    if (st != JC_OK) die(st);
    for (const auto& id : json::parse(ids.str())) checks.push_back(id.get<std::string>());
  }

  std::vector<SuiteJob> queue;
  for (const std::string& ring_arg : rings) {
    if (!s_filter.empty()) {
      queue.push_back({ring_arg, s_filter, checks, {}});
      continue;
    }
    jc_ring* ring = open_ring(ring_arg);
    OwnedStr an;
    jc_status st = jc_ring_analysis(ring, &an.p);
    if (st != JC_OK) die(st);
    json parsed = json::parse(an.str());
    for (const auto& name : parsed["center"])
      queue.push_back({ring_arg, name.get<std::string>(), checks, {}});
    jc_ring_free(ring);
  }

  if (jobs <= 1) {
    for (SuiteJob& job : queue) run_suite_job(job);
  } else {
    std::mutex take;
    std::size_t next = 0;
    auto worker = [&]() {
      for (;;) {
        std::size_t mine;
        {
          std::lock_guard<std::mutex> lock(take);
          if (next >= queue.size()) return;
          mine = next++;
        }
        run_suite_job(queue[mine]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::uint64_t npass = 0, nfail = 0, nskip = 0;
  json all = json::array();
  for (const SuiteJob& job : queue)
    for (const std::string& text : job.reports) {
      json rep = json::parse(text);
      all.push_back(rep);
      std::string status = rep["status"].get<std::string>();
      if (status == "pass") ++npass;
      else if (status == "fail") ++nfail;
      else ++nskip;
      if (as_json) continue;
      std::ostringstream time;
      time << std::fixed << std::setprecision(1) << rep["elapsed_ms"].get<double>() << " ms";
      std::cout << std::left << std::setw(7) << rep["check"].get<std::string>() << std::setw(22)
                << rep["ring"].get<std::string>() << std::setw(7) << rep["s"].get<std::string>()
                << std::setw(20) << status << std::right << std::setw(12)
                << rep["checked"].get<std::uint64_t>() << "  " << time.str() << "\n";
      if (status != "pass") {
        std::cout << "       " << rep["detail"].get<std::string>() << "\n";
        if (!rep["counterexample"].is_null())
          std::cout << "       counterexample: " << rep["counterexample"].get<std::string>()
                    << "\n";
      }
    }
  if (as_json) {
    std::cout << all.dump(2) << "\n";
  } else {
    std::cout << all.size() << " checks: " << npass << " pass, " << nfail << " fail, " << nskip
              << " hypotheses-not-met\n";
  }
  return nfail > 0 ? 1 : 0;
}

int cmd_census(const std::string& ring_arg, const std::string& s) {
  jc_ring* ring = open_ring(ring_arg);
  std::vector<std::string> svals;
  if (!s.empty()) {
    svals.push_back(s);
  } else {
    OwnedStr an;
    jc_status st = jc_ring_analysis(ring, &an.p);
    if (st != JC_OK) die(st);
    json parsed = json::parse(an.str());
    for (const auto& name : parsed["center"])
      svals.push_back(name.get<std::string>());
  }
  std::cout << jc_census_header() << "\n";
  for (const std::string& sv : svals) {
    jc_context* ctx = nullptr;
    jc_status st = jc_context_new(ring, sv.c_str(), &ctx);
    if (st != JC_OK) die(st);
    OwnedStr row;
    st = jc_census(ctx, &row.p);
    if (st != JC_OK) die(st);
    std::cout << row.str() << "\n";
    jc_context_free(ctx);
  }
  jc_ring_free(ring);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite local rings, twisted 2x2 formal matrices, cleanness deciders"};
  app.require_subcommand(1);
  std::string caps;
  app.add_option("--caps", caps, "cap overrides, e.g. enum=2097152,sample=5000");

  auto* catalog = app.add_subcommand("catalog", "built-in rings");
  auto* catalog_list = catalog->add_subcommand("list", "list the built-in catalog");
  bool catalog_json = false;
  catalog_list->add_flag("--json", catalog_json, "emit JSON");

  auto* ring = app.add_subcommand("ring", "ring-level operations");
  auto* analyze = ring->add_subcommand("analyze", "units, radical, idempotents, locality");
  std::string analyze_ring, analyze_js;
  bool analyze_json = false;
  analyze->add_option("ring", analyze_ring, "catalog name or spec JSON file")->required();
  analyze->add_option("--j-s", analyze_js, "also print J_s for this s");
  analyze->add_flag("--json", analyze_json, "emit JSON");

  auto* matrix = app.add_subcommand("matrix", "matrix-level operations");
  auto* decide = matrix->add_subcommand("decide", "decide a cleanness kind with certificate");
  std::string decide_ring, decide_matrix, decide_s, decide_kind, decide_method = "oracle";
  bool decide_verify = false;
  decide->add_option("ring", decide_ring, "catalog name or spec JSON file")->required();
  decide->add_option("matrix", decide_matrix, "[[a,b],[c,d]] with names or indices")->required();
  decide->add_option("--s", decide_s, "central twist element")->required();
  decide->add_option("--kind", decide_kind, "sc | sjc | snc")->required();
  decide->add_option("--method", decide_method, "oracle | auto (default oracle)");
  decide->add_flag("--verify", decide_verify, "cross-check against the oracle");

  auto* suite = app.add_subcommand("suite", "theorem suite");
  auto* run = suite->add_subcommand("run", "run checks over rings and central s");
  std::vector<std::string> run_rings, run_checks;
  bool run_default = false, run_json = false;
  std::string run_s;
  unsigned run_jobs = 1;
  run->add_option("--ring", run_rings, "catalog name or spec JSON file (repeatable)");
  run->add_flag("--default-catalog", run_default, "all built-in rings");
  run->add_option("--check", run_checks, "check id, e.g. T2.16 (repeatable; default all)");
  run->add_option("--s", run_s, "restrict to one s");
  run->add_option("--jobs", run_jobs, "parallel (ring,s) jobs (default 1)");
  run->add_flag("--json", run_json, "emit JSON reports");

  auto* census = app.add_subcommand("census", "oracle counts as CSV");
  std::string census_ring, census_s;
  census->add_option("ring", census_ring, "catalog name or spec JSON file")->required();
  census->add_option("--s", census_s, "central twist element (default: every central s)");

  CLI11_PARSE(app, argc, argv);

  if (!caps.empty()) {
    jc_status st = jc_set_caps(caps.c_str());
    if (st != JC_OK) die(st);
  }

  if (catalog_list->parsed()) return cmd_catalog(catalog_json);
  if (analyze->parsed()) return cmd_analyze(analyze_ring, analyze_js, analyze_json);
  if (decide->parsed())
    return cmd_decide(decide_ring, decide_s, decide_matrix, decide_kind, decide_method,
                      decide_verify);
  if (run->parsed())
    return cmd_suite(run_rings, run_default, run_checks, run_s, run_jobs, run_json);
  if (census->parsed()) return cmd_census(census_ring, census_s);
  std::cerr << app.help();
  return 2;
}
