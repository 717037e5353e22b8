#include "descentlab/experiment.hpp"

#include <chrono>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace descentlab {

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  static const std::vector<std::string> known = {
      "seed", "q", "ns", "count", "num_polys", "min_terms", "max_terms",
      "flavor", "order", "dmax", "report", "timings", "threads"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known) ok = ok || it.key() == k;
    require(ok, Errc::ConfigError, "unknown config key: " + it.key());
  }
  ExperimentConfig c;
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("q")) c.q = j.at("q").get<std::uint32_t>();
  if (j.contains("ns")) {
    c.ns.clear();
    for (const auto& x : j.at("ns")) c.ns.push_back(x.get<std::uint32_t>());
  }
  if (j.contains("count")) c.count = j.at("count").get<std::uint32_t>();
  if (j.contains("num_polys")) c.num_polys = j.at("num_polys").get<std::uint32_t>();
  if (j.contains("min_terms")) c.min_terms = j.at("min_terms").get<std::uint32_t>();
  if (j.contains("max_terms")) c.max_terms = j.at("max_terms").get<std::uint32_t>();
  if (j.contains("flavor")) c.flavor = flavor_from_name(j.at("flavor").get<std::string>());
  if (j.contains("order"))
    c.order = j.at("order").get<std::string>() == "lex" ? Ord::LEX : Ord::DRL;
  if (j.contains("dmax")) c.dmax = j.at("dmax").get<int>();
  if (j.contains("report")) c.report = j.at("report").get<std::string>();
  if (j.contains("timings")) c.timings = j.at("timings").get<bool>();
  if (j.contains("threads")) c.threads = j.at("threads").get<int>();
  require(c.q >= 2 && zp::is_prime(c.q), Errc::ConfigError, "q must be prime");
  require(!c.ns.empty() && c.min_terms >= 1 && c.max_terms >= c.min_terms, Errc::ConfigError,
          "bad generator profile");
  require(c.report == "csv" || c.report == "json", Errc::ConfigError, "report must be csv|json");
  return c;
}

json ExperimentConfig::to_json() const {
  json j;
  j["seed"] = seed;
  j["q"] = q;
  j["ns"] = ns;
  j["count"] = count;
  j["num_polys"] = num_polys;
  j["min_terms"] = min_terms;
  j["max_terms"] = max_terms;
  j["flavor"] = flavor_name(flavor);
  j["order"] = ord_name(order);
  j["dmax"] = dmax;
  j["report"] = report;
  j["timings"] = timings;
  j["threads"] = threads;
  return j;
}

std::vector<UniPoly> random_sparse_set(const Field* k, std::uint32_t num_polys,
                                       std::uint32_t min_terms, std::uint32_t max_terms,
                                       Rng& rng) {
  std::vector<UniPoly> out;
  std::uint64_t emax = k->order() - 1;
  for (std::uint32_t i = 0; i < num_polys; ++i) {
    for (;;) {
      std::uint32_t nt =
          min_terms + static_cast<std::uint32_t>(rng.below(max_terms - min_terms + 1));
      std::vector<UTerm> terms;
      for (std::uint32_t t = 0; t < nt; ++t) {
        std::uint64_t e = rng.below(emax + 1);  // within [0, q^n - 1]
        std::uint32_t c = 1 + static_cast<std::uint32_t>(rng.below(k->order() - 1));
        terms.push_back({e, k->element(c)});
      }
      UniPoly f(k, std::move(terms));
      if (f.is_constant()) continue;  // collisions may cancel the top term
      out.push_back(std::move(f));
      break;
    }
  }
  return out;
}

namespace {

RunReport run_instance(const ExperimentConfig& cfg, std::uint32_t n, std::size_t idx,
                       std::uint64_t inst_seed) {
  RunReport r;
  r.idx = idx;
  r.seed = inst_seed;
  r.q = cfg.q;
  r.n = n;
  r.flavor = flavor_name(cfg.flavor);
  r.order = ord_name(cfg.order);
  auto t0 = std::chrono::steady_clock::now();
  try {
    auto k = Field::make_default(cfg.q, n);
    Rng rng(inst_seed);
    std::vector<UniPoly> F =
        random_sparse_set(k.get(), cfg.num_polys, cfg.min_terms, cfg.max_terms, rng);
    PolySystem sys = build_system(k, F, cfg.flavor);
    r.sys_hash = system_hash(sys);
    r.bounds = bound_report(F);

    int cap = cfg.dmax > 0 ? cfg.dmax : sys.default_dmax() + 2;
    SolveReport solve = measure_solving_degree(sys, cfg.order, cap);
    r.sd = solve.sd;
    for (const auto& tr : solve.trace) {
      r.max_rows = std::max(r.max_rows, tr.rows);
      r.max_cols = std::max(r.max_cols, tr.cols);
      r.max_rank = std::max(r.max_rank, tr.rank);
    }

    LastFallReport lfd = last_fall_exact(sys, cap, /*allow_degree_cap=*/true);
    r.lfd_exact = lfd.exact;
    r.lfd_lower = lfd.lower;

    if (cfg.flavor == Flavor::WEIL_Fprime_f && r.lfd_exact)
      r.bounds_ok = *r.lfd_exact <= r.bounds.lfd_main;
    if (cfg.flavor == Flavor::FAKE_Fbar_f && r.sd && cfg.order == Ord::DRL)
      r.bounds_ok = r.bounds_ok && *r.sd <= r.bounds.sd_general;
  } catch (const Error& e) {
    r.error = e.what();
    r.bounds_ok = false;
  }
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<RunReport> run_sweep(const ExperimentConfig& cfg) {
#ifdef _OPENMP
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
#endif
  struct Job {
    std::uint32_t n;
    std::size_t idx;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  std::size_t idx = 0;
  for (std::uint32_t n : cfg.ns)
    for (std::uint32_t i = 0; i < cfg.count; ++i) {
      jobs.push_back({n, idx, Rng::mix(cfg.seed, idx)});
      ++idx;
    }

  std::vector<RunReport> rows(jobs.size());
  // Instances are independent; report order stays deterministic because
  // results land at their own index.
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < m; ++i)
    rows[jobs[i].idx] = run_instance(cfg, jobs[i].n, jobs[i].idx, jobs[i].seed);
  return rows;
}

const char* kSweepCsvSchema = "1";

std::string sweep_csv_header(bool timings) {
  std::string h =
      "schema,idx,seed,q,n,flavor,order,system_hash,sd,lfd_exact,lfd_lower,"
      "bound_d,bound_lfd_main,bound_lfd_hkyy,bound_sd_general,bound_sd_logform,"
      "bound_sd_hfe,u,max_rows,max_cols,max_rank,bounds_ok,error";
  if (timings) h += ",wall_ms";
  return h;
}

std::string sweep_csv_row(const RunReport& r, bool timings) {
  std::ostringstream os;
  os << kSweepCsvSchema << "," << r.idx << "," << r.seed << "," << r.q << "," << r.n << ","
     << r.flavor << "," << r.order << "," << r.sys_hash << ",";
  if (r.sd) os << *r.sd;
  os << ",";
  if (r.lfd_exact) os << *r.lfd_exact;
  os << "," << r.lfd_lower << "," << r.bounds.d_main << "," << r.bounds.lfd_main << ","
     << r.bounds.lfd_hkyy << "," << r.bounds.sd_general << "," << r.bounds.sd_logform << ",";
  if (r.bounds.sd_hfe) os << *r.bounds.sd_hfe;
  os << "," << r.bounds.u << "," << r.max_rows << "," << r.max_cols << "," << r.max_rank << ","
     << (r.bounds_ok ? 1 : 0) << "," << r.error;
  if (timings) os << "," << r.wall_ms;
  return os.str();
}

json sweep_report_json(const std::vector<RunReport>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["idx"] = r.idx;
    j["seed"] = r.seed;
    j["q"] = r.q;
    j["n"] = r.n;
    j["flavor"] = r.flavor;
    j["order"] = r.order;
    j["system_hash"] = r.sys_hash;
    if (r.sd) j["sd"] = *r.sd;
    if (r.lfd_exact) j["lfd_exact"] = *r.lfd_exact;
    j["lfd_lower"] = r.lfd_lower;
    j["bound_d"] = r.bounds.d_main;
    j["bound_lfd_main"] = r.bounds.lfd_main;
    j["bound_lfd_hkyy"] = r.bounds.lfd_hkyy;
    j["bound_sd_general"] = r.bounds.sd_general;
    j["bound_sd_logform"] = r.bounds.sd_logform;
    if (r.bounds.sd_hfe) j["bound_sd_hfe"] = *r.bounds.sd_hfe;
    j["u"] = r.bounds.u;
    j["max_rows"] = r.max_rows;
    j["max_cols"] = r.max_cols;
    j["max_rank"] = r.max_rank;
    j["bounds_ok"] = r.bounds_ok;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace descentlab
