// Command-line front end: system-file ingestion, descent construction,
// solving-degree and last-fall measurements, bound evaluation, HFE
// experiments, seeded sweeps, and the worked-example battery.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "descentlab/experiment.hpp"
#include "descentlab/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dl = descentlab;

namespace {

int g_threads = 0;

void apply_threads() {
#ifdef _OPENMP
  int t = g_threads;
  if (const char* env = std::getenv("DESCENTLAB_THREADS")) t = std::atoi(env);
  if (t > 0) omp_set_num_threads(t);
#endif
}

std::vector<dl::digit_t> parse_digits(const std::string& s) {
  std::vector<dl::digit_t> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(static_cast<dl::digit_t>(std::stoul(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(static_cast<dl::digit_t>(std::stoul(cur)));
  return out;
}

std::string digits_str(const std::vector<dl::digit_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

dl::Ord parse_order(const std::string& s) {
  if (s == "drl") return dl::Ord::DRL;
  if (s == "lex") return dl::Ord::LEX;
  dl::fail(dl::Errc::ConfigError, "order must be drl or lex");
}

struct SolveArgs {
  std::string input, order = "drl", flavor, trace_path;
  int dmax = 0;
};

dl::PolySystem load_system(const std::string& path, const std::string& flavor_override) {
  dl::json j = dl::load_json_file(path);
  if (!flavor_override.empty()) j["flavor"] = flavor_override;
  return dl::system_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weil-descent polynomial systems: solving degree, last fall degree, bounds"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  std::string report = "csv";
  app.add_option("--seed", seed, "global random seed");
  app.add_option("--threads", g_threads, "worker threads (DESCENTLAB_THREADS overrides)");
  app.add_option("--report", report, "report format: csv|json");

  // descend
  auto* cmd_descend = app.add_subcommand("descend", "construct a descent system from a file");
  std::string in_path, out_path, flavor = "WEIL_Fprime_f";
  cmd_descend->add_option("input", in_path, "system file (univariate)")->required();
  cmd_descend->add_option("-o,--output", out_path, "output file (default: stdout)");
  cmd_descend->add_option("--flavor", flavor, "target flavor");

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "measure the solving degree");
  SolveArgs sa;
  cmd_solve->add_option("input", sa.input, "system file")->required();
  cmd_solve->add_option("--order", sa.order, "term order: drl|lex");
  cmd_solve->add_option("--dmax", sa.dmax, "degree cap (0 = default)");
  cmd_solve->add_option("--flavor", sa.flavor, "descend a univariate file to this flavor first");
  bool want_trace = false;
  cmd_solve->add_flag("--trace", want_trace, "emit per-degree matrix statistics CSV");
  cmd_solve->add_option("--trace-out", sa.trace_path, "trace CSV path (default: stdout)");

  // lfd
  auto* cmd_lfd = app.add_subcommand("lfd", "exact last fall degree");
  std::string lfd_input, lfd_flavor, events_path;
  int lfd_dmax = 0;
  bool lfd_cap = false;
  cmd_lfd->add_option("input", lfd_input, "system file")->required();
  cmd_lfd->add_option("--dmax", lfd_dmax, "degree cap (0 = default)");
  cmd_lfd->add_option("--flavor", lfd_flavor, "descend a univariate file first");
  cmd_lfd->add_flag("--allow-cap", lfd_cap, "bracket semantics for open systems");
  bool want_events = false;
  cmd_lfd->add_flag("--events", want_events, "emit fall-event CSV");
  cmd_lfd->add_option("--events-out", events_path, "event CSV path (default: stdout)");

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate the closed-form bounds");
  std::string bounds_input;
  cmd_bounds->add_option("input", bounds_input, "system file (univariate)")->required();

  // hfe
  auto* cmd_hfe = app.add_subcommand("hfe", "desk-scale HFE experiments");
  cmd_hfe->require_subcommand(1);
  auto* hfe_keygen = cmd_hfe->add_subcommand("keygen", "generate a key pair");
  std::uint32_t hq = 2, hn = 5, ht = 3;
  std::string key_path = "hfe_key.json";
  hfe_keygen->add_option("-q", hq, "prime base field size");
  hfe_keygen->add_option("-n", hn, "extension degree / variables");
  hfe_keygen->add_option("-t", ht, "degree exponent, deg f <= q^t");
  hfe_keygen->add_option("-o,--output", key_path, "key file");
  auto* hfe_enc = cmd_hfe->add_subcommand("encrypt", "evaluate the public map");
  std::string enc_key, enc_msg;
  hfe_enc->add_option("--key", enc_key, "key file")->required();
  hfe_enc->add_option("--msg", enc_msg, "plaintext digits, comma separated")->required();
  auto* hfe_dec = cmd_hfe->add_subcommand("decrypt", "invert through the central map");
  std::string dec_key, dec_ct;
  hfe_dec->add_option("--key", dec_key, "key file")->required();
  hfe_dec->add_option("--ct", dec_ct, "ciphertext digits")->required();
  auto* hfe_att = cmd_hfe->add_subcommand("attack", "solve the public system directly");
  std::string att_key, att_ct;
  int att_dmax = 0;
  bool att_nocentral = false;
  hfe_att->add_option("--key", att_key, "key file")->required();
  hfe_att->add_option("--ct", att_ct, "ciphertext digits")->required();
  hfe_att->add_option("--dmax", att_dmax, "degree cap for the engine");
  hfe_att->add_flag("--no-central", att_nocentral, "skip central-map measurements");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "seeded corpus of random systems");
  std::string sweep_config;
  std::uint32_t sw_q = 2, sw_count = 10, sw_polys = 1;
  std::vector<std::uint32_t> sw_ns = {3};
  std::string sw_flavor = "WEIL_Fprime_f", sw_order = "drl";
  bool sw_timings = false;
  int sw_dmax = 0;
  cmd_sweep->add_option("--config", sweep_config, "JSON config file (overrides flags)");
  cmd_sweep->add_option("-q", sw_q, "prime base field size");
  cmd_sweep->add_option("-n,--ns", sw_ns, "extension degrees");
  cmd_sweep->add_option("--count", sw_count, "instances per degree");
  cmd_sweep->add_option("--polys", sw_polys, "|F| per instance");
  cmd_sweep->add_option("--flavor", sw_flavor, "system flavor");
  cmd_sweep->add_option("--order", sw_order, "term order");
  cmd_sweep->add_option("--dmax", sw_dmax, "degree cap (0 = default)");
  cmd_sweep->add_flag("--timings", sw_timings, "append wall-clock column (non-reproducible)");

  // verify-paper
  auto* cmd_verify = app.add_subcommand("verify-paper", "run the worked-example battery");
  std::string only;
  cmd_verify->add_option("--only", only, "run only claims whose name contains this string");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  apply_threads();

  try {
    if (*cmd_descend) {
      dl::PolySystem sys = load_system(in_path, flavor);
      dl::json j = dl::system_to_json(sys);
      if (out_path.empty())
        std::cout << dl::canonical_dump(j) << "\n";
      else
        dl::write_json_file(out_path, j);
      return 0;
    }

    if (*cmd_solve) {
      dl::PolySystem sys = load_system(sa.input, sa.flavor);
      dl::SolveReport rep = dl::measure_solving_degree(sys, parse_order(sa.order), sa.dmax);
      if (want_trace || !sa.trace_path.empty()) {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!sa.trace_path.empty()) {
          file.open(sa.trace_path);
          os = &file;
        }
        *os << "d,rows,cols,rank,mutants,new_falls\n";
        for (const auto& tr : rep.trace)
          *os << tr.d << "," << tr.rows << "," << tr.cols << "," << tr.rank << "," << tr.mutants
              << "," << tr.new_falls << "\n";
      }
      if (report == "json") {
        dl::json j;
        j["order"] = sa.order;
        j["d_max"] = rep.d_max;
        if (rep.sd) j["sd"] = *rep.sd;
        j["simple_zero"] = rep.simple_zero;
        j["system_hash"] = dl::system_hash(sys);
        std::cout << dl::canonical_dump(j) << "\n";
      } else {
        std::cout << "sd=" << (rep.sd ? std::to_string(*rep.sd) : "unreached") << "\n";
      }
      return rep.sd ? 0 : 1;
    }

    if (*cmd_lfd) {
      dl::PolySystem sys = load_system(lfd_input, lfd_flavor);
      dl::LastFallReport rep = dl::last_fall_exact(sys, lfd_dmax, lfd_cap);
      if (want_events || !events_path.empty()) {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!events_path.empty()) {
          file.open(events_path);
          os = &file;
        }
        *os << "degree,new_lt_count,sample_lts\n";
        for (const auto& ev : rep.events) {
          *os << ev.degree << "," << ev.new_lts.size() << ",";
          for (std::size_t i = 0; i < ev.new_lts.size() && i < 3; ++i)
            *os << (i ? " " : "") << ev.new_lts[i].str();
          *os << "\n";
        }
      }
      if (report == "json") {
        dl::json j;
        if (rep.exact) j["lfd"] = *rep.exact;
        j["lower"] = rep.lower;
        if (rep.stabilization) j["stabilization"] = *rep.stabilization;
        std::cout << dl::canonical_dump(j) << "\n";
      } else if (rep.exact) {
        std::cout << "lfd=" << *rep.exact << "\n";
      } else {
        std::cout << "lfd>=" << rep.lower << " (not certified by dmax)\n";
      }
      return 0;
    }

    if (*cmd_bounds) {
      dl::PolySystem sys = load_system(bounds_input, "");
      dl::require(!sys.uni.empty(), dl::Errc::ConfigError, "bounds need a univariate system");
      dl::BoundReport r = dl::bound_report(sys.uni);
      dl::json j;
      j["q"] = r.q;
      j["n"] = r.n;
      j["deg_F"] = r.deg_F;
      j["deg_fbar"] = r.deg_fbar;
      j["d_main"] = r.d_main;
      j["lfd_main"] = r.lfd_main;
      j["lfd_hkyy"] = r.lfd_hkyy;
      j["sd_general"] = r.sd_general;
      j["sd_logform"] = r.sd_logform;
      if (r.sd_hfe) j["sd_hfe"] = *r.sd_hfe;
      j["u"] = r.u;
      std::cout << dl::canonical_dump(j) << "\n";
      std::cout << "q,n,deg_F,deg_fbar,d_main,lfd_main,lfd_hkyy,sd_general,sd_logform,sd_hfe,u\n"
                << r.q << "," << r.n << "," << r.deg_F << "," << r.deg_fbar << "," << r.d_main
                << "," << r.lfd_main << "," << r.lfd_hkyy << "," << r.sd_general << ","
                << r.sd_logform << "," << (r.sd_hfe ? std::to_string(*r.sd_hfe) : "") << ","
                << r.u << "\n";
      return 0;
    }

    if (*cmd_hfe) {
      if (*hfe_keygen) {
        dl::HfeKeyPair kp = dl::hfe_keygen(hq, hn, ht, seed);
        dl::write_json_file(key_path, dl::keypair_to_json(kp));
        std::cout << "wrote " << key_path << "\n";
        return 0;
      }
      if (*hfe_enc) {
        dl::HfeKeyPair kp = dl::keypair_from_json(dl::load_json_file(enc_key));
        std::cout << digits_str(dl::hfe_encrypt(kp, parse_digits(enc_msg))) << "\n";
        return 0;
      }
      if (*hfe_dec) {
        dl::HfeKeyPair kp = dl::keypair_from_json(dl::load_json_file(dec_key));
        for (const auto& m : dl::hfe_decrypt(kp, parse_digits(dec_ct)))
          std::cout << digits_str(m) << "\n";
        return 0;
      }
      if (*hfe_att) {
        dl::HfeKeyPair kp = dl::keypair_from_json(dl::load_json_file(att_key));
        dl::HfeAttackResult res = dl::hfe_attack(kp, parse_digits(att_ct), att_dmax,
                                                 !att_nocentral);
        dl::json j;
        dl::json cands = dl::json::array();
        for (const auto& m : res.candidates) cands.push_back(digits_str(m));
        j["candidates"] = std::move(cands);
        j["sd_public"] = *res.public_solve.sd;
        j["read_from_rows"] = res.read_from_rows;
        if (res.sd_fake_central) j["sd_fake_central"] = *res.sd_fake_central;
        if (res.lfd_weil_central) j["lfd_weil_central"] = *res.lfd_weil_central;
        if (!att_nocentral) {
          j["bound_sd_hfe"] = res.bounds.sd_hfe ? *res.bounds.sd_hfe : -1;
          j["bound_lfd_main"] = res.bounds.lfd_main;
        }
        std::cout << dl::canonical_dump(j) << "\n";
        return 0;
      }
    }

    if (*cmd_sweep) {
      dl::ExperimentConfig cfg;
      if (!sweep_config.empty()) {
        cfg = dl::ExperimentConfig::from_json(dl::load_json_file(sweep_config));
      } else {
        cfg.seed = seed;
        cfg.q = sw_q;
        cfg.ns = sw_ns;
        cfg.count = sw_count;
        cfg.num_polys = sw_polys;
        cfg.flavor = dl::flavor_from_name(sw_flavor);
        cfg.order = parse_order(sw_order);
        cfg.dmax = sw_dmax;
        cfg.timings = sw_timings;
        cfg.report = report;
        cfg.threads = g_threads;
      }
      auto rows = dl::run_sweep(cfg);
      if (cfg.report == "json") {
        std::cout << dl::canonical_dump(dl::sweep_report_json(rows)) << "\n";
      } else {
        std::cout << dl::sweep_csv_header(cfg.timings) << "\n";
        for (const auto& r : rows) std::cout << dl::sweep_csv_row(r, cfg.timings) << "\n";
      }
      bool all_ok = true;
      for (const auto& r : rows) all_ok = all_ok && r.error.empty();
      return all_ok ? 0 : 1;
    }

    if (*cmd_verify) {
      auto results = dl::run_paper_claims(only);
      bool all = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.pass) std::cout << ": " << r.detail;
        std::cout << "\n";
        all = all && r.pass;
      }
      if (results.empty()) {
        std::cout << "no claims match filter\n";
        return 2;
      }
      return all ? 0 : 1;
    }
  } catch (const dl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case dl::Errc::ConfigError:
      case dl::Errc::IoError:
      case dl::Errc::ParamOutOfRange:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
