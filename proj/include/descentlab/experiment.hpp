#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descentlab/serialize.hpp"

namespace descentlab {

// Generator spec and run parameters for a sweep over random systems.
struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> ns = {3};
  std::uint32_t count = 10;       // instances per n
  std::uint32_t num_polys = 1;    // |F|
  std::uint32_t min_terms = 2;
  std::uint32_t max_terms = 4;
  Flavor flavor = Flavor::WEIL_Fprime_f;
  Ord order = Ord::DRL;
  int dmax = 0;  // 0 = per-system default plus headroom
  std::string report = "csv";
  bool timings = false;  // wall-clock column is opt-in to keep output reproducible
  int threads = 0;

  static ExperimentConfig from_json(const json& j);  // unknown keys rejected
  json to_json() const;
};

struct RunReport {
  std::size_t idx = 0;
  std::uint64_t seed = 0;
  std::uint32_t q = 0, n = 0;
  std::string flavor, order;
  std::uint64_t sys_hash = 0;
  std::optional<int> sd;
  std::optional<int> lfd_exact;
  int lfd_lower = 0;
  BoundReport bounds;
  std::size_t max_rows = 0, max_cols = 0, max_rank = 0;
  bool bounds_ok = true;  // measured <= bound wherever one applies
  std::string error;
  double wall_ms = 0;
};

// Random sparse nonconstant polynomials over GF(q^n), exponents within
// [0, q^n-1], at least one exponent >= 1, coefficients nonzero.
std::vector<UniPoly> random_sparse_set(const Field* k, std::uint32_t num_polys,
                                       std::uint32_t min_terms, std::uint32_t max_terms,
                                       Rng& rng);

std::vector<RunReport> run_sweep(const ExperimentConfig& cfg);

extern const char* kSweepCsvSchema;
std::string sweep_csv_header(bool timings);
std::string sweep_csv_row(const RunReport& r, bool timings);
json sweep_report_json(const std::vector<RunReport>& rows);

}  // namespace descentlab
