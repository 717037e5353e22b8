#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "descentlab/unipoly.hpp"

namespace descentlab {

// Exact integer logarithms: floor = largest k with q^k <= d,
// ceil = smallest k with q^k >= d. No floating point anywhere.
int ilog_floor(std::uint32_t q, std::uint64_t d);
int ilog_ceil(std::uint32_t q, std::uint64_t d);

// (q-1) * ceil(log_q(d) + 1) + 1, the remainder-lemma threshold.
int remainder_threshold(std::uint32_t q, std::uint64_t d);

struct BoundReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint64_t deg_F = 0;        // max degree over F
  int deg_fbar = 0;               // max deg of the fake descents
  std::uint64_t d_main = 0;       // witness degree of the last-fall bound
  int lfd_main = 0;               // (q-1)*ceil(log_q(d)+1)+1
  int lfd_hkyy = 0;               // max{floor(2(q-1)(log_q(deg F + 1)+1)), q}
  int sd_general = 0;             // deg(fbar) + (q-1)n
  int sd_logform = 0;             // (q-1)(floor(log_q d + 1) + n)
  std::optional<int> sd_hfe;      // (q-1)n + 2 when every f has the HFE shape
  int u = 0;                      // remainder threshold at d_main
};

// Smallest d with deg(f) <= d for some f and deg(fbar) within the threshold
// for all f; second component is the threshold itself.
std::pair<std::uint64_t, int> bound_lfd_main(std::span<const UniPoly> F);

int bound_lfd_hkyy(std::span<const UniPoly> F);

// Every exponent is 0, q^z or q^a + q^b.
bool hfe_shape(const UniPoly& f);

struct SdBounds {
  int general;
  int log_form;
  std::optional<int> hfe_form;
};
SdBounds bound_sd_sec5(const UniPoly& f);

BoundReport bound_report(std::span<const UniPoly> F);

}  // namespace descentlab
