#pragma once

#include <string>
#include <vector>

#include "descentlab/hfe.hpp"

namespace descentlab {

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The worked examples, run as a fixed battery. An empty filter runs all;
// otherwise only claims whose name contains the filter string.
std::vector<ClaimResult> run_paper_claims(const std::string& only = "");

}  // namespace descentlab
