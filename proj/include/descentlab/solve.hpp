#pragma once

#include <optional>

#include "descentlab/buchberger.hpp"
#include "descentlab/engine.hpp"

namespace descentlab {

struct DegreeTrace {
  int d = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::size_t mutants = 0;
  std::size_t new_falls = 0;  // growth of the low-degree part vs the previous degree
};

struct SolveReport {
  Ord ord = Ord::DRL;
  int d_max = 0;
  std::optional<int> sd;  // least d with W_d containing the reduced basis
  GroebnerBasis gb;
  std::vector<DegreeTrace> trace;
  std::vector<MultiPoly> missing;  // basis elements not reached at d_max
  // A simple zero read off the trailing rows of the final matrix: the
  // reduced basis is {X_i - a_i} and those rows appear verbatim.
  bool simple_zero = false;
  bool deg1_rows_ok = false;
  std::optional<std::vector<Fe>> solution;

  int sd_or_throw() const;
};

// Smallest d <= d_max whose W_d contains the reduced Groebner basis.
// d_max <= 0 picks the system default.
SolveReport measure_solving_degree(const PolySystem& sys, Ord ord, int d_max = 0);

}  // namespace descentlab
