#pragma once

#include <span>
#include <vector>

#include "descentlab/descent.hpp"

namespace descentlab {

struct GroebnerBasis {
  Ord ord = Ord::DRL;
  std::vector<MultiPoly> polys;  // monic, sorted by increasing leading term
  bool reduced = true;

  std::uint32_t max_degree() const;
  bool is_unit_ideal() const;  // contains 1
  // Every variable has a pure power among the leading terms (or 1 does).
  bool zero_dimensional(std::uint32_t nvars) const;
  // The basis is exactly {X_0 - a_0, ..., X_{n-1} - a_n-1}; returns the point.
  std::optional<std::vector<Fe>> simple_zero_point(std::uint32_t nvars) const;
};

// Full normal form of g modulo G (every term reduced).
MultiPoly normal_form(MultiPoly g, std::span<const MultiPoly> basis, Ord ord);

// Reduced Groebner basis by S-polynomial completion with interreduction.
// Independent of the Macaulay machinery; serves as its oracle.
GroebnerBasis buchberger_gb(const PolySystem& sys, Ord ord);
GroebnerBasis buchberger_gb(std::span<const MultiPoly> gens, Ord ord);

}  // namespace descentlab
