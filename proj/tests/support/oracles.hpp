#pragma once

// Independent test-side oracles. Everything here recomputes paper-side
// quantities by a different route than the library (map-based polynomial
// elimination, dense division, exhaustive enumeration) so the two paths can
// check each other.

#include <map>
#include <optional>
#include <vector>

#include "descentlab/descent.hpp"
#include "descentlab/rng.hpp"

namespace descentlab::oracle {

// Reduced echelon basis of a set of polynomials under DRL, kept as monic
// MultiPolys with pairwise distinct leading monomials, fully interreduced.
class PolyBasis {
 public:
  // Reduce g against the basis (all terms); returns the residual.
  MultiPoly reduce(MultiPoly g) const;
  // Insert the residual of g; true if the rank grew.
  bool insert(MultiPoly g);
  const std::vector<MultiPoly>& rows() const { return rows_; }
  std::size_t rank() const { return rows_.size(); }
  // Canonical form: rows sorted by leading monomial, ascending.
  std::vector<MultiPoly> sorted_rows() const;

 private:
  std::vector<MultiPoly> rows_;  // monic, mutually reduced
};

// V_{E,d} by the definition: start from the generators of degree <= d and
// close under multiplication by single variables while the product degree
// stays within d, iterating to a fixpoint.
PolyBasis closure_vd(const std::vector<MultiPoly>& gens, std::uint32_t nvars, int d);

// Dense schoolbook division over a field: f = q*g + r with deg r < deg g.
// Inputs and outputs are coefficient vectors, little-endian.
std::pair<std::vector<Fe>, std::vector<Fe>> dense_divmod(const std::vector<Fe>& f,
                                                         const std::vector<Fe>& g,
                                                         const Field* k);
std::vector<Fe> unipoly_to_dense(const UniPoly& f);
UniPoly dense_to_unipoly(const std::vector<Fe>& c, const Field* k);

// Textbook comparators written independently of the library's order_cmp.
int ref_cmp_drl(const Monomial& a, const Monomial& b);
int ref_cmp_lex(const Monomial& a, const Monomial& b);

// Random element, nonzero by default excluded.
Fe random_fe(const Field* f, Rng& rng);
MultiPoly random_multipoly(const Field* f, std::uint32_t nvars, int max_deg,
                           std::size_t terms, Rng& rng);

// Random generic system over GF(q) with field equations attached.
PolySystem random_system(std::shared_ptr<const Field> f, std::uint32_t nvars, int max_deg,
                         std::size_t num_gens, Rng& rng);

// Random polynomials of degree <= 2 vanishing at a chosen point, plus field
// equations; resampled until the point is the unique GF(q)^n solution.
struct SimpleZeroSystem {
  PolySystem sys;
  std::vector<Fe> point;
};
std::optional<SimpleZeroSystem> random_simple_zero(std::shared_ptr<const Field> f,
                                                   std::uint32_t nvars, Rng& rng,
                                                   int attempts = 50);

// Rank by exhaustive span enumeration (tiny inputs only).
std::size_t rank_by_enumeration(const std::vector<std::vector<Fe>>& rows, const Field* f);

}  // namespace descentlab::oracle
