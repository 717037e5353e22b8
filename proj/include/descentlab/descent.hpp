#pragma once

#include <memory>
#include <string>
#include <vector>

#include "descentlab/multipoly.hpp"
#include "descentlab/unipoly.hpp"

namespace descentlab {

enum class Flavor {
  UNIVARIATE_F,   // F itself, univariate over k
  F_f,            // F together with X^{q^n} - X
  WEIL_Fprime,    // [f]_j over GF(q)
  WEIL_Fprime_f,  // Weil descent plus X_j^q - X_j
  FAKE_Fbar,      // fake descent over k
  FAKE_Fbar_f,    // fake descent plus the cyclic X_j^q - X_{j+1}
  GENERIC,        // arbitrary multivariate system
};

const char* flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& s);
bool flavor_univariate(Flavor f);

// A finite polynomial set plus its field metadata. Generators are always
// available in multivariate form for the matrix engine (univariate flavors
// are carried as polynomials in one variable).
struct PolySystem {
  std::shared_ptr<const Field> coeff;  // coefficient field of the generators
  std::shared_ptr<const Field> ext;    // k = GF(q^n) the system descends from, if any
  Flavor flavor = Flavor::GENERIC;
  std::uint32_t nvars = 0;
  std::vector<UniPoly> uni;         // original univariate set (univariate flavors)
  std::vector<MultiPoly> gens;      // generators fed to the engine
  std::vector<std::string> origin;  // one tag per generator

  std::uint32_t q() const { return coeff->p(); }
  std::uint64_t field_order() const { return coeff->order(); }
  std::uint32_t max_gen_degree() const;
  // n(q-1) + max generator degree; with field equations attached nothing new
  // appears past this point at desk scale.
  int default_dmax() const;
};

// Weil descent of f over k = GF(q^n) with respect to the basis carried by
// f's field context: returns ([f]_0,...,[f]_{n-1}) over the prime field
// `base`, each with all variable degrees <= q-1.
std::vector<MultiPoly> weil_descend(const UniPoly& f, std::shared_ptr<const Field> base);

// Image of X^e under the fake descent: reduce e modulo X^{q^n} - X (for
// e > 0 the reduced exponent lies in [1, q^n-1], with q^n-1 | e mapping to
// q^n-1), then spread the base-q digits over X_0,...,X_{n-1}.
Monomial fake_descend_monomial(std::uint64_t e, std::uint32_t q, std::uint32_t n);

// k-linear extension of the monomial map; result lives over k itself.
MultiPoly fake_descend(const UniPoly& f);

// Construct the named system. Rejects constants (including zero).
PolySystem build_system(std::shared_ptr<const Field> k, std::vector<UniPoly> F, Flavor flavor);

// Wrap an arbitrary multivariate set, optionally attaching X_j^q - X_j.
PolySystem make_generic(std::shared_ptr<const Field> f, std::uint32_t nvars,
                        std::vector<MultiPoly> gens, bool field_equations = false);

// X_i^q - X_i over `f` in `nvars` variables.
MultiPoly field_equation_poly(const Field* f, std::uint32_t nvars, std::uint32_t i);

// Apply an affine change of coordinates to every generator (the map may live
// over an extension; generators are embedded first when needed).
PolySystem transform_system(const PolySystem& sys, const AffineMap& phi,
                            std::shared_ptr<const Field> map_field);

}  // namespace descentlab
