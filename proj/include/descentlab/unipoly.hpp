#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "descentlab/field.hpp"

namespace descentlab {

struct UTerm {
  std::uint64_t e;
  Fe c;
};

// Sparse univariate polynomial over a field context. Terms are sorted by
// strictly decreasing exponent and carry no zero coefficients; the zero
// polynomial has an empty term list. deg(0) is represented as nullopt.
class UniPoly {
 public:
  UniPoly() : k_(nullptr) {}
  explicit UniPoly(const Field* k) : k_(k) {}
  UniPoly(const Field* k, std::vector<UTerm> terms);

  static UniPoly monomial(const Field* k, std::uint64_t e, Fe c);
  static UniPoly x_pow(const Field* k, std::uint64_t e);
  static UniPoly constant(const Fe& c);
  // X^{q^n} - X for the whole extension field.
  static UniPoly field_equation(const Field* k);

  const Field* ctx() const { return k_; }
  const std::vector<UTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || t_.front().e == 0; }
  std::optional<std::uint64_t> degree() const;
  Fe leading_coeff() const;
  Fe coeff(std::uint64_t e) const;
  UniPoly monic() const;

  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }
  std::string str() const;

 private:
  const Field* k_;
  std::vector<UTerm> t_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Fe& c, const UniPoly& a);

// h1 = s*h2 + h3 with deg(h3) < deg(h2); returns (s, h3).
std::pair<UniPoly, UniPoly> up_divmod(const UniPoly& h1, const UniPoly& h2);
UniPoly up_mod(const UniPoly& h1, const UniPoly& h2);

// Full Euclidean remainder sequence g_{-1} = h1, g_0 = h2, g_{k} = 0,
// recorded so that each intermediate remainder can be inspected.
struct GcdTrace {
  std::vector<UniPoly> remainders;  // h1, h2, g_1, ..., g_k = 0
  UniPoly gcd;                      // last nonzero remainder, made monic
};

std::pair<UniPoly, GcdTrace> up_gcd(const UniPoly& h1, const UniPoly& h2);

// Base-q digit sum of e.
std::uint32_t up_weight_exp(std::uint64_t e, std::uint32_t q);
// max weight over exponents with nonzero coefficient; rejects the zero poly.
std::uint32_t up_weight(const UniPoly& f);

Fe up_eval(const UniPoly& f, const Fe& x);

// All roots in the coefficient field by exhaustive evaluation. Desk scale:
// requires order <= 2^16. Returned in increasing index order.
std::vector<Fe> up_roots(const UniPoly& f);

}  // namespace descentlab
