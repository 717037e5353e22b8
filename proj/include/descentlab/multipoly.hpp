#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descentlab/field.hpp"
#include "descentlab/rng.hpp"

namespace descentlab {

// Exponent vector (a_0,...,a_{n-1}).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> e) : e_(std::move(e)) {}
  static Monomial unit(std::uint32_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
  static Monomial variable(std::uint32_t nvars, std::uint32_t i, std::uint32_t power = 1);

  std::uint32_t nvars() const { return static_cast<std::uint32_t>(e_.size()); }
  std::uint32_t deg() const;
  bool is_unit() const { return deg() == 0; }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;   // this | o
  Monomial div(const Monomial& o) const;   // this / o
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

  std::string str() const;

 private:
  std::vector<std::uint32_t> e_;
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exps()) {
      h ^= e;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// DRL: compare total degree first; ties broken so that the monomial with the
// smaller exponent in the last differing variable is the larger one.
// LEX: exponents compared left to right.
enum class Ord { DRL, LEX };

inline const char* ord_name(Ord o) { return o == Ord::DRL ? "drl" : "lex"; }
bool ord_degree_compatible(Ord o);

// Returns -1, 0 or 1 as u <, =, > v under `o`.
int order_cmp(const Monomial& u, const Monomial& v, Ord o);

struct MTerm {
  Monomial m;
  Fe c;
};

// Multivariate polynomial in canonical form: no zero coefficients, terms
// stored in decreasing DRL order (leading terms under other orders are
// located by scan).
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Field* f, std::uint32_t nvars) : f_(f), nvars_(nvars) {}
  MultiPoly(const Field* f, std::uint32_t nvars, std::vector<MTerm> terms);

  static MultiPoly constant(const Field* f, std::uint32_t nvars, const Fe& c);
  static MultiPoly variable(const Field* f, std::uint32_t nvars, std::uint32_t i);

  const Field* ctx() const { return f_; }
  std::uint32_t nvars() const { return nvars_; }
  const std::vector<MTerm>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::optional<std::uint32_t> degree() const;  // total degree; nullopt for 0
  const MTerm& leading(Ord o) const;
  Fe coeff(const Monomial& m) const;
  bool is_constant() const;

  MultiPoly monic(Ord o) const;
  MultiPoly mul_term(const Monomial& m, const Fe& c) const;
  // Reduce every variable exponent a >= q to the canonical representative
  // modulo X_i^q = X_i (exponents land in [1, q-1] for a >= 1).
  MultiPoly reduce_var_exponents(std::uint32_t q) const;

  Fe eval(std::span<const Fe> point) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  std::string str() const;

 private:
  const Field* f_ = nullptr;
  std::uint32_t nvars_ = 0;
  std::vector<MTerm> t_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Fe& c, const MultiPoly& a);
MultiPoly operator-(const MultiPoly& a);

// Invertible affine change of coordinates x -> Ax + b over a field.
class AffineMap {
 public:
  AffineMap(const Field* f, std::vector<std::vector<Fe>> a, std::vector<Fe> b);
  static AffineMap identity(const Field* f, std::uint32_t n);
  static AffineMap sample(const Field* f, std::uint32_t n, Rng& rng, bool translate = true);

  const Field* ctx() const { return f_; }
  std::uint32_t nvars() const { return n_; }
  const std::vector<std::vector<Fe>>& a() const { return a_; }
  const std::vector<Fe>& b() const { return b_; }

  AffineMap inverse() const;
  std::vector<Fe> apply_point(std::span<const Fe> x) const;
  // Substitutes X_i <- sum_j A[i][j] X_j + b[i] and expands.
  MultiPoly apply(const MultiPoly& g) const;

 private:
  const Field* f_;
  std::uint32_t n_;
  std::vector<std::vector<Fe>> a_;
  std::vector<Fe> b_;
};

// Lift a polynomial's coefficients through a field embedding.
MultiPoly mp_embed(const MultiPoly& g, const FieldEmbedding& emb);

}  // namespace descentlab
