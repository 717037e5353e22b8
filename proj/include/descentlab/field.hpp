#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "descentlab/errors.hpp"

namespace descentlab {

using digit_t = std::uint32_t;

class Field;

// Element of GF(p) or GF(p^n), stored as a fully reduced little-endian digit
// vector over the prime subfield (length n, digits in [0,p)). Equality is
// coefficient-wise. The context must outlive the element.
class Fe {
 public:
  Fe() : f_(nullptr) {}
  Fe(const Field* f, std::vector<digit_t> digits);

  const Field& field() const { return *f_; }
  const Field* ctx() const { return f_; }
  const std::vector<digit_t>& digits() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  bool operator==(const Fe& o) const;
  bool operator!=(const Fe& o) const { return !(*this == o); }
  // Canonical total order on one field's elements (by index); used for
  // deterministic candidate/root listings.
  bool operator<(const Fe& o) const;

  std::string str() const;

 private:
  friend class Field;
  const Field* f_;
  std::vector<digit_t> c_;
};

Fe operator+(const Fe& a, const Fe& b);
Fe operator-(const Fe& a, const Fe& b);
Fe operator*(const Fe& a, const Fe& b);
Fe operator/(const Fe& a, const Fe& b);
Fe operator-(const Fe& a);

// GF(p) (n = 1) or GF(p^n) = GF(p)[t]/(m(t)) with m monic irreducible of
// degree n. An optional basis (alpha_0,...,alpha_{n-1}) of the extension over
// the prime field drives decompose/compose; the default is the power basis
// 1, t, ..., t^{n-1}. Immutable after construction, shareable across threads.
class Field {
 public:
  static std::shared_ptr<const Field> make_prime(digit_t p);
  static std::shared_ptr<const Field> make(digit_t p, std::vector<digit_t> modulus);
  static std::shared_ptr<const Field> make(digit_t p, std::vector<digit_t> modulus,
                                           std::vector<std::vector<digit_t>> basis);
  // First monic irreducible of degree n over GF(p) in ascending encoding order.
  static std::shared_ptr<const Field> make_default(digit_t p, digit_t n);

  digit_t p() const { return p_; }
  digit_t n() const { return n_; }
  std::uint64_t order() const { return order_; }
  bool is_prime_field() const { return n_ == 1; }
  const std::vector<digit_t>& modulus() const { return modulus_; }
  const std::vector<std::vector<digit_t>>& basis() const { return basis_; }
  bool has_power_basis() const { return power_basis_; }

  bool same(const Field& o) const;  // structural equality

  Fe zero() const;
  Fe one() const;
  Fe gen() const;  // the class of t (equals zero() in the prime field)
  Fe from_digits(std::vector<digit_t> c) const;  // reduces digits mod p
  Fe from_int(std::uint64_t v) const;            // v mod p, embedded as a constant

  // Canonical index: sum c_j p^j. Bijection with [0, order).
  std::uint32_t index_of(const Fe& a) const;
  Fe element(std::uint32_t idx) const;

  Fe add(const Fe& a, const Fe& b) const;
  Fe sub(const Fe& a, const Fe& b) const;
  Fe mul(const Fe& a, const Fe& b) const;
  Fe div(const Fe& a, const Fe& b) const;
  Fe neg(const Fe& a) const;
  Fe inv(const Fe& a) const;
  Fe pow(const Fe& a, std::uint64_t e) const;  // a^0 = 1, also for a = 0
  Fe frobenius(const Fe& a) const;             // a^p

  // Coordinates w.r.t. the basis: a = sum coords[j] * alpha_j.
  std::vector<digit_t> decompose(const Fe& a) const;
  Fe compose(std::span<const digit_t> coords) const;

  // Index-level kernel arithmetic. Multiplication tables exist whenever
  // order() <= 2^16; matrix kernels require them.
  bool has_tables() const { return !log_.empty(); }
  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_idx(std::uint32_t a) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  std::uint32_t div_idx(std::uint32_t a, std::uint32_t b) const;

  const std::uint16_t* log_table() const { return log_.data(); }
  const std::uint16_t* exp_table() const { return exp_.data(); }

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(digit_t p, std::vector<digit_t> modulus, std::vector<std::vector<digit_t>> basis);

  void check_element(const Fe& a) const;
  std::vector<digit_t> reduce_poly(std::vector<digit_t> c) const;  // mod modulus, length n
  void build_tables();

  digit_t p_ = 0;
  digit_t n_ = 0;
  std::uint64_t order_ = 0;
  std::vector<digit_t> modulus_;               // length n+1, little-endian, monic
  std::vector<std::vector<digit_t>> basis_;    // n vectors of length n
  bool power_basis_ = true;
  std::vector<std::vector<digit_t>> basis_inv_;  // inverse of the basis matrix

  // Multiplicative log/exp tables (order <= 2^16): exp_[i] = g^i for
  // i < 2*(order-1); log_[idx] defined for idx != 0.
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint16_t> log_;
  // Small odd-characteristic fields additionally carry an addition table.
  std::vector<std::uint16_t> add_tab_;
  std::vector<std::uint16_t> neg_tab_;
};

// Ring embedding GF(p^m) -> GF(p^{m*r}) fixing GF(p), sending the source
// generator to the smallest-index root of the source modulus.
class FieldEmbedding {
 public:
  FieldEmbedding(std::shared_ptr<const Field> src, std::shared_ptr<const Field> dst);

  const Field& src() const { return *src_; }
  const Field& dst() const { return *dst_; }
  std::shared_ptr<const Field> dst_handle() const { return dst_; }
  Fe map(const Fe& a) const;

 private:
  std::shared_ptr<const Field> src_, dst_;
  Fe theta_;
};

// Modular arithmetic helpers on prime-field digits.
namespace zp {
inline digit_t add(digit_t a, digit_t b, digit_t p) { digit_t s = a + b; return s >= p ? s - p : s; }
inline digit_t sub(digit_t a, digit_t b, digit_t p) { return a >= b ? a - b : a + p - b; }
inline digit_t mul(digit_t a, digit_t b, digit_t p) {
  return static_cast<digit_t>((static_cast<std::uint64_t>(a) * b) % p);
}
digit_t pow(digit_t a, std::uint64_t e, digit_t p);
inline digit_t inv(digit_t a, digit_t p) { return pow(a, p - 2, p); }
bool is_prime(digit_t p);
}  // namespace zp

}  // namespace descentlab
