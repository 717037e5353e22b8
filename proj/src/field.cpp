#include "descentlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace descentlab {

namespace zp {

digit_t pow(digit_t a, std::uint64_t e, digit_t p) {
  std::uint64_t base = a % p, r = 1;
  while (e) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return static_cast<digit_t>(r);
}

bool is_prime(digit_t p) {
  if (p < 2) return false;
  for (digit_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace zp

namespace {

using Poly = std::vector<digit_t>;  // dense little-endian over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly pmul(const Poly& a, const Poly& b, digit_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = zp::add(r[i + j], zp::mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

// Remainder of a by monic-leading b.
Poly pmod(Poly a, const Poly& b, digit_t p) {
  trim(a);
  digit_t lead_inv = zp::inv(b.back(), p);
  while (a.size() >= b.size()) {
    digit_t c = zp::mul(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = zp::sub(a[shift + i], zp::mul(c, b[i], p), p);
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg(m)/2.
bool irreducible(const Poly& m, digit_t p) {
  std::size_t n = m.size() - 1;
  if (n == 1) return true;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) {
      count *= p;
      if (count > (1u << 20)) fail(Errc::FieldTooLarge, "irreducibility check beyond desk scale");
    }
    Poly g(k + 1, 0);
    g[k] = 1;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      std::uint64_t v = enc;
      for (std::size_t i = 0; i < k; ++i) {
        g[i] = static_cast<digit_t>(v % p);
        v /= p;
      }
      if (pmod(m, g, p).empty()) return false;
    }
  }
  return true;
}

// Gauss-Jordan inverse of an n x n matrix over GF(p); nullopt when singular.
std::optional<std::vector<std::vector<digit_t>>> mat_inverse(
    std::vector<std::vector<digit_t>> a, digit_t p) {
  std::size_t n = a.size();
  std::vector<std::vector<digit_t>> inv(n, std::vector<digit_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    digit_t s = zp::inv(a[col][col], p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = zp::mul(a[col][j], s, p);
      inv[col][j] = zp::mul(inv[col][j], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      digit_t c = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = zp::sub(a[r][j], zp::mul(c, a[col][j], p), p);
        inv[r][j] = zp::sub(inv[r][j], zp::mul(c, inv[col][j], p), p);
      }
    }
  }
  return inv;
}

constexpr std::uint64_t kMaxTableOrder = 1u << 16;
constexpr std::uint64_t kMaxAddTableOrder = 1u << 11;

}  // namespace

Fe::Fe(const Field* f, std::vector<digit_t> digits) : f_(f), c_(std::move(digits)) {}

bool Fe::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](digit_t d) { return d == 0; });
}

bool Fe::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](digit_t d) { return d == 0; });
}

bool Fe::operator==(const Fe& o) const {
  if (f_ != o.f_ && (!f_ || !o.f_ || !f_->same(*o.f_))) return false;
  return c_ == o.c_;
}

bool Fe::operator<(const Fe& o) const {
  return f_->index_of(*this) < f_->index_of(o);
}

std::string Fe::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << "]";
  return os.str();
}

Fe operator+(const Fe& a, const Fe& b) { return a.field().add(a, b); }
Fe operator-(const Fe& a, const Fe& b) { return a.field().sub(a, b); }
Fe operator*(const Fe& a, const Fe& b) { return a.field().mul(a, b); }
Fe operator/(const Fe& a, const Fe& b) { return a.field().div(a, b); }
Fe operator-(const Fe& a) { return a.field().neg(a); }

std::shared_ptr<const Field> Field::make_prime(digit_t p) {
  return std::shared_ptr<const Field>(new Field(p, {0, 1}, {}));
}

std::shared_ptr<const Field> Field::make(digit_t p, std::vector<digit_t> modulus) {
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus), {}));
}

std::shared_ptr<const Field> Field::make(digit_t p, std::vector<digit_t> modulus,
                                         std::vector<std::vector<digit_t>> basis) {
  return std::shared_ptr<const Field>(new Field(p, std::move(modulus), std::move(basis)));
}

std::shared_ptr<const Field> Field::make_default(digit_t p, digit_t n) {
  require(n >= 1 && n <= 24, Errc::ParamOutOfRange, "extension degree");
  if (n == 1) return make_prime(p);
  std::uint64_t count = 1;
  for (digit_t i = 0; i < n; ++i) count *= p;
  std::vector<digit_t> m(n + 1, 0);
  m[n] = 1;
  for (std::uint64_t enc = 1; enc < count; ++enc) {
    std::uint64_t v = enc;
    for (digit_t i = 0; i < n; ++i) {
      m[i] = static_cast<digit_t>(v % p);
      v /= p;
    }
    if (m[0] == 0) continue;
    if (irreducible(m, p)) return make(p, m);
  }
  fail(Errc::Irreducibility, "no irreducible polynomial found");
}

Field::Field(digit_t p, std::vector<digit_t> modulus, std::vector<std::vector<digit_t>> basis)
    : p_(p), modulus_(std::move(modulus)) {
  require(zp::is_prime(p_), Errc::ParamOutOfRange, "p must be prime");
  require(modulus_.size() >= 2, Errc::ParamOutOfRange, "modulus must have degree >= 1");
  for (auto& d : modulus_) d %= p_;
  n_ = static_cast<digit_t>(modulus_.size() - 1);
  require(modulus_.back() == 1, Errc::ParamOutOfRange, "modulus must be monic");
  require(n_ == 1 || irreducible(modulus_, p_), Errc::Irreducibility,
          "modulus is reducible over GF(p)");

  order_ = 1;
  for (digit_t i = 0; i < n_; ++i) {
    order_ *= p_;
    require(order_ <= (1ull << 40), Errc::FieldTooLarge, "field order beyond desk scale");
  }

  if (basis.empty()) {
    basis_.assign(n_, std::vector<digit_t>(n_, 0));
    for (digit_t i = 0; i < n_; ++i) basis_[i][i] = 1;
    power_basis_ = true;
    basis_inv_ = basis_;
  } else {
    require(basis.size() == n_, Errc::ParamOutOfRange, "basis must have n elements");
    basis_ = std::move(basis);
    for (auto& v : basis_) {
      require(v.size() == n_, Errc::ParamOutOfRange, "basis element length");
      for (auto& d : v) d %= p_;
    }
    power_basis_ = true;
    for (digit_t i = 0; i < n_ && power_basis_; ++i)
      for (digit_t j = 0; j < n_; ++j)
        if (basis_[i][j] != (i == j ? 1u : 0u)) { power_basis_ = false; break; }
    // Columns of the change-of-basis matrix are the basis vectors.
    std::vector<std::vector<digit_t>> bm(n_, std::vector<digit_t>(n_, 0));
    for (digit_t j = 0; j < n_; ++j)
      for (digit_t i = 0; i < n_; ++i) bm[i][j] = basis_[j][i];
    auto inv = mat_inverse(bm, p_);
    require(inv.has_value(), Errc::SingularMatrix, "basis is linearly dependent");
    basis_inv_ = *inv;
  }

  if (order_ <= kMaxTableOrder) build_tables();
}

bool Field::same(const Field& o) const {
  return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_ && basis_ == o.basis_;
}

Fe Field::zero() const { return Fe(this, std::vector<digit_t>(n_, 0)); }

Fe Field::one() const {
  std::vector<digit_t> c(n_, 0);
  c[0] = 1;
  return Fe(this, std::move(c));
}

Fe Field::gen() const {
  std::vector<digit_t> c(n_ + 1, 0);
  c[1] = 1;
  return Fe(this, reduce_poly(std::move(c)));
}

Fe Field::from_digits(std::vector<digit_t> c) const {
  for (auto& d : c) d %= p_;
  return Fe(this, reduce_poly(std::move(c)));
}

Fe Field::from_int(std::uint64_t v) const {
  std::vector<digit_t> c(n_, 0);
  c[0] = static_cast<digit_t>(v % p_);
  return Fe(this, std::move(c));
}

std::uint32_t Field::index_of(const Fe& a) const {
  std::uint64_t idx = 0;
  for (std::size_t j = a.c_.size(); j-- > 0;) idx = idx * p_ + a.c_[j];
  return static_cast<std::uint32_t>(idx);
}

Fe Field::element(std::uint32_t idx) const {
  std::vector<digit_t> c(n_, 0);
  for (digit_t j = 0; j < n_; ++j) {
    c[j] = idx % p_;
    idx /= p_;
  }
  return Fe(this, std::move(c));
}

void Field::check_element(const Fe& a) const {
  require(a.f_ == this || (a.f_ && a.f_->same(*this)), Errc::MismatchedField,
          "element belongs to a different field");
}

std::vector<digit_t> Field::reduce_poly(std::vector<digit_t> c) const {
  if (c.size() > n_) {
    c = pmod(std::move(c), modulus_, p_);
  }
  c.resize(n_, 0);
  return c;
}

Fe Field::add(const Fe& a, const Fe& b) const {
  check_element(a);
  check_element(b);
  std::vector<digit_t> c(n_);
  for (digit_t i = 0; i < n_; ++i) c[i] = zp::add(a.c_[i], b.c_[i], p_);
  return Fe(this, std::move(c));
}

Fe Field::sub(const Fe& a, const Fe& b) const {
  check_element(a);
  check_element(b);
  std::vector<digit_t> c(n_);
  for (digit_t i = 0; i < n_; ++i) c[i] = zp::sub(a.c_[i], b.c_[i], p_);
  return Fe(this, std::move(c));
}

Fe Field::neg(const Fe& a) const {
  check_element(a);
  std::vector<digit_t> c(n_);
  for (digit_t i = 0; i < n_; ++i) c[i] = a.c_[i] ? p_ - a.c_[i] : 0;
  return Fe(this, std::move(c));
}

Fe Field::mul(const Fe& a, const Fe& b) const {
  check_element(a);
  check_element(b);
  if (has_tables()) return element(mul_idx(index_of(a), index_of(b)));
  Poly prod = pmul(a.c_, b.c_, p_);
  return Fe(this, reduce_poly(std::move(prod)));
}

Fe Field::inv(const Fe& a) const {
  check_element(a);
  require(!a.is_zero(), Errc::DivisionByZero, "inverse of zero");
  if (has_tables()) return element(inv_idx(index_of(a)));
  return pow(a, order_ - 2);
}

Fe Field::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe Field::pow(const Fe& a, std::uint64_t e) const {
  check_element(a);
  Fe r = one();
  Fe base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Fe Field::frobenius(const Fe& a) const { return pow(a, p_); }

std::vector<digit_t> Field::decompose(const Fe& a) const {
  check_element(a);
  if (power_basis_) return a.c_;
  std::vector<digit_t> out(n_, 0);
  for (digit_t i = 0; i < n_; ++i)
    for (digit_t j = 0; j < n_; ++j)
      out[i] = zp::add(out[i], zp::mul(basis_inv_[i][j], a.c_[j], p_), p_);
  return out;
}

Fe Field::compose(std::span<const digit_t> coords) const {
  require(coords.size() == n_, Errc::LengthMismatch, "coordinate count");
  std::vector<digit_t> c(n_, 0);
  for (digit_t j = 0; j < n_; ++j) {
    digit_t s = coords[j] % p_;
    if (!s) continue;
    for (digit_t i = 0; i < n_; ++i)
      c[i] = zp::add(c[i], zp::mul(s, basis_[j][i], p_), p_);
  }
  return Fe(this, std::move(c));
}

void Field::build_tables() {
  std::uint32_t ord = static_cast<std::uint32_t>(order_);
  // Factor the group order, then find a generator.
  std::vector<std::uint32_t> prime_factors;
  std::uint32_t m = ord - 1;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);

  auto mul_slow = [&](std::uint32_t a, std::uint32_t b) {
    Poly prod = pmul(element(a).c_, element(b).c_, p_);
    Fe r(this, reduce_poly(std::move(prod)));
    return index_of(r);
  };
  auto pow_slow = [&](std::uint32_t a, std::uint32_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };

  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < ord; ++cand) {
    bool primitive = true;
    for (std::uint32_t f : prime_factors)
      if (pow_slow(cand, (ord - 1) / f) == 1) { primitive = false; break; }
    if (primitive) { g = cand; break; }
  }
  if (!g) g = 1;  // GF(2): trivial group

  exp_.assign(2 * (ord - 1), 0);
  log_.assign(ord, 0);
  std::uint32_t acc = 1;
  for (std::uint32_t i = 0; i < ord - 1; ++i) {
    exp_[i] = static_cast<std::uint16_t>(acc);
    log_[acc] = static_cast<std::uint16_t>(i);
    acc = mul_slow(acc, g);
  }
  for (std::uint32_t i = 0; i < ord - 1; ++i) exp_[ord - 1 + i] = exp_[i];

  if (p_ != 2 && order_ <= kMaxAddTableOrder) {
    add_tab_.assign(static_cast<std::size_t>(ord) * ord, 0);
    neg_tab_.assign(ord, 0);
    for (std::uint32_t a = 0; a < ord; ++a) {
      neg_tab_[a] = static_cast<std::uint16_t>(index_of(neg(element(a))));
      for (std::uint32_t b = 0; b <= a; ++b) {
        auto s = static_cast<std::uint16_t>(index_of(add(element(a), element(b))));
        add_tab_[static_cast<std::size_t>(a) * ord + b] = s;
        add_tab_[static_cast<std::size_t>(b) * ord + a] = s;
      }
    }
  }
}

std::uint32_t Field::add_idx(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (!add_tab_.empty()) return add_tab_[static_cast<std::size_t>(a) * order_ + b];
  return index_of(add(element(a), element(b)));
}

std::uint32_t Field::sub_idx(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  return add_idx(a, neg_idx(b));
}

std::uint32_t Field::neg_idx(std::uint32_t a) const {
  if (p_ == 2) return a;
  if (!neg_tab_.empty()) return neg_tab_[a];
  return index_of(neg(element(a)));
}

std::uint32_t Field::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (!a || !b) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t Field::inv_idx(std::uint32_t a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  std::uint32_t ord = static_cast<std::uint32_t>(order_);
  return exp_[(ord - 1 - log_[a]) % (ord - 1)];
}

std::uint32_t Field::div_idx(std::uint32_t a, std::uint32_t b) const {
  return mul_idx(a, inv_idx(b));
}

FieldEmbedding::FieldEmbedding(std::shared_ptr<const Field> src,
                               std::shared_ptr<const Field> dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
  require(src_->p() == dst_->p(), Errc::MismatchedField, "characteristic differs");
  require(dst_->n() % src_->n() == 0, Errc::ParamOutOfRange,
          "no embedding: source degree does not divide target degree");
  require(dst_->order() <= (1u << 16), Errc::FieldTooLarge, "embedding root search");
  const auto& m = src_->modulus();
  for (std::uint32_t idx = 0; idx < dst_->order(); ++idx) {
    Fe x = dst_->element(idx);
    Fe acc = dst_->zero();
    for (std::size_t j = m.size(); j-- > 0;)
      acc = dst_->add(dst_->mul(acc, x), dst_->from_int(m[j]));
    if (acc.is_zero()) {
      theta_ = x;
      return;
    }
  }
  fail(Errc::ParamOutOfRange, "source modulus has no root in target field");
}

Fe FieldEmbedding::map(const Fe& a) const {
  Fe acc = dst_->zero();
  const auto& c = a.digits();
  for (std::size_t j = c.size(); j-- > 0;)
    acc = dst_->add(dst_->mul(acc, theta_), dst_->from_int(c[j]));
  return acc;
}

}  // namespace descentlab
