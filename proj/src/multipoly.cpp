#include "descentlab/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace descentlab {

Monomial Monomial::variable(std::uint32_t nvars, std::uint32_t i, std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e[i] = power;
  return Monomial(std::move(e));
}

std::uint32_t Monomial::deg() const {
  std::uint32_t d = 0;
  for (auto e : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::div(const Monomial& o) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] - o.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
  std::vector<std::uint32_t> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], o.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i]) continue;
    if (any) os << "*";
    os << "X" << i;
    if (e_[i] > 1) os << "^" << e_[i];
    any = true;
  }
  return any ? os.str() : "1";
}

bool ord_degree_compatible(Ord o) { return o == Ord::DRL; }

int order_cmp(const Monomial& u, const Monomial& v, Ord o) {
  if (o == Ord::LEX) {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
      if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
    }
    return 0;
  }
  std::uint32_t du = u.deg(), dv = v.deg();
  if (du != dv) return du > dv ? 1 : -1;
  for (std::size_t i = u.nvars(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] < v[i] ? 1 : -1;
  }
  return 0;
}

namespace {

bool drl_desc(const MTerm& a, const MTerm& b) { return order_cmp(a.m, b.m, Ord::DRL) > 0; }

void check_ctx(const MultiPoly& a, const MultiPoly& b) {
  require(a.nvars() == b.nvars() &&
              (a.ctx() == b.ctx() || (a.ctx() && b.ctx() && a.ctx()->same(*b.ctx()))),
          Errc::MismatchedContext, "polynomials from different rings");
}

std::vector<MTerm> normalize(std::vector<MTerm> t) {
  std::sort(t.begin(), t.end(), drl_desc);
  std::vector<MTerm> out;
  for (auto& term : t) {
    if (term.c.is_zero()) continue;
    if (!out.empty() && out.back().m == term.m) {
      Fe s = out.back().c + term.c;
      if (s.is_zero()) out.pop_back();
      else out.back().c = s;
    } else {
      out.push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(const Field* f, std::uint32_t nvars, std::vector<MTerm> terms)
    : f_(f), nvars_(nvars), t_(normalize(std::move(terms))) {}

MultiPoly MultiPoly::constant(const Field* f, std::uint32_t nvars, const Fe& c) {
  return MultiPoly(f, nvars, {{Monomial::unit(nvars), c}});
}

MultiPoly MultiPoly::variable(const Field* f, std::uint32_t nvars, std::uint32_t i) {
  return MultiPoly(f, nvars, {{Monomial::variable(nvars, i), f->one()}});
}

std::optional<std::uint32_t> MultiPoly::degree() const {
  if (t_.empty()) return std::nullopt;
  return t_.front().m.deg();  // DRL-sorted: the first term has maximal degree
}

const MTerm& MultiPoly::leading(Ord o) const {
  require(!t_.empty(), Errc::ZeroPolynomial, "leading term of zero");
  if (o == Ord::DRL) return t_.front();
  std::size_t best = 0;
  for (std::size_t i = 1; i < t_.size(); ++i)
    if (order_cmp(t_[i].m, t_[best].m, o) > 0) best = i;
  return t_[best];
}

Fe MultiPoly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return f_->zero();
}

bool MultiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.front().m.is_unit());
}

MultiPoly MultiPoly::monic(Ord o) const {
  Fe lc = leading(o).c;
  if (lc.is_one()) return *this;
  return f_->inv(lc) * *this;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Fe& c) const {
  if (c.is_zero()) return MultiPoly(f_, nvars_);
  std::vector<MTerm> t;
  t.reserve(t_.size());
  for (const auto& term : t_) t.push_back({term.m * m, term.c * c});
  return MultiPoly(f_, nvars_, std::move(t));
}

MultiPoly MultiPoly::reduce_var_exponents(std::uint32_t q) const {
  std::vector<MTerm> t;
  t.reserve(t_.size());
  for (const auto& term : t_) {
    std::vector<std::uint32_t> e = term.m.exps();
    for (auto& a : e)
      if (a >= q) a = (a - 1) % (q - 1) + 1;
    t.push_back({Monomial(std::move(e)), term.c});
  }
  return MultiPoly(f_, nvars_, std::move(t));
}

Fe MultiPoly::eval(std::span<const Fe> point) const {
  require(point.size() == nvars_, Errc::LengthMismatch, "evaluation point arity");
  Fe acc = f_->zero();
  for (const auto& term : t_) {
    Fe v = term.c;
    for (std::uint32_t i = 0; i < nvars_; ++i)
      if (term.m[i]) v = v * f_->pow(point[i], term.m[i]);
    acc = acc + v;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (t_.size() != o.t_.size() || nvars_ != o.nvars_) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i) os << " + ";
    os << t_[i].c.str() << "*" << t_[i].m.str();
  }
  return os.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_ctx(a, b);
  std::vector<MTerm> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return MultiPoly(a.ctx(), a.nvars(), std::move(t));
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  check_ctx(a, b);
  std::vector<MTerm> t = a.terms();
  for (const auto& term : b.terms()) t.push_back({term.m, -term.c});
  return MultiPoly(a.ctx(), a.nvars(), std::move(t));
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_ctx(a, b);
  std::vector<MTerm> t;
  t.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) t.push_back({ta.m * tb.m, ta.c * tb.c});
  return MultiPoly(a.ctx(), a.nvars(), std::move(t));
}

MultiPoly operator*(const Fe& c, const MultiPoly& a) {
  std::vector<MTerm> t;
  t.reserve(a.terms().size());
  for (const auto& term : a.terms()) t.push_back({term.m, c * term.c});
  return MultiPoly(a.ctx(), a.nvars(), std::move(t));
}

MultiPoly operator-(const MultiPoly& a) {
  if (!a.ctx()) return a;
  return a.ctx()->neg(a.ctx()->one()) * a;
}

namespace {

std::optional<std::vector<std::vector<Fe>>> fe_mat_inverse(std::vector<std::vector<Fe>> a,
                                                           const Field* f) {
  std::size_t n = a.size();
  std::vector<std::vector<Fe>> inv(n, std::vector<Fe>(n, f->zero()));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = f->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Fe s = f->inv(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = s * a[col][j];
      inv[col][j] = s * inv[col][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Fe c = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - c * a[col][j];
        inv[r][j] = inv[r][j] - c * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

AffineMap::AffineMap(const Field* f, std::vector<std::vector<Fe>> a, std::vector<Fe> b)
    : f_(f), n_(static_cast<std::uint32_t>(a.size())), a_(std::move(a)), b_(std::move(b)) {
  require(b_.size() == n_, Errc::LengthMismatch, "translation size");
  for (const auto& row : a_)
    require(row.size() == n_, Errc::LengthMismatch, "matrix row size");
  require(fe_mat_inverse(a_, f_).has_value(), Errc::SingularMatrix, "affine map matrix");
}

AffineMap AffineMap::identity(const Field* f, std::uint32_t n) {
  std::vector<std::vector<Fe>> a(n, std::vector<Fe>(n, f->zero()));
  for (std::uint32_t i = 0; i < n; ++i) a[i][i] = f->one();
  return AffineMap(f, std::move(a), std::vector<Fe>(n, f->zero()));
}

AffineMap AffineMap::sample(const Field* f, std::uint32_t n, Rng& rng, bool translate) {
  for (;;) {
    std::vector<std::vector<Fe>> a(n, std::vector<Fe>(n, f->zero()));
    for (auto& row : a)
      for (auto& x : row) x = f->element(static_cast<std::uint32_t>(rng.below(f->order())));
    if (!fe_mat_inverse(a, f).has_value()) continue;
    std::vector<Fe> b(n, f->zero());
    if (translate)
      for (auto& x : b) x = f->element(static_cast<std::uint32_t>(rng.below(f->order())));
    return AffineMap(f, std::move(a), std::move(b));
  }
}

AffineMap AffineMap::inverse() const {
  auto ainv = fe_mat_inverse(a_, f_);
  std::vector<Fe> b(n_, f_->zero());
  for (std::uint32_t i = 0; i < n_; ++i) {
    Fe acc = f_->zero();
    for (std::uint32_t j = 0; j < n_; ++j) acc = acc + (*ainv)[i][j] * b_[j];
    b[i] = -acc;
  }
  return AffineMap(f_, std::move(*ainv), std::move(b));
}

std::vector<Fe> AffineMap::apply_point(std::span<const Fe> x) const {
  require(x.size() == n_, Errc::LengthMismatch, "point arity");
  std::vector<Fe> y(n_, f_->zero());
  for (std::uint32_t i = 0; i < n_; ++i) {
    Fe acc = b_[i];
    for (std::uint32_t j = 0; j < n_; ++j) acc = acc + a_[i][j] * x[j];
    y[i] = acc;
  }
  return y;
}

MultiPoly AffineMap::apply(const MultiPoly& g) const {
  require(g.nvars() == n_, Errc::MismatchedContext, "variable count");
  require(g.ctx() == f_ || g.ctx()->same(*f_), Errc::MismatchedContext,
          "affine map over a different field; embed the polynomial first");
  // Images of the variables.
  std::vector<MultiPoly> lin;
  lin.reserve(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::vector<MTerm> t;
    for (std::uint32_t j = 0; j < n_; ++j)
      if (!a_[i][j].is_zero()) t.push_back({Monomial::variable(n_, j), a_[i][j]});
    if (!b_[i].is_zero()) t.push_back({Monomial::unit(n_), b_[i]});
    lin.emplace_back(f_, n_, std::move(t));
  }
  // Cached powers of each image, grown on demand.
  std::vector<std::vector<MultiPoly>> pows(n_);
  auto power = [&](std::uint32_t i, std::uint32_t e) -> const MultiPoly& {
    auto& cache = pows[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(f_, n_, f_->one()));
    while (cache.size() <= e) cache.push_back(cache.back() * lin[i]);
    return cache[e];
  };
  MultiPoly acc(f_, n_);
  for (const auto& term : g.terms()) {
    MultiPoly prod = MultiPoly::constant(f_, n_, term.c);
    for (std::uint32_t i = 0; i < n_; ++i)
      if (term.m[i]) prod = prod * power(i, term.m[i]);
    acc = acc + prod;
  }
  return acc;
}

MultiPoly mp_embed(const MultiPoly& g, const FieldEmbedding& emb) {
  std::vector<MTerm> t;
  t.reserve(g.terms().size());
  for (const auto& term : g.terms()) t.push_back({term.m, emb.map(term.c)});
  return MultiPoly(&emb.dst(), g.nvars(), std::move(t));
}

}  // namespace descentlab
