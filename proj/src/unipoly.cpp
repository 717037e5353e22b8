#include "descentlab/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace descentlab {

namespace {

void check_ctx(const UniPoly& a, const UniPoly& b) {
  require(a.ctx() == b.ctx() || a.ctx()->same(*b.ctx()), Errc::MismatchedField,
          "univariate operands over different fields");
}

std::vector<UTerm> normalize(std::vector<UTerm> t) {
  std::sort(t.begin(), t.end(), [](const UTerm& a, const UTerm& b) { return a.e > b.e; });
  std::vector<UTerm> out;
  for (auto& term : t) {
    if (term.c.is_zero()) continue;
    if (!out.empty() && out.back().e == term.e) {
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

UniPoly::UniPoly(const Field* k, std::vector<UTerm> terms)
    : k_(k), t_(normalize(std::move(terms))) {}

UniPoly UniPoly::monomial(const Field* k, std::uint64_t e, Fe c) {
  return UniPoly(k, {{e, std::move(c)}});
}

UniPoly UniPoly::x_pow(const Field* k, std::uint64_t e) {
  return UniPoly(k, {{e, k->one()}});
}

UniPoly UniPoly::constant(const Fe& c) { return UniPoly(c.ctx(), {{0, c}}); }

UniPoly UniPoly::field_equation(const Field* k) {
  return UniPoly(k, {{k->order(), k->one()}, {1, k->neg(k->one())}});
}

std::optional<std::uint64_t> UniPoly::degree() const {
  if (t_.empty()) return std::nullopt;
  return t_.front().e;
}

Fe UniPoly::leading_coeff() const {
  require(!t_.empty(), Errc::ZeroPolynomial, "leading coefficient of zero");
  return t_.front().c;
}

Fe UniPoly::coeff(std::uint64_t e) const {
  for (const auto& t : t_)
    if (t.e == e) return t.c;
  return k_->zero();
}

UniPoly UniPoly::monic() const {
  require(!t_.empty(), Errc::ZeroPolynomial, "monic of zero");
  if (t_.front().c.is_one()) return *this;
  Fe s = k_->inv(t_.front().c);
  std::vector<UTerm> out;
  out.reserve(t_.size());
  for (const auto& t : t_) out.push_back({t.e, s * t.c});
  return UniPoly(k_, std::move(out));
}

bool UniPoly::operator==(const UniPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

std::string UniPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i) os << " + ";
    os << t_[i].c.str() << "*X^" << t_[i].e;
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  check_ctx(a, b);
  std::vector<UTerm> t = a.terms();
  t.insert(t.end(), b.terms().begin(), b.terms().end());
  return UniPoly(a.ctx(), std::move(t));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  check_ctx(a, b);
  std::vector<UTerm> t = a.terms();
  for (const auto& term : b.terms()) t.push_back({term.e, -term.c});
  return UniPoly(a.ctx(), std::move(t));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  check_ctx(a, b);
  std::vector<UTerm> t;
  t.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) t.push_back({ta.e + tb.e, ta.c * tb.c});
  return UniPoly(a.ctx(), std::move(t));
}

UniPoly operator*(const Fe& c, const UniPoly& a) {
  std::vector<UTerm> t;
  for (const auto& term : a.terms()) t.push_back({term.e, c * term.c});
  return UniPoly(a.ctx(), std::move(t));
}

std::pair<UniPoly, UniPoly> up_divmod(const UniPoly& h1, const UniPoly& h2) {
  check_ctx(h1, h2);
  require(!h2.is_zero(), Errc::DivisionByZero, "division by zero polynomial");
  const Field* k = h1.ctx();
  std::uint64_t d2 = *h2.degree();
  Fe lc_inv = k->inv(h2.leading_coeff());

  std::map<std::uint64_t, Fe, std::greater<>> rem;
  for (const auto& t : h1.terms()) rem.emplace(t.e, t.c);
  std::vector<UTerm> quot;

  while (!rem.empty() && rem.begin()->first >= d2) {
    std::uint64_t e = rem.begin()->first;
    Fe q = rem.begin()->second * lc_inv;
    std::uint64_t shift = e - d2;
    quot.push_back({shift, q});
    for (const auto& t : h2.terms()) {
      Fe delta = q * t.c;
      auto it = rem.find(shift + t.e);
      if (it == rem.end()) {
        Fe nd = -delta;
        if (!nd.is_zero()) rem.emplace(shift + t.e, std::move(nd));
      } else {
        Fe nv = it->second - delta;
        if (nv.is_zero()) rem.erase(it);
        else it->second = std::move(nv);
      }
    }
  }

  std::vector<UTerm> rt;
  rt.reserve(rem.size());
  for (auto& [e, c] : rem) rt.push_back({e, std::move(c)});
  return {UniPoly(k, std::move(quot)), UniPoly(k, std::move(rt))};
}

UniPoly up_mod(const UniPoly& h1, const UniPoly& h2) { return up_divmod(h1, h2).second; }

std::pair<UniPoly, GcdTrace> up_gcd(const UniPoly& h1, const UniPoly& h2) {
  check_ctx(h1, h2);
  require(!h1.is_zero() || !h2.is_zero(), Errc::ZeroPolynomial, "gcd(0, 0)");
  GcdTrace trace;
  trace.remainders.push_back(h1);
  trace.remainders.push_back(h2);
  UniPoly prev = h1, cur = h2;
  while (!cur.is_zero()) {
    UniPoly next = up_mod(prev, cur);
    trace.remainders.push_back(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  trace.gcd = prev.monic();
  return {trace.gcd, trace};
}

std::uint32_t up_weight_exp(std::uint64_t e, std::uint32_t q) {
  std::uint32_t w = 0;
  while (e) {
    w += static_cast<std::uint32_t>(e % q);
    e /= q;
  }
  return w;
}

std::uint32_t up_weight(const UniPoly& f) {
  require(!f.is_zero(), Errc::ZeroPolynomial, "weight of zero");
  std::uint32_t q = f.ctx()->p();
  std::uint32_t w = 0;
  for (const auto& t : f.terms()) w = std::max(w, up_weight_exp(t.e, q));
  return w;
}

Fe up_eval(const UniPoly& f, const Fe& x) {
  const Field* k = f.ctx();
  Fe acc = k->zero();
  for (const auto& t : f.terms()) acc = acc + t.c * k->pow(x, t.e);
  return acc;
}

std::vector<Fe> up_roots(const UniPoly& f) {
  const Field* k = f.ctx();
  require(!f.is_zero(), Errc::ZeroPolynomial, "roots of zero");
  require(k->order() <= (1u << 16), Errc::FieldTooLarge, "root search beyond desk scale");
  std::vector<Fe> roots;
  for (std::uint32_t idx = 0; idx < k->order(); ++idx) {
    Fe x = k->element(idx);
    if (up_eval(f, x).is_zero()) roots.push_back(std::move(x));
  }
  return roots;
}

}  // namespace descentlab
