#include "support/oracles.hpp"

#include <algorithm>
#include <set>

namespace descentlab::oracle {

MultiPoly PolyBasis::reduce(MultiPoly g) const {
  bool changed = true;
  while (changed && !g.is_zero()) {
    changed = false;
    for (const auto& b : rows_) {
      const Monomial& lt = b.leading(Ord::DRL).m;
      Fe c = g.coeff(lt);
      if (!c.is_zero()) {
        g = g - c * b;
        changed = true;
      }
    }
  }
  return g;
}

bool PolyBasis::insert(MultiPoly g) {
  g = reduce(std::move(g));
  if (g.is_zero()) return false;
  g = g.monic(Ord::DRL);
  // clear the new leading monomial from the existing rows
  const Monomial& lt = g.leading(Ord::DRL).m;
  for (auto& b : rows_) {
    Fe c = b.coeff(lt);
    if (!c.is_zero()) b = b - c * g;
  }
  rows_.push_back(std::move(g));
  return true;
}

std::vector<MultiPoly> PolyBasis::sorted_rows() const {
  std::vector<MultiPoly> out = rows_;
  std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return order_cmp(a.leading(Ord::DRL).m, b.leading(Ord::DRL).m, Ord::DRL) < 0;
  });
  return out;
}

PolyBasis closure_vd(const std::vector<MultiPoly>& gens, std::uint32_t nvars, int d) {
  PolyBasis basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (static_cast<int>(*g.degree()) <= d) basis.insert(g);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<MultiPoly> snapshot = basis.rows();
    for (const auto& b : snapshot) {
      if (b.is_zero()) continue;
      int db = static_cast<int>(*b.degree());
      if (db + 1 > d) continue;
      for (std::uint32_t i = 0; i < nvars; ++i) {
        MultiPoly xb = b.mul_term(Monomial::variable(nvars, i), b.ctx()->one());
        if (basis.insert(std::move(xb))) grew = true;
      }
    }
  }
  return basis;
}

std::pair<std::vector<Fe>, std::vector<Fe>> dense_divmod(const std::vector<Fe>& f,
                                                         const std::vector<Fe>& g,
                                                         const Field* k) {
  auto deg = [](const std::vector<Fe>& v) {
    for (std::size_t i = v.size(); i-- > 0;)
      if (!v[i].is_zero()) return static_cast<std::ptrdiff_t>(i);
    return static_cast<std::ptrdiff_t>(-1);
  };
  std::ptrdiff_t dg = deg(g);
  std::vector<Fe> r = f, q;
  std::ptrdiff_t dr = deg(r);
  if (dr >= dg) q.assign(dr - dg + 1, k->zero());
  Fe lg_inv = k->inv(g[dg]);
  while ((dr = deg(r)) >= dg) {
    Fe c = r[dr] * lg_inv;
    std::size_t shift = dr - dg;
    q[shift] = c;
    for (std::ptrdiff_t i = 0; i <= dg; ++i)
      r[shift + i] = r[shift + i] - c * g[i];
  }
  return {q, r};
}

std::vector<Fe> unipoly_to_dense(const UniPoly& f) {
  const Field* k = f.ctx();
  std::uint64_t d = f.degree().value_or(0);
  std::vector<Fe> out(d + 1, k->zero());
  for (const auto& t : f.terms()) out[t.e] = t.c;
  return out;
}

UniPoly dense_to_unipoly(const std::vector<Fe>& c, const Field* k) {
  std::vector<UTerm> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) terms.push_back({i, c[i]});
  return UniPoly(k, std::move(terms));
}

int ref_cmp_drl(const Monomial& a, const Monomial& b) {
  // textbook: higher total degree wins; equal degrees compare reversed
  // exponent vectors lexicographically with the smaller entry winning
  std::uint32_t da = 0, db = 0;
  for (std::uint32_t i = 0; i < a.nvars(); ++i) da += a[i];
  for (std::uint32_t i = 0; i < b.nvars(); ++i) db += b[i];
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] == b[i]) continue;
    return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

int ref_cmp_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Fe random_fe(const Field* f, Rng& rng) {
  return f->element(static_cast<std::uint32_t>(rng.below(f->order())));
}

MultiPoly random_multipoly(const Field* f, std::uint32_t nvars, int max_deg,
                           std::size_t terms, Rng& rng) {
  std::vector<MTerm> t;
  for (std::size_t i = 0; i < terms; ++i) {
    std::vector<std::uint32_t> e(nvars, 0);
    int budget = static_cast<int>(rng.below(max_deg + 1));
    for (int b = 0; b < budget; ++b) e[rng.below(nvars)] += 1;
    Fe c = f->element(1 + static_cast<std::uint32_t>(rng.below(f->order() - 1)));
    t.push_back({Monomial(std::move(e)), c});
  }
  return MultiPoly(f, nvars, std::move(t));
}

PolySystem random_system(std::shared_ptr<const Field> f, std::uint32_t nvars, int max_deg,
                         std::size_t num_gens, Rng& rng) {
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < num_gens; ++i) {
    MultiPoly g(f.get(), nvars);
    while (g.is_zero()) g = random_multipoly(f.get(), nvars, max_deg, 2 + rng.below(3), rng);
    gens.push_back(std::move(g));
  }
  return make_generic(f, nvars, std::move(gens), /*field_equations=*/true);
}

std::optional<SimpleZeroSystem> random_simple_zero(std::shared_ptr<const Field> f,
                                                   std::uint32_t nvars, Rng& rng,
                                                   int attempts) {
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < nvars; ++i) space *= f->order();
  for (int a = 0; a < attempts; ++a) {
    std::vector<Fe> point;
    for (std::uint32_t i = 0; i < nvars; ++i) point.push_back(random_fe(f.get(), rng));
    std::vector<MultiPoly> gens;
    for (std::uint32_t i = 0; i < nvars + 1; ++i) {
      MultiPoly g = random_multipoly(f.get(), nvars, 2, 3, rng);
      Fe v = g.eval(point);
      gens.push_back(g - MultiPoly::constant(f.get(), nvars, v));
    }
    PolySystem sys = make_generic(f, nvars, std::move(gens), /*field_equations=*/true);
    // unique solution check by enumeration
    std::size_t sols = 0;
    std::vector<Fe> x(nvars, f->zero());
    for (std::uint64_t idx = 0; idx < space && sols < 2; ++idx) {
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < nvars; ++i) {
        x[i] = f->element(static_cast<std::uint32_t>(v % f->order()));
        v /= f->order();
      }
      bool zero = true;
      for (const auto& g : sys.gens)
        if (!g.eval(x).is_zero()) {
          zero = false;
          break;
        }
      if (zero) ++sols;
    }
    if (sols == 1) return SimpleZeroSystem{std::move(sys), std::move(point)};
  }
  return std::nullopt;
}

std::size_t rank_by_enumeration(const std::vector<std::vector<Fe>>& rows, const Field* f) {
  std::set<std::vector<std::uint32_t>> span;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) combos *= f->order();
  for (std::uint64_t sel = 0; sel < combos; ++sel) {
    std::uint64_t v = sel;
    std::vector<Fe> acc(rows.empty() ? 0 : rows[0].size(), f->zero());
    for (const auto& row : rows) {
      Fe c = f->element(static_cast<std::uint32_t>(v % f->order()));
      v /= f->order();
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < row.size(); ++j) acc[j] = acc[j] + c * row[j];
    }
    std::vector<std::uint32_t> key;
    for (const auto& e : acc) key.push_back(f->index_of(e));
    span.insert(std::move(key));
  }
  std::size_t r = 0;
  std::uint64_t sz = 1;
  while (sz < span.size()) {
    sz *= f->order();
    ++r;
  }
  return r;
}

}  // namespace descentlab::oracle
