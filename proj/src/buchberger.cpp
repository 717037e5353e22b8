#include "descentlab/buchberger.hpp"

#include <algorithm>

namespace descentlab {

std::uint32_t GroebnerBasis::max_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : polys)
    if (auto dg = g.degree()) d = std::max(d, *dg);
  return d;
}

bool GroebnerBasis::is_unit_ideal() const {
  return polys.size() == 1 && polys.front().is_constant() && !polys.front().is_zero();
}

bool GroebnerBasis::zero_dimensional(std::uint32_t nvars) const {
  if (is_unit_ideal()) return true;
  std::vector<bool> covered(nvars, false);
  for (const auto& g : polys) {
    const Monomial& lt = g.leading(ord).m;
    std::uint32_t nz = 0, var = 0;
    for (std::uint32_t i = 0; i < nvars; ++i)
      if (lt[i]) {
        ++nz;
        var = i;
      }
    if (nz == 1) covered[var] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

std::optional<std::vector<Fe>> GroebnerBasis::simple_zero_point(std::uint32_t nvars) const {
  if (polys.size() != nvars) return std::nullopt;
  std::vector<Fe> point(nvars, Fe());
  std::vector<bool> seen(nvars, false);
  for (const auto& g : polys) {
    if (!g.degree() || *g.degree() != 1 || g.terms().size() > 2) return std::nullopt;
    const Monomial& lt = g.leading(ord).m;
    std::uint32_t var = nvars;
    for (std::uint32_t i = 0; i < nvars; ++i)
      if (lt[i] == 1 && lt.deg() == 1) var = i;
    if (var == nvars || seen[var]) return std::nullopt;
    // monic X_var + c, zero at -c
    const Field* f = g.ctx();
    Fe c = g.coeff(Monomial::unit(nvars));
    point[var] = f->neg(c);
    seen[var] = true;
  }
  return point;
}

MultiPoly normal_form(MultiPoly g, std::span<const MultiPoly> basis, Ord ord) {
  const Field* f = g.ctx();
  std::vector<MTerm> out;
  while (!g.is_zero()) {
    const MTerm lt = g.leading(ord);
    bool reduced = false;
    for (const auto& b : basis) {
      const MTerm& bt = b.leading(ord);
      if (bt.m.divides(lt.m)) {
        g = g - b.mul_term(lt.m.div(bt.m), lt.c / bt.c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      out.push_back(lt);
      g = g - MultiPoly(f, g.nvars(), {lt});
    }
  }
  return MultiPoly(f, g.nvars(), std::move(out));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis buchberger_gb(std::span<const MultiPoly> gens, Ord ord) {
  std::vector<MultiPoly> g;
  for (const auto& e : gens)
    if (!e.is_zero()) g.push_back(e.monic(ord));

  auto pair_less = [ord](const Pair& a, const Pair& b) {
    std::uint32_t da = a.lcm.deg(), db = b.lcm.deg();
    if (da != db) return da < db;
    int c = order_cmp(a.lcm, b.lcm, ord);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = g[i].leading(ord).m;
      const Monomial& lj = g[j].leading(ord).m;
      if (li.coprime(lj)) continue;  // Buchberger's first criterion
      queue.push_back({i, j, li.lcm(lj)});
    }
    std::sort(queue.begin(), queue.end(), pair_less);
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair pr = queue.front();
    queue.erase(queue.begin());
    const MTerm& li = g[pr.i].leading(ord);
    const MTerm& lj = g[pr.j].leading(ord);
    Monomial l = li.m.lcm(lj.m);
    MultiPoly spoly = g[pr.i].mul_term(l.div(li.m), g[pr.i].ctx()->inv(li.c)) -
                      g[pr.j].mul_term(l.div(lj.m), g[pr.j].ctx()->inv(lj.c));
    MultiPoly r = normal_form(std::move(spoly), g, ord);
    if (!r.is_zero()) {
      g.push_back(r.monic(ord));
      push_pairs(g.size() - 1);
    }
  }

  // Interreduce to the unique reduced basis.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<MultiPoly> others;
      others.reserve(g.size() - 1);
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      MultiPoly r = normal_form(g[i], others, ord);
      if (r.is_zero()) {
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = r.monic(ord);
      if (r != g[i]) {
        g[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(g.begin(), g.end(), [ord](const MultiPoly& a, const MultiPoly& b) {
    return order_cmp(a.leading(ord).m, b.leading(ord).m, ord) < 0;
  });

  GroebnerBasis gb;
  gb.ord = ord;
  gb.polys = std::move(g);
  gb.reduced = true;
  return gb;
}

GroebnerBasis buchberger_gb(const PolySystem& sys, Ord ord) {
  return buchberger_gb(std::span<const MultiPoly>(sys.gens), ord);
}

}  // namespace descentlab
