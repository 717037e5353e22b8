#include "descentlab/descent.hpp"

#include <algorithm>

namespace descentlab {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::UNIVARIATE_F: return "UNIVARIATE_F";
    case Flavor::F_f: return "F_f";
    case Flavor::WEIL_Fprime: return "WEIL_Fprime";
    case Flavor::WEIL_Fprime_f: return "WEIL_Fprime_f";
    case Flavor::FAKE_Fbar: return "FAKE_Fbar";
    case Flavor::FAKE_Fbar_f: return "FAKE_Fbar_f";
    case Flavor::GENERIC: return "GENERIC";
  }
  return "GENERIC";
}

Flavor flavor_from_name(const std::string& s) {
  for (Flavor f : {Flavor::UNIVARIATE_F, Flavor::F_f, Flavor::WEIL_Fprime, Flavor::WEIL_Fprime_f,
                   Flavor::FAKE_Fbar, Flavor::FAKE_Fbar_f, Flavor::GENERIC})
    if (s == flavor_name(f)) return f;
  fail(Errc::ConfigError, "unknown flavor: " + s);
}

bool flavor_univariate(Flavor f) { return f == Flavor::UNIVARIATE_F || f == Flavor::F_f; }

std::uint32_t PolySystem::max_gen_degree() const {
  std::uint32_t d = 0;
  for (const auto& g : gens)
    if (auto dg = g.degree()) d = std::max(d, *dg);
  return d;
}

int PolySystem::default_dmax() const {
  return static_cast<int>(nvars * (q() - 1) + max_gen_degree());
}

namespace {

// Reduced exponent e' with X^{e'} = X^e mod X^{q^n} - X; e = 0 stays 0.
std::uint64_t reduce_exponent(std::uint64_t e, std::uint64_t group_order) {
  if (e == 0) return 0;
  std::uint64_t r = e % group_order;
  return r == 0 ? group_order : r;
}

MultiPoly to_univariate_gen(const UniPoly& f) {
  std::vector<MTerm> t;
  for (const auto& term : f.terms()) {
    require(term.e <= 0x7fffffffULL, Errc::ParamOutOfRange,
            "univariate exponent too large for the matrix engine");
    t.push_back({Monomial({static_cast<std::uint32_t>(term.e)}), term.c});
  }
  return MultiPoly(f.ctx(), 1, std::move(t));
}

}  // namespace

std::vector<MultiPoly> weil_descend(const UniPoly& f, std::shared_ptr<const Field> base) {
  const Field* k = f.ctx();
  std::uint32_t q = k->p();
  std::uint32_t n = k->n();
  require(base->is_prime_field() && base->p() == q, Errc::MismatchedField,
          "descent target must be the prime subfield");

  // Mod the field equations, X^{q^i} = sum_j alpha_j^{q^i} X_j is linear; a
  // reduced exponent e' of weight w therefore expands into a product of w
  // linear forms over k with all variable degrees < q.
  std::vector<MultiPoly> frob_lines;  // L_i for i = 0..n-1
  frob_lines.reserve(n);
  {
    std::vector<Fe> alpha_pow;
    alpha_pow.reserve(n);
    for (std::uint32_t j = 0; j < n; ++j) {
      std::vector<digit_t> coords(n, 0);
      coords[j] = 1;
      alpha_pow.push_back(k->compose(coords));
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      std::vector<MTerm> t;
      for (std::uint32_t j = 0; j < n; ++j)
        if (!alpha_pow[j].is_zero()) t.push_back({Monomial::variable(n, j), alpha_pow[j]});
      frob_lines.emplace_back(k, n, std::move(t));
      for (auto& a : alpha_pow) a = k->frobenius(a);
    }
  }

  MultiPoly expanded(k, n);
  for (const auto& term : f.terms()) {
    if (term.e == 0) {
      expanded = expanded + MultiPoly::constant(k, n, term.c);
      continue;
    }
    std::uint64_t e = reduce_exponent(term.e, k->order() - 1);
    MultiPoly prod = MultiPoly::constant(k, n, term.c);
    std::uint32_t i = 0;
    while (e) {
      std::uint32_t digit = static_cast<std::uint32_t>(e % q);
      for (std::uint32_t rep = 0; rep < digit; ++rep)
        prod = (prod * frob_lines[i]).reduce_var_exponents(q);
      e /= q;
      ++i;
    }
    expanded = expanded + prod;
  }

  std::vector<std::vector<MTerm>> comps(n);
  for (const auto& term : expanded.terms()) {
    std::vector<digit_t> coords = k->decompose(term.c);
    for (std::uint32_t j = 0; j < n; ++j)
      if (coords[j]) comps[j].push_back({term.m, base->from_int(coords[j])});
  }
  std::vector<MultiPoly> out;
  out.reserve(n);
  for (std::uint32_t j = 0; j < n; ++j) out.emplace_back(base.get(), n, std::move(comps[j]));
  return out;
}

Monomial fake_descend_monomial(std::uint64_t e, std::uint32_t q, std::uint32_t n) {
  std::vector<std::uint32_t> exps(n, 0);
  if (e == 0) return Monomial(std::move(exps));
  std::uint64_t group_order = 1;
  for (std::uint32_t i = 0; i < n; ++i) group_order *= q;
  group_order -= 1;
  std::uint64_t r = reduce_exponent(e, group_order);
  for (std::uint32_t j = 0; j < n; ++j) {
    exps[j] = static_cast<std::uint32_t>(r % q);
    r /= q;
  }
  return Monomial(std::move(exps));
}

MultiPoly fake_descend(const UniPoly& f) {
  const Field* k = f.ctx();
  std::uint32_t n = k->n();
  std::vector<MTerm> t;
  t.reserve(f.terms().size());
  for (const auto& term : f.terms())
    t.push_back({fake_descend_monomial(term.e, k->p(), n), term.c});
  return MultiPoly(k, n, std::move(t));
}

MultiPoly field_equation_poly(const Field* f, std::uint32_t nvars, std::uint32_t i) {
  std::vector<MTerm> t;
  t.push_back({Monomial::variable(nvars, i, f->p()), f->one()});
  t.push_back({Monomial::variable(nvars, i), f->neg(f->one())});
  return MultiPoly(f, nvars, std::move(t));
}

namespace {

MultiPoly cyclic_field_equation(const Field* k, std::uint32_t nvars, std::uint32_t i) {
  std::uint32_t next = (i + 1) % nvars;
  std::vector<MTerm> t;
  t.push_back({Monomial::variable(nvars, i, k->p()), k->one()});
  t.push_back({Monomial::variable(nvars, next), k->neg(k->one())});
  return MultiPoly(k, nvars, std::move(t));
}

}  // namespace

PolySystem build_system(std::shared_ptr<const Field> k, std::vector<UniPoly> F, Flavor flavor) {
  for (const auto& f : F)
    require(!f.is_constant(), Errc::ConstantInInput, "constant generator rejected");
  std::uint32_t n = k->n();

  PolySystem sys;
  sys.ext = k;
  sys.flavor = flavor;
  sys.uni = std::move(F);

  switch (flavor) {
    case Flavor::UNIVARIATE_F:
    case Flavor::F_f: {
      sys.coeff = k;
      sys.nvars = 1;
      for (std::size_t i = 0; i < sys.uni.size(); ++i) {
        sys.gens.push_back(to_univariate_gen(sys.uni[i]));
        sys.origin.push_back("f" + std::to_string(i));
      }
      if (flavor == Flavor::F_f) {
        sys.gens.push_back(to_univariate_gen(UniPoly::field_equation(k.get())));
        sys.origin.push_back("field_eq");
      }
      break;
    }
    case Flavor::WEIL_Fprime:
    case Flavor::WEIL_Fprime_f: {
      auto base = Field::make_prime(k->p());
      sys.coeff = base;
      sys.nvars = n;
      for (std::size_t i = 0; i < sys.uni.size(); ++i) {
        auto comps = weil_descend(sys.uni[i], base);
        for (std::uint32_t j = 0; j < n; ++j) {
          sys.gens.push_back(std::move(comps[j]));
          sys.origin.push_back("f" + std::to_string(i) + "_" + std::to_string(j));
        }
      }
      if (flavor == Flavor::WEIL_Fprime_f) {
        for (std::uint32_t j = 0; j < n; ++j) {
          sys.gens.push_back(field_equation_poly(base.get(), n, j));
          sys.origin.push_back("field_eq" + std::to_string(j));
        }
      }
      break;
    }
    case Flavor::FAKE_Fbar:
    case Flavor::FAKE_Fbar_f: {
      sys.coeff = k;
      sys.nvars = n;
      for (std::size_t i = 0; i < sys.uni.size(); ++i) {
        sys.gens.push_back(fake_descend(sys.uni[i]));
        sys.origin.push_back("fbar" + std::to_string(i));
      }
      if (flavor == Flavor::FAKE_Fbar_f) {
        for (std::uint32_t j = 0; j < n; ++j) {
          sys.gens.push_back(cyclic_field_equation(k.get(), n, j));
          sys.origin.push_back("cyc_eq" + std::to_string(j));
        }
      }
      break;
    }
    case Flavor::GENERIC:
      fail(Errc::ConfigError, "GENERIC systems are built from multivariate input");
  }
  return sys;
}

PolySystem make_generic(std::shared_ptr<const Field> f, std::uint32_t nvars,
                        std::vector<MultiPoly> gens, bool field_equations) {
  PolySystem sys;
  sys.coeff = f;
  sys.flavor = Flavor::GENERIC;
  sys.nvars = nvars;
  sys.gens = std::move(gens);
  for (std::size_t i = 0; i < sys.gens.size(); ++i) sys.origin.push_back("g" + std::to_string(i));
  if (field_equations) {
    for (std::uint32_t j = 0; j < nvars; ++j) {
      sys.gens.push_back(field_equation_poly(f.get(), nvars, j));
      sys.origin.push_back("field_eq" + std::to_string(j));
    }
  }
  return sys;
}

namespace {

// Rebind a polynomial (digits unchanged) onto another handle of a
// structurally equal field, so the transformed system owns every context
// its coefficients point at.
MultiPoly rehome(const MultiPoly& g, const Field* nf) {
  std::vector<MTerm> t;
  t.reserve(g.terms().size());
  for (const auto& term : g.terms()) t.push_back({term.m, Fe(nf, term.c.digits())});
  return MultiPoly(nf, g.nvars(), std::move(t));
}

}  // namespace

PolySystem transform_system(const PolySystem& sys, const AffineMap& phi,
                            std::shared_ptr<const Field> map_field) {
  require(phi.ctx() == map_field.get(), Errc::MismatchedContext,
          "affine map must live over the supplied field handle");
  PolySystem out;
  out.coeff = map_field;
  out.ext = sys.ext;
  out.flavor = Flavor::GENERIC;
  out.nvars = sys.nvars;
  bool lift = !sys.coeff->same(*map_field);
  std::optional<FieldEmbedding> emb;
  if (lift) emb.emplace(sys.coeff, map_field);
  for (std::size_t i = 0; i < sys.gens.size(); ++i) {
    MultiPoly g = lift ? mp_embed(sys.gens[i], *emb) : rehome(sys.gens[i], map_field.get());
    out.gens.push_back(phi.apply(g));
    out.origin.push_back("phi_" + sys.origin[i]);
  }
  return out;
}

}  // namespace descentlab
