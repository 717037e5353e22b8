#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descentlab/descent.hpp"
#include "support/oracles.hpp"

using namespace descentlab;

namespace {

// Evaluation compatibility of the Weil descent on all rational points:
// f(sum alpha_j x_j) = sum [f]_j(x) alpha_j.
bool descent_matches_everywhere(const UniPoly& f, const std::vector<MultiPoly>& comps,
                                std::shared_ptr<const Field> base) {
  const Field* k = f.ctx();
  std::uint32_t n = k->n(), q = k->p();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    std::vector<digit_t> coords(n);
    std::vector<Fe> pt;
    for (std::uint32_t j = 0; j < n; ++j) {
      coords[j] = static_cast<digit_t>(v % q);
      pt.push_back(base->from_int(coords[j]));
      v /= q;
    }
    Fe x = k->compose(coords);
    std::vector<digit_t> comp_vals(n);
    for (std::uint32_t j = 0; j < n; ++j) comp_vals[j] = comps[j].eval(pt).digits()[0];
    if (k->compose(comp_vals) != up_eval(f, x)) return false;
  }
  return true;
}

UniPoly random_poly(const Field* k, Rng& rng, std::uint64_t max_deg, std::size_t terms) {
  std::vector<UTerm> t;
  for (std::size_t i = 0; i < terms; ++i)
    t.push_back({rng.below(max_deg + 1), oracle::random_fe(k, rng)});
  return UniPoly(k, std::move(t));
}

}  // namespace

TEST_CASE("weil descent of the small gf4 polynomials") {
  auto k = Field::make(2, {1, 1, 1});
  auto base = Field::make_prime(2);
  SUBCASE("linear substitution") {
    auto comps = weil_descend(UniPoly::x_pow(k.get(), 1), base);
    CHECK(comps[0] == MultiPoly::variable(base.get(), 2, 0));
    CHECK(comps[1] == MultiPoly::variable(base.get(), 2, 1));
  }
  SUBCASE("the square picks up the frobenius twist") {
    auto comps = weil_descend(UniPoly::x_pow(k.get(), 2), base);
    CHECK(comps[0] == MultiPoly::variable(base.get(), 2, 0) +
                          MultiPoly::variable(base.get(), 2, 1));
    CHECK(comps[1] == MultiPoly::variable(base.get(), 2, 1));
  }
}

TEST_CASE("weil descent evaluation compatibility, exhaustive") {
  auto base2 = Field::make_prime(2);
  auto base3 = Field::make_prime(3);
  Rng rng(41);
  for (auto k : {Field::make(2, {1, 1, 1}), Field::make_default(2, 3),
                 Field::make_default(2, 6)}) {
    for (int i = 0; i < 8; ++i) {
      UniPoly f = random_poly(k.get(), rng, 2 * k->order(), 3);
      if (f.is_zero()) continue;
      CHECK(descent_matches_everywhere(f, weil_descend(f, base2), base2));
    }
  }
  for (int i = 0; i < 8; ++i) {
    auto k = Field::make_default(3, 2);
    UniPoly f = random_poly(k.get(), rng, 20, 3);
    if (f.is_zero()) continue;
    CHECK(descent_matches_everywhere(f, weil_descend(f, base3), base3));
  }
  SUBCASE("non-power basis") {
    auto k = Field::make(2, {1, 1, 0, 1}, {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    for (int i = 0; i < 8; ++i) {
      UniPoly f = random_poly(k.get(), rng, 14, 3);
      if (f.is_zero()) continue;
      CHECK(descent_matches_everywhere(f, weil_descend(f, base2), base2));
    }
  }
}

TEST_CASE("descended components have variable degrees below q") {
  Rng rng(43);
  auto base = Field::make_prime(3);
  auto k = Field::make_default(3, 2);
  for (int i = 0; i < 10; ++i) {
    UniPoly f = random_poly(k.get(), rng, 15, 3);
    if (f.is_zero()) continue;
    for (const auto& comp : weil_descend(f, base))
      for (const auto& term : comp.terms())
        for (std::uint32_t v = 0; v < 2; ++v) CHECK(term.m[v] <= 2);
  }
}

TEST_CASE("fake descent of monomials") {
  CHECK(fake_descend_monomial(11, 2, 5) == Monomial({1, 1, 0, 1, 0}));
  CHECK(fake_descend_monomial(33, 2, 5) == Monomial({0, 1, 0, 0, 0}));  // 33 = 2 mod 31
  CHECK(fake_descend_monomial(3, 2, 2) == Monomial({1, 1}));            // boundary, deg (q-1)n
  CHECK(fake_descend_monomial(0, 2, 5) == Monomial::unit(5));

  SUBCASE("degree matches the weight case formula") {
    for (auto [q, n] : {std::pair<std::uint32_t, std::uint32_t>{2, 4}, {3, 3}, {2, 3}, {3, 4}}) {
      std::uint64_t qn = 1;
      for (std::uint32_t i = 0; i < n; ++i) qn *= q;
      for (std::uint64_t e = 0; e < 3 * qn; ++e) {
        std::uint32_t deg = fake_descend_monomial(e, q, n).deg();
        std::uint32_t expect = (e > 0 && e % (qn - 1) == 0)
                                   ? (q - 1) * n
                                   : up_weight_exp(e % (qn - 1), q);
        CHECK(deg == expect);
        CHECK(deg <= up_weight_exp(e, q));
        if (e > 0 && e % (qn - 1) == 0) CHECK((q - 1) * n <= up_weight_exp(e, q));
      }
    }
  }
}

TEST_CASE("fake descent of polynomials") {
  auto gf4 = Field::make(2, {1, 1, 1});
  Fe t = gf4->gen();
  SUBCASE("worked gf4 example") {
    UniPoly h1(gf4.get(), {{3, gf4->one()}, {2, t}, {1, gf4->one()}, {0, t * t}});
    CHECK(fake_descend(h1) == MultiPoly(gf4.get(), 2, {{Monomial({1, 1}), gf4->one()},
                                                       {Monomial({0, 1}), t},
                                                       {Monomial({1, 0}), gf4->one()},
                                                       {Monomial({0, 0}), t * t}}));
  }
  SUBCASE("sparse gf32 polynomial") {
    auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
    Fe tt = k->gen();
    UniPoly f1(k.get(), {{11, k->pow(tt, 16)}, {0, k->one()}});
    CHECK(fake_descend(f1) == MultiPoly(k.get(), 5, {{Monomial({1, 1, 0, 1, 0}), k->pow(tt, 16)},
                                                     {Monomial::unit(5), k->one()}}));
  }
  SUBCASE("constants pass through") {
    CHECK(fake_descend(UniPoly::constant(t)) == MultiPoly::constant(gf4.get(), 2, t));
  }
  SUBCASE("degree equals the max descended component degree") {
    Rng rng(47);
    auto base = Field::make_prime(2);
    for (auto k : {Field::make(2, {1, 1, 1}), Field::make_default(2, 3),
                   Field::make_default(2, 6)}) {
      for (int i = 0; i < 10; ++i) {
        UniPoly f = random_poly(k.get(), rng, k->order() - 1, 3);
        if (f.is_zero()) continue;
        auto comps = weil_descend(f, base);
        std::uint32_t mx = 0;
        for (const auto& c : comps)
          if (auto d = c.degree()) mx = std::max(mx, *d);
        CHECK(fake_descend(f).degree().value_or(0) == mx);
      }
    }
  }
  SUBCASE("substituting the frobenius powers recovers f") {
    Rng rng(53);
    auto k = Field::make_default(2, 4);
    std::uint64_t group = k->order() - 1;
    for (int i = 0; i < 15; ++i) {
      UniPoly f = random_poly(k.get(), rng, 40, 3);
      if (f.is_zero()) continue;
      MultiPoly fbar = fake_descend(f);
      // X_j -> X^{q^j}, reduced mod X^{q^n} - X
      std::vector<UTerm> acc;
      for (const auto& term : fbar.terms()) {
        std::uint64_t e = 0, qj = 1;
        for (std::uint32_t j = 0; j < k->n(); ++j) {
          e += term.m[j] * qj;
          qj *= k->p();
        }
        if (e > 0) e = (e - 1) % group + 1;
        acc.push_back({e, term.c});
      }
      UniPoly recovered(k.get(), std::move(acc));
      // f reduced the same way
      std::vector<UTerm> red;
      for (const auto& term : f.terms()) {
        std::uint64_t e = term.e;
        if (e > 0) e = (e - 1) % group + 1;
        red.push_back({e, term.c});
      }
      CHECK(recovered == UniPoly(k.get(), std::move(red)));
    }
  }
}

TEST_CASE("solution transport between f and its descent") {
  Rng rng(59);
  auto base = Field::make_prime(2);
  for (auto k : {Field::make(2, {1, 1, 1}), Field::make_default(2, 3),
                 Field::make_default(2, 5)}) {
    for (int i = 0; i < 6; ++i) {
      UniPoly f = random_poly(k.get(), rng, k->order() + 5, 3);
      if (f.is_zero()) continue;
      PolySystem sys = build_system(k, {f}, Flavor::WEIL_Fprime_f);
      std::uint32_t n = k->n();
      for (std::uint32_t idx = 0; idx < k->order(); ++idx) {
        Fe x = k->element(idx);
        std::vector<digit_t> coords = k->decompose(x);
        std::vector<Fe> pt;
        for (auto c : coords) pt.push_back(base->from_int(c));
        bool f_zero = up_eval(f, x).is_zero();
        bool sys_zero = true;
        for (std::uint32_t j = 0; j < n; ++j)  // descended components only
          if (!sys.gens[j].eval(pt).is_zero()) sys_zero = false;
        CHECK(f_zero == sys_zero);
      }
    }
  }
}

TEST_CASE("system construction") {
  auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
  Fe t = k->gen();
  UniPoly f1(k.get(), {{11, k->pow(t, 16)}, {0, k->one()}});
  UniPoly f2(k.get(), {{31, t}, {0, k->one()}});
  SUBCASE("weil flavor of the benchmark pair") {
    PolySystem sys = build_system(k, {f1, f2}, Flavor::WEIL_Fprime_f);
    CHECK(sys.gens.size() == 15);  // 10 descended + 5 field equations
    CHECK(sys.nvars == 5);
    CHECK(sys.q() == 2);
    CHECK(sys.coeff->is_prime_field());
  }
  SUBCASE("fake flavor attaches the cyclic equations") {
    auto k3 = Field::make_default(2, 3);
    UniPoly f(k3.get(), {{3, k3->gen()}, {0, k3->one()}});
    PolySystem sys = build_system(k3, {f}, Flavor::FAKE_Fbar_f);
    REQUIRE(sys.gens.size() == 4);
    CHECK(sys.gens[0] == fake_descend(f));
    // X_0^2 - X_1, X_1^2 - X_2, X_2^2 - X_0
    for (std::uint32_t j = 0; j < 3; ++j) {
      MultiPoly expect(k3.get(), 3, {{Monomial::variable(3, j, 2), k3->one()},
                                     {Monomial::variable(3, (j + 1) % 3), k3->neg(k3->one())}});
      CHECK(sys.gens[1 + j] == expect);
    }
  }
  SUBCASE("univariate flavor") {
    PolySystem sys = build_system(k, {f1}, Flavor::F_f);
    REQUIRE(sys.gens.size() == 2);
    CHECK(sys.nvars == 1);
    CHECK(sys.gens[1].degree() == 32);
  }
  SUBCASE("constants are rejected") {
    CHECK_THROWS_AS((void)build_system(k, {UniPoly::constant(t)}, Flavor::WEIL_Fprime_f), Error);
    CHECK_THROWS_AS((void)build_system(k, {UniPoly(k.get())}, Flavor::FAKE_Fbar), Error);
  }
}
