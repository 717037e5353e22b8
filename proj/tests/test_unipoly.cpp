#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descentlab/bounds.hpp"
#include "descentlab/unipoly.hpp"
#include "support/oracles.hpp"

using namespace descentlab;

namespace {

UniPoly random_poly(const Field* k, Rng& rng, std::uint64_t max_deg, std::size_t terms) {
  std::vector<UTerm> t;
  for (std::size_t i = 0; i < terms; ++i)
    t.push_back({rng.below(max_deg + 1), oracle::random_fe(k, rng)});
  return UniPoly(k, std::move(t));
}

}  // namespace

TEST_CASE("division with remainder") {
  auto gf4 = Field::make(2, {1, 1, 1});
  Fe t = gf4->gen();
  SUBCASE("the worked gf4 remainder") {
    UniPoly h1(gf4.get(), {{3, gf4->one()}, {2, t}, {1, gf4->one()}, {0, t * t}});
    UniPoly h2(gf4.get(), {{1, gf4->one()}, {0, gf4->one()}});
    CHECK(up_mod(h1, h2) == UniPoly::constant(gf4->one()));
  }
  SUBCASE("f mod f = 0") {
    UniPoly f(gf4.get(), {{5, t}, {2, gf4->one()}, {0, t}});
    CHECK(up_mod(f, f).is_zero());
  }
  SUBCASE("sparse field-equation remainder, frozen from the dense oracle") {
    auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
    Fe tt = k->gen();
    UniPoly f2(k.get(), {{31, tt}, {0, k->one()}});
    UniPoly r = up_mod(UniPoly::field_equation(k.get()), f2);
    // (t^30 + 1) X = (t^4 + t + 1) X
    CHECK(r == UniPoly(k.get(), {{1, k->from_digits({1, 1, 0, 0, 1})}}));
    auto [dq, dr] = oracle::dense_divmod(oracle::unipoly_to_dense(UniPoly::field_equation(k.get())),
                                         oracle::unipoly_to_dense(f2), k.get());
    CHECK(oracle::dense_to_unipoly(dr, k.get()) == r);
  }
  SUBCASE("division identity on random pairs") {
    Rng rng(5);
    for (auto k : {Field::make(2, {1, 1, 1}), Field::make_default(3, 2)}) {
      for (int i = 0; i < 60; ++i) {
        UniPoly h1 = random_poly(k.get(), rng, 40, 4);
        UniPoly h2 = random_poly(k.get(), rng, 12, 3);
        if (h2.is_zero()) continue;
        auto [s, h3] = up_divmod(h1, h2);
        CHECK(s * h2 + h3 == h1);
        if (!h3.is_zero()) CHECK(*h3.degree() < *h2.degree());
        auto [ds, dr] = oracle::dense_divmod(oracle::unipoly_to_dense(h1),
                                             oracle::unipoly_to_dense(h2), k.get());
        CHECK(oracle::dense_to_unipoly(dr, k.get()) == h3);
      }
    }
  }
  SUBCASE("division by zero is rejected") {
    UniPoly f(gf4.get(), {{1, t}});
    CHECK_THROWS_AS((void)up_mod(f, UniPoly(gf4.get())), Error);
  }
}

TEST_CASE("euclidean gcd with trace") {
  auto gf4 = Field::make(2, {1, 1, 1});
  SUBCASE("gcd(X^2-X, X^4-X) over gf4") {
    UniPoly a(gf4.get(), {{2, gf4->one()}, {1, gf4->one()}});
    UniPoly b(gf4.get(), {{4, gf4->one()}, {1, gf4->one()}});
    auto [g, trace] = up_gcd(a, b);
    CHECK(g == a);
    CHECK(up_mod(b, a).is_zero());
  }
  SUBCASE("gcd(f, f) is f made monic") {
    Fe t = gf4->gen();
    UniPoly f(gf4.get(), {{3, t}, {0, gf4->one()}});
    auto [g, trace] = up_gcd(f, f);
    CHECK(g == f.monic());
  }
  SUBCASE("frozen gcd over GF(32) and its roots") {
    auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
    Fe t = k->gen();
    UniPoly f1(k.get(), {{11, k->pow(t, 16)}, {0, k->one()}});
    auto [g, trace] = up_gcd(f1, UniPoly::field_equation(k.get()));
    // X + (t^2 + t^4)
    CHECK(g == UniPoly(k.get(), {{1, k->one()}, {0, k->from_digits({0, 0, 1, 0, 1})}}));
    auto roots = up_roots(g);
    REQUIRE(roots.size() == 1);
    CHECK(k->index_of(roots[0]) == 20);
    // exactly the roots of f1 found by brute force
    auto brute = up_roots(f1);
    CHECK(roots.size() == brute.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(roots[i] == brute[i]);
  }
  SUBCASE("trace satisfies the remainder recurrence") {
    Rng rng(9);
    auto k = Field::make_default(2, 4);
    for (int i = 0; i < 40; ++i) {
      UniPoly h1 = random_poly(k.get(), rng, 30, 4);
      UniPoly h2 = random_poly(k.get(), rng, 10, 3);
      if (h1.is_zero() && h2.is_zero()) continue;
      auto [g, trace] = up_gcd(h1, h2);
      REQUIRE(trace.remainders.size() >= 3);
      CHECK(trace.remainders.back().is_zero());
      for (std::size_t j = 2; j < trace.remainders.size(); ++j) {
        if (trace.remainders[j - 1].is_zero()) break;
        CHECK(trace.remainders[j] == up_mod(trace.remainders[j - 2], trace.remainders[j - 1]));
        if (j >= 3 && !trace.remainders[j].is_zero())
          CHECK(*trace.remainders[j].degree() < *trace.remainders[j - 1].degree());
      }
      CHECK(up_mod(h1, g).is_zero());
      CHECK(up_mod(h2, g).is_zero());
    }
  }
  SUBCASE("gcd with the field equation splits into distinct roots") {
    for (auto k : {Field::make(2, {1, 1, 1}), Field::make_default(2, 3),
                   Field::make_default(3, 1)}) {
      Rng rng(13);
      for (int i = 0; i < 25; ++i) {
        UniPoly f = random_poly(k.get(), rng, 2 * k->order(), 3);
        if (f.is_zero()) continue;
        auto [g, trace] = up_gcd(f, UniPoly::field_equation(k.get()));
        if (g.is_constant()) continue;
        CHECK(up_roots(g).size() == *g.degree());
      }
    }
  }
}

TEST_CASE("weight of exponents and polynomials") {
  CHECK(up_weight_exp(11, 2) == 3);
  CHECK(up_weight_exp(31, 2) == 5);
  CHECK(up_weight_exp(0, 2) == 0);
  auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
  Fe t = k->gen();
  UniPoly f1(k.get(), {{11, k->pow(t, 16)}, {0, k->one()}});
  CHECK(up_weight(f1) == 3);
  CHECK(up_weight(UniPoly::x_pow(k.get(), 16)) == 1);
  auto gf4 = Field::make(2, {1, 1, 1});
  Fe tt = gf4->gen();
  UniPoly h1(gf4.get(), {{3, gf4->one()}, {2, tt}, {1, gf4->one()}, {0, tt * tt}});
  CHECK(up_weight(h1) == 2);
  CHECK_THROWS_AS((void)up_weight(UniPoly(gf4.get())), Error);

  SUBCASE("digit-sum laws") {
    for (std::uint32_t q : {2u, 3u}) {
      std::uint64_t qn = 1;
      for (int i = 0; i < 6; ++i) qn *= q;
      for (std::uint64_t e = 0; e < qn; ++e) {
        CHECK(up_weight_exp(e, q) == up_weight_exp(e * q, q));
        if (e) CHECK(up_weight_exp(e, q) <= (q - 1) * ilog_ceil(q, e + 1));
      }
    }
  }
  SUBCASE("polynomial weight bound") {
    Rng rng(31);
    auto kk = Field::make_default(2, 5);
    for (int i = 0; i < 50; ++i) {
      UniPoly f = random_poly(kk.get(), rng, 200, 4);
      if (f.is_zero() || f.is_constant()) continue;
      CHECK(up_weight(f) <= (kk->p() - 1) * (ilog_floor(kk->p(), *f.degree()) + 1));
    }
  }
}

TEST_CASE("evaluation") {
  auto k = Field::make_default(2, 4);
  SUBCASE("simple values") {
    UniPoly f(k.get(), {{1, k->one()}, {0, k->one()}});
    CHECK(up_eval(f, k->one()).is_zero());
    auto k5 = Field::make(2, {1, 0, 1, 0, 0, 1});
    UniPoly f1(k5.get(), {{11, k5->pow(k5->gen(), 16)}, {0, k5->one()}});
    CHECK(up_eval(f1, k5->zero()).is_one());
  }
  SUBCASE("term-by-term equals dense horner") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
      UniPoly f = random_poly(k.get(), rng, 25, 4);
      Fe x = oracle::random_fe(k.get(), rng);
      auto dense = oracle::unipoly_to_dense(f);
      Fe acc = k->zero();
      for (std::size_t j = dense.size(); j-- > 0;) acc = acc * x + dense[j];
      CHECK(up_eval(f, x) == acc);
    }
  }
}

TEST_CASE("root finding") {
  SUBCASE("the field equation of the subfield") {
    auto k = Field::make_default(2, 4);
    UniPoly xq_x(k.get(), {{2, k->one()}, {1, k->one()}});  // X^2 - X
    auto roots = up_roots(xq_x);
    REQUIRE(roots.size() == 2);  // the prime subfield
    CHECK(roots[0].is_zero());
    CHECK(roots[1].is_one());
  }
  SUBCASE("linear polynomial in characteristic 2") {
    auto k = Field::make(2, {1, 1, 1});
    UniPoly f(k.get(), {{1, k->one()}, {0, k->one()}});
    auto roots = up_roots(f);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].is_one());
  }
  SUBCASE("desk-scale cap") {
    auto big = Field::make_default(2, 17);
    CHECK_THROWS_AS((void)up_roots(UniPoly::x_pow(big.get(), 2)), Error);
  }
}
