#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "descentlab/field.hpp"
#include "descentlab/rng.hpp"
#include "support/oracles.hpp"

using namespace descentlab;

TEST_CASE("field axioms hold exhaustively on small fields") {
  std::vector<std::shared_ptr<const Field>> fields = {
      Field::make_prime(2),          Field::make_prime(3),
      Field::make_prime(5),          Field::make(2, {1, 1, 1}),
      Field::make(3, {2, 2, 1}),     Field::make_default(2, 3),
      Field::make_default(2, 6),     Field::make_default(3, 3),
  };
  for (const auto& f : fields) {
    CAPTURE(f->order());
    std::uint32_t ord = static_cast<std::uint32_t>(f->order());
    for (std::uint32_t ai = 0; ai < ord; ++ai) {
      Fe a = f->element(ai);
      CHECK(f->add(a, f->zero()) == a);
      CHECK(f->mul(a, f->one()) == a);
      CHECK(f->add(a, f->neg(a)).is_zero());
      if (!a.is_zero()) CHECK(f->mul(a, f->inv(a)).is_one());
    }
    for (std::uint32_t ai = 0; ai < ord; ++ai)
      for (std::uint32_t bi = 0; bi < ord; ++bi) {
        Fe a = f->element(ai), b = f->element(bi);
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (std::uint32_t ci = 0; ci < ord; ++ci) {
          Fe c = f->element(ci);
          CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
  }
}

TEST_CASE("gf4 multiplication table spot checks") {
  auto f = Field::make(2, {1, 1, 1});
  Fe t = f->gen();
  CHECK(f->mul(t, t) == f->from_digits({1, 1}));           // t^2 = t + 1
  CHECK(f->mul(t, f->from_digits({1, 1})) == f->one());    // t(t+1) = 1
  CHECK(f->pow(t, 2) == f->from_digits({1, 1}));
  CHECK(f->pow(t, 3) == f->one());
  CHECK(f->pow(f->zero(), 0) == f->one());
  CHECK(f->pow(t, 1) == t);
}

TEST_CASE("frobenius is the q-power map and a field automorphism") {
  auto f = Field::make(2, {1, 1, 1});
  Fe t = f->gen();
  CHECK(f->frobenius(t) == f->from_digits({1, 1}));
  CHECK(f->frobenius(f->one()).is_one());

  auto k = Field::make(2, {1, 0, 1, 0, 0, 1});
  Fe tt = k->gen();
  CHECK(k->frobenius(k->pow(tt, 16)) == tt);  // t^32 = t since t^31 = 1

  for (auto kf : {Field::make_default(2, 4), Field::make_default(3, 2)}) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
      Fe a = oracle::random_fe(kf.get(), rng), b = oracle::random_fe(kf.get(), rng);
      CHECK(kf->frobenius(kf->add(a, b)) == kf->add(kf->frobenius(a), kf->frobenius(b)));
      CHECK(kf->frobenius(kf->mul(a, b)) == kf->mul(kf->frobenius(a), kf->frobenius(b)));
      Fe c = a;
      for (std::uint32_t j = 0; j < kf->n(); ++j) c = kf->frobenius(c);
      CHECK(c == a);
    }
  }
}

TEST_CASE("decompose and compose are mutually inverse") {
  SUBCASE("power basis coordinates") {
    auto f = Field::make(2, {1, 1, 1});
    Fe a = f->from_digits({1, 1});
    auto coords = f->decompose(a);
    CHECK(coords == std::vector<digit_t>{1, 1});
    CHECK(f->decompose(f->zero()) == std::vector<digit_t>{0, 0});
  }
  SUBCASE("exhaustive roundtrip up to order 1024") {
    for (auto f : {Field::make_default(2, 10), Field::make_default(3, 4),
                   Field::make_default(5, 3)}) {
      for (std::uint32_t i = 0; i < f->order(); ++i) {
        Fe a = f->element(i);
        CHECK(f->compose(f->decompose(a)) == a);
      }
    }
  }
  SUBCASE("non-power basis roundtrip and linearity") {
    // basis {1+t, 1, t^2} of GF(8)
    auto f = Field::make(2, {1, 1, 0, 1}, {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}});
    CHECK(!f->has_power_basis());
    for (std::uint32_t i = 0; i < 8; ++i) {
      Fe a = f->element(i);
      CHECK(f->compose(f->decompose(a)) == a);
    }
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
      Fe a = oracle::random_fe(f.get(), rng), b = oracle::random_fe(f.get(), rng);
      auto da = f->decompose(a), db = f->decompose(b), ds = f->decompose(f->add(a, b));
      for (std::uint32_t j = 0; j < 3; ++j) CHECK(ds[j] == (da[j] ^ db[j]));
    }
  }
}

TEST_CASE("index arithmetic agrees with element arithmetic") {
  for (auto f : {Field::make(2, {1, 0, 1, 0, 0, 1}), Field::make_default(3, 3),
                 Field::make_prime(5)}) {
    REQUIRE(f->has_tables());
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
      std::uint32_t a = static_cast<std::uint32_t>(rng.below(f->order()));
      std::uint32_t b = static_cast<std::uint32_t>(rng.below(f->order()));
      CHECK(f->add_idx(a, b) == f->index_of(f->add(f->element(a), f->element(b))));
      CHECK(f->mul_idx(a, b) == f->index_of(f->mul(f->element(a), f->element(b))));
      CHECK(f->sub_idx(a, b) == f->index_of(f->sub(f->element(a), f->element(b))));
      if (b) CHECK(f->div_idx(a, b) == f->index_of(f->div(f->element(a), f->element(b))));
    }
  }
}

TEST_CASE("construction rejects bad inputs") {
  CHECK_THROWS_AS((void)Field::make_prime(4), Error);
  CHECK_THROWS_AS((void)Field::make(2, {1, 1, 0, 1, 1}), Error);  // t^4+t^3+t+1 reducible
  CHECK_THROWS_AS((void)Field::make(2, {1, 1, 1}, {{1, 0}, {1, 0}}), Error);  // dependent basis
  CHECK_THROWS_AS((void)Field::make(2, {0, 1, 1}), Error);  // t^2+t = t(t+1)
  CHECK_THROWS_AS((void)Field::make(2, {1, 1, 0}), Error);  // zero leading coefficient
}

TEST_CASE("cross-field operations are rejected") {
  auto f = Field::make(2, {1, 1, 1});
  auto g = Field::make(2, {1, 1, 0, 1});
  CHECK_THROWS_AS((void)f->add(f->one(), g->one()), Error);
  CHECK_THROWS_AS((void)f->inv(f->zero()), Error);
}

TEST_CASE("embedding into an extension is a ring homomorphism") {
  struct Pair {
    std::shared_ptr<const Field> src, dst;
  };
  std::vector<Pair> pairs = {{Field::make_prime(2), Field::make(2, {1, 1, 1})},
                             {Field::make(2, {1, 1, 1}), Field::make_default(2, 4)},
                             {Field::make_prime(3), Field::make_default(3, 2)}};
  for (auto& [src, dst] : pairs) {
    FieldEmbedding emb(src, dst);
    CHECK(emb.map(src->one()).is_one());
    CHECK(emb.map(src->zero()).is_zero());
    Rng rng(23);
    for (int i = 0; i < 60; ++i) {
      Fe a = oracle::random_fe(src.get(), rng), b = oracle::random_fe(src.get(), rng);
      CHECK(emb.map(src->add(a, b)) == dst->add(emb.map(a), emb.map(b)));
      CHECK(emb.map(src->mul(a, b)) == dst->mul(emb.map(a), emb.map(b)));
    }
  }
  CHECK_THROWS_AS(FieldEmbedding(Field::make(2, {1, 1, 1}), Field::make_default(2, 5)), Error);
}
