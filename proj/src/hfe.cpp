#include "descentlab/hfe.hpp"

#include <algorithm>

namespace descentlab {

namespace {

std::vector<Fe> digits_to_point(const Field* base, std::span<const digit_t> v) {
  std::vector<Fe> x;
  x.reserve(v.size());
  for (digit_t d : v) x.push_back(base->from_int(d));
  return x;
}

std::vector<digit_t> point_to_digits(std::span<const Fe> x) {
  std::vector<digit_t> v;
  v.reserve(x.size());
  for (const auto& e : x) v.push_back(e.digits()[0]);
  return v;
}

}  // namespace

HfeKeyPair hfe_keygen(std::uint32_t q, std::uint32_t n, std::uint32_t t, std::uint64_t seed) {
  return hfe_keygen(q, n, t, seed, Field::make_default(q, n));
}

HfeKeyPair hfe_keygen(std::uint32_t q, std::uint32_t n, std::uint32_t t, std::uint64_t seed,
                      std::shared_ptr<const Field> ext) {
  require(zp::is_prime(q), Errc::ParamOutOfRange, "q must be prime");
  require(n >= 2 && t >= 1 && t <= n, Errc::ParamOutOfRange, "need n >= 2 and 1 <= t <= n");
  require(ext->p() == q && ext->n() == n, Errc::MismatchedField, "extension parameters");
  require(ext->order() <= (1u << 16), Errc::ParamOutOfRange, "q^n beyond desk scale");

  auto base = Field::make_prime(q);
  Rng rng(seed);

  std::uint64_t deg_cap = 1;
  for (std::uint32_t i = 0; i < t; ++i) deg_cap *= q;

  // admissible exponents
  std::vector<std::uint64_t> quad_exps, lin_exps;
  {
    std::uint64_t qa = 1;
    for (std::uint32_t a = 0; qa <= deg_cap; ++a, qa *= q) {
      std::uint64_t qb = 1;
      for (std::uint32_t b = 0; b <= a && qa + qb <= deg_cap; ++b, qb *= q)
        quad_exps.push_back(qa + qb);
      if (qa <= deg_cap) lin_exps.push_back(qa);
      if (qa > deg_cap / q) break;
    }
    std::sort(quad_exps.begin(), quad_exps.end());
    quad_exps.erase(std::unique(quad_exps.begin(), quad_exps.end()), quad_exps.end());
  }

  UniPoly f(ext.get());
  for (;;) {
    std::vector<UTerm> terms;
    bool quad_seen = false;
    for (std::uint64_t e : quad_exps) {
      Fe beta = ext->element(static_cast<std::uint32_t>(rng.below(ext->order())));
      if (!beta.is_zero()) {
        terms.push_back({e, beta});
        quad_seen = true;
      }
    }
    for (std::uint64_t e : lin_exps) {
      Fe alpha = ext->element(static_cast<std::uint32_t>(rng.below(ext->order())));
      if (!alpha.is_zero()) terms.push_back({e, alpha});
    }
    Fe mu = ext->element(static_cast<std::uint32_t>(rng.below(ext->order())));
    if (!mu.is_zero()) terms.push_back({0, mu});
    if (!quad_seen) continue;  // degenerate all-linear map
    f = UniPoly(ext.get(), std::move(terms));
    break;
  }

  AffineMap S = AffineMap::sample(base.get(), n, rng);
  AffineMap T = AffineMap::sample(base.get(), n, rng);

  // public key: T o [f] o S, reduced modulo the field equations
  std::vector<MultiPoly> desc = weil_descend(f, base);
  std::vector<MultiPoly> composed;
  composed.reserve(n);
  for (auto& g : desc) composed.push_back(S.apply(g).reduce_var_exponents(q));
  std::vector<MultiPoly> pub;
  pub.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    MultiPoly acc = MultiPoly::constant(base.get(), n, T.b()[i]);
    for (std::uint32_t j = 0; j < n; ++j)
      if (!T.a()[i][j].is_zero()) acc = acc + T.a()[i][j] * composed[j];
    pub.push_back(std::move(acc));
  }

  return HfeKeyPair{{q, n, t, seed}, base, ext, std::move(f), std::move(S), std::move(T),
                    std::move(pub)};
}

std::vector<digit_t> hfe_encrypt(const HfeKeyPair& kp, std::span<const digit_t> plaintext) {
  require(plaintext.size() == kp.params.n, Errc::LengthMismatch, "plaintext length");
  std::vector<Fe> x = digits_to_point(kp.base.get(), plaintext);
  std::vector<digit_t> out;
  out.reserve(kp.pub.size());
  for (const auto& p : kp.pub) out.push_back(p.eval(x).digits()[0]);
  return out;
}

std::vector<std::vector<digit_t>> hfe_decrypt(const HfeKeyPair& kp,
                                              std::span<const digit_t> ciphertext) {
  require(ciphertext.size() == kp.params.n, Errc::LengthMismatch, "ciphertext length");
  const Field* k = kp.ext.get();
  std::vector<Fe> c = digits_to_point(kp.base.get(), ciphertext);
  std::vector<Fe> y = kp.T.inverse().apply_point(c);
  Fe big_y = k->compose(point_to_digits(y));

  UniPoly shifted = kp.f - UniPoly::constant(big_y);
  UniPoly target = shifted.is_zero() ? UniPoly::field_equation(k) : shifted;
  auto [g, trace] = up_gcd(target, UniPoly::field_equation(k));
  std::vector<Fe> roots = up_roots(g);

  AffineMap s_inv = kp.S.inverse();
  std::vector<std::vector<digit_t>> out;
  for (const auto& r : roots) {
    std::vector<digit_t> coords = k->decompose(r);
    std::vector<Fe> x = s_inv.apply_point(digits_to_point(kp.base.get(), coords));
    out.push_back(point_to_digits(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

HfeAttackResult hfe_attack(const HfeKeyPair& kp, std::span<const digit_t> ciphertext,
                           int d_max, bool measure_central) {
  require(ciphertext.size() == kp.params.n, Errc::LengthMismatch, "ciphertext length");
  const Field* base = kp.base.get();
  std::uint32_t n = kp.params.n;

  std::vector<MultiPoly> gens;
  gens.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Fe c = base->from_int(ciphertext[i]);
    gens.push_back(kp.pub[i] - MultiPoly::constant(base, n, c));
  }
  PolySystem sys = make_generic(kp.base, n, std::move(gens), /*field_equations=*/true);

  HfeAttackResult res;
  res.public_solve = measure_solving_degree(sys, Ord::DRL, d_max);
  res.public_solve.sd_or_throw();

  if (res.public_solve.solution) {
    res.read_from_rows = res.public_solve.deg1_rows_ok;
    res.candidates.push_back(point_to_digits(*res.public_solve.solution));
  } else {
    // several (or no) solutions: enumerate against the reduced basis
    std::vector<digit_t> point(n, 0);
    std::vector<Fe> x(n, base->zero());
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) total *= base->p();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < n; ++i) {
        point[i] = static_cast<digit_t>(v % base->p());
        x[i] = base->from_int(point[i]);
        v /= base->p();
      }
      bool zero = true;
      for (const auto& g : res.public_solve.gb.polys)
        if (!g.eval(x).is_zero()) {
          zero = false;
          break;
        }
      if (zero) res.candidates.push_back(point);
    }
    std::sort(res.candidates.begin(), res.candidates.end());
  }

  if (measure_central) {
    const Field* k = kp.ext.get();
    std::vector<Fe> c = digits_to_point(base, ciphertext);
    std::vector<Fe> y = kp.T.inverse().apply_point(c);
    Fe big_y = k->compose(point_to_digits(y));
    UniPoly central = kp.f - UniPoly::constant(big_y);
    if (central.is_constant()) central = kp.f;  // degenerate shift; keep the shape
    std::vector<UniPoly> F{central};
    res.bounds = bound_report(F);

    PolySystem fake = build_system(kp.ext, F, Flavor::FAKE_Fbar_f);
    int cap = std::max(res.bounds.sd_hfe.value_or(res.bounds.sd_general), fake.default_dmax());
    res.sd_fake_central = measure_solving_degree(fake, Ord::DRL, cap).sd;

    PolySystem weil = build_system(kp.ext, F, Flavor::WEIL_Fprime_f);
    LastFallReport lfd = last_fall_exact(weil, weil.default_dmax() + 2);
    res.lfd_weil_central = lfd.exact;
  }
  return res;
}

}  // namespace descentlab
