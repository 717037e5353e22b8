#include "descentlab/bounds.hpp"

#include <algorithm>

#include "descentlab/descent.hpp"

namespace descentlab {

int ilog_floor(std::uint32_t q, std::uint64_t d) {
  require(d >= 1, Errc::ParamOutOfRange, "ilog of zero");
  int k = 0;
  std::uint64_t pw = 1;
  while (pw <= d / q) {
    pw *= q;
    ++k;
  }
  // pw = q^k <= d < q^{k+1}
  return k;
}

int ilog_ceil(std::uint32_t q, std::uint64_t d) {
  require(d >= 1, Errc::ParamOutOfRange, "ilog of zero");
  int k = 0;
  std::uint64_t pw = 1;
  while (pw < d) {
    pw *= q;
    ++k;
  }
  return k;
}

int remainder_threshold(std::uint32_t q, std::uint64_t d) {
  return static_cast<int>((q - 1) * (ilog_ceil(q, d) + 1) + 1);
}

namespace {

void check_nonconstant(std::span<const UniPoly> F) {
  require(!F.empty(), Errc::EmptyOrConstant, "empty polynomial set");
  for (const auto& f : F)
    require(!f.is_constant(), Errc::EmptyOrConstant, "constant polynomial in set");
}

}  // namespace

std::pair<std::uint64_t, int> bound_lfd_main(std::span<const UniPoly> F) {
  check_nonconstant(F);
  std::uint64_t d_min = ~0ull;
  int fbar_max = 0;
  for (const auto& f : F) {
    d_min = std::min(d_min, *f.degree());
    fbar_max = std::max(fbar_max, static_cast<int>(fake_descend(f).degree().value_or(0)));
  }
  std::uint64_t d = d_min;
  while (remainder_threshold(F.front().ctx()->p(), d) < fbar_max) ++d;
  return {d, remainder_threshold(F.front().ctx()->p(), d)};
}

int bound_lfd_hkyy(std::span<const UniPoly> F) {
  check_nonconstant(F);
  std::uint32_t q = F.front().ctx()->p();
  std::uint64_t deg = 0;
  for (const auto& f : F) deg = std::max(deg, *f.degree());
  // floor(2(q-1) log_q(deg+1)) is computed exactly as floor(log_q((deg+1)^c))
  // with c = 2(q-1); the power is evaluated with overflow-checked integers.
  std::uint64_t c = 2ull * (q - 1);
  unsigned __int128 pw = 1;
  bool overflow = false;
  for (std::uint64_t i = 0; i < c && !overflow; ++i) {
    pw *= deg + 1;
    if (pw > (unsigned __int128)1 << 100) overflow = true;
  }
  int log_part;
  if (!overflow) {
    int k = 0;
    unsigned __int128 acc = 1;
    while (acc <= pw / q) {
      acc *= q;
      ++k;
    }
    log_part = k;
  } else {
    // c * floor stays a lower bound; desk inputs never get here
    log_part = static_cast<int>(c) * ilog_floor(q, deg + 1);
  }
  std::uint64_t val = static_cast<std::uint64_t>(log_part) + c;
  return static_cast<int>(std::max<std::uint64_t>(val, q));
}

bool hfe_shape(const UniPoly& f) {
  std::uint32_t q = f.ctx()->p();
  for (const auto& t : f.terms()) {
    std::uint64_t e = t.e;
    if (e == 0) continue;
    std::uint32_t w = 0;
    bool ok = true;
    while (e) {
      std::uint32_t dgt = static_cast<std::uint32_t>(e % q);
      if (dgt > 2) { ok = false; break; }
      w += dgt;
      e /= q;
    }
    if (!ok || w > 2) return false;  // not q^a or q^a + q^b
  }
  return true;
}

SdBounds bound_sd_sec5(const UniPoly& f) {
  require(!f.is_constant(), Errc::EmptyOrConstant, "constant polynomial");
  const Field* k = f.ctx();
  std::uint32_t q = k->p(), n = k->n();
  int fbar = static_cast<int>(fake_descend(f).degree().value_or(0));
  SdBounds b;
  b.general = fbar + static_cast<int>((q - 1) * n);
  b.log_form = static_cast<int>((q - 1) * (ilog_floor(q, *f.degree()) + 1 + n));
  if (hfe_shape(f)) b.hfe_form = static_cast<int>((q - 1) * n + 2);
  return b;
}

BoundReport bound_report(std::span<const UniPoly> F) {
  check_nonconstant(F);
  const Field* k = F.front().ctx();
  BoundReport r;
  r.q = k->p();
  r.n = k->n();
  bool all_hfe = true;
  for (const auto& f : F) {
    r.deg_F = std::max(r.deg_F, *f.degree());
    SdBounds b = bound_sd_sec5(f);
    r.deg_fbar = std::max(r.deg_fbar, static_cast<int>(fake_descend(f).degree().value_or(0)));
    r.sd_general = std::max(r.sd_general, b.general);
    r.sd_logform = std::max(r.sd_logform, b.log_form);
    all_hfe = all_hfe && b.hfe_form.has_value();
  }
  if (all_hfe) r.sd_hfe = static_cast<int>((r.q - 1) * r.n + 2);
  auto [d, bound] = bound_lfd_main(F);
  r.d_main = d;
  r.lfd_main = bound;
  r.u = bound;
  r.lfd_hkyy = bound_lfd_hkyy(F);
  return r;
}

}  // namespace descentlab
