#include "descentlab/lastfall.hpp"

#include <algorithm>
#include <sstream>

namespace descentlab {

int LastFallReport::exact_or_throw() const {
  if (exact) return *exact;
  std::ostringstream os;
  os << "last fall degree not certified; bracket lower bound " << lower;
  fail(Errc::NotReachedByDmax, os.str());
}

namespace {

// Rank of span{u*g : g in basis, deg(u g) <= j} on the degree-j column index.
template <class Ops>
std::size_t ideal_rank_at(const Ops& ops_proto, const ColumnIndex& ci, const Field* f,
                          const GroebnerBasis& gb, int j) {
  EchelonBasis<Ops> basis(ops_proto, &ci.degs);
  std::vector<typename Ops::Row> rows;
  std::vector<RowProv> provs;
  for (const auto& g : gb.polys) {
    if (!g.degree() || static_cast<int>(*g.degree()) > j) continue;
    int dg = static_cast<int>(*g.degree());
    for (const Monomial& u : monomials_up_to(ci.nvars, j - dg)) {
      auto row = ops_proto.make_row();
      bool ok = true;
      for (const auto& term : g.terms()) {
        auto it = ci.pos.find(term.m * u);
        if (it == ci.pos.end()) { ok = false; break; }
        Ops::set(row, it->second, f->index_of(term.c));
      }
      if (!ok) continue;
      rows.push_back(std::move(row));
      provs.push_back({-1, u, 0});
      if (rows.size() >= 512) {
        basis.absorb(std::move(rows), std::move(provs), 0);
        rows.clear();
        provs.clear();
      }
    }
  }
  if (!rows.empty()) basis.absorb(std::move(rows), std::move(provs), 0);
  return basis.rank();
}

std::size_t ideal_rank(const PolySystem& sys, const ColumnIndex& ci, const GroebnerBasis& gb,
                       int j) {
  if (sys.coeff->order() == 2)
    return ideal_rank_at<F2Ops>(F2Ops(ci.size()), ci, sys.coeff.get(), gb, j);
  return ideal_rank_at<FqOps>(FqOps(sys.coeff.get(), ci.size()), ci, sys.coeff.get(), gb, j);
}

}  // namespace

LastFallReport last_fall_exact(const PolySystem& sys, int d_max, bool allow_degree_cap) {
  LastFallReport rep;
  int cap = d_max > 0 ? d_max : sys.default_dmax();

  GroebnerBasis gb = buchberger_gb(sys, Ord::DRL);
  require(gb.zero_dimensional(sys.nvars) || allow_degree_cap, Errc::NotZeroDimensional,
          "system is not zero-dimensional; pass an explicit degree cap");

  SolveReport sd = measure_solving_degree(sys, Ord::DRL, cap);
  rep.stabilization = sd.sd;
  int scan_to = sd.sd.value_or(cap);

  int last_mismatch = -1;
  std::vector<Monomial> prev_pivots;
  for (int j = 0; j <= scan_to; ++j) {
    MacaulayState vj = compute_Wd(sys, j, Ord::DRL);
    ColumnIndex const& ci = vj.columns();
    std::size_t vr = vj.rank();
    std::size_t ir = ideal_rank(sys, ci, gb, j);
    rep.v_ranks.push_back(vr);
    rep.ideal_ranks.push_back(ir);
    if (ir != vr) last_mismatch = j;

    // fall events: new leading terms strictly below degree j
    auto lows = vj.low_pivots();
    std::vector<Monomial> cur;
    for (auto& [m, deg] : lows) {
      (void)deg;
      cur.push_back(m);
    }
    std::vector<Monomial> fresh;
    for (const auto& m : cur)
      if (std::find(prev_pivots.begin(), prev_pivots.end(), m) == prev_pivots.end())
        fresh.push_back(m);
    if (!fresh.empty() && j > 0) rep.events.push_back({j, std::move(fresh)});
    prev_pivots = vj.pivot_monomials();
  }

  rep.lower = last_mismatch + 1;
  if (sd.sd) {
    rep.exact = rep.lower;
  }
  return rep;
}

RelateWeilReport relate_weil_check(std::shared_ptr<const Field> k,
                                   const std::vector<UniPoly>& F, int d_max) {
  RelateWeilReport r;
  PolySystem weil = build_system(k, F, Flavor::WEIL_Fprime_f);
  PolySystem fake = build_system(k, F, Flavor::FAKE_Fbar_f);
  std::size_t descended = F.size() * k->n();  // [f]_j come first, field equations after
  for (std::size_t i = 0; i < descended; ++i)
    if (auto dg = weil.gens[i].degree()) r.deg_weil = std::max(r.deg_weil, *dg);
  r.lfd_weil = last_fall_exact(weil, d_max).exact_or_throw();
  r.lfd_fake = last_fall_exact(fake, d_max).exact_or_throw();
  int q = static_cast<int>(k->p());
  r.lhs = std::max({r.lfd_weil, q, static_cast<int>(r.deg_weil)});
  r.rhs = std::max({r.lfd_fake, q, static_cast<int>(r.deg_weil)});
  r.holds = r.lhs <= r.rhs;
  return r;
}

void MembershipReport::check() const {
  require(add_ok, Errc::MembershipFailed, "additivity congruence");
  require(mul_ok, Errc::MembershipFailed, "multiplicativity congruence");
  require(rem_ok, Errc::MembershipFailed, "remainder congruence");
}

MembershipReport membership_lemma_suite(std::shared_ptr<const Field> k, const UniPoly& h1,
                                        const UniPoly& h2) {
  MembershipReport rep;
  require(!h2.is_constant(), Errc::ConstantInInput, "h2 must be nonconstant");
  PolySystem sys = build_system(k, {h2}, Flavor::FAKE_Fbar_f);

  MultiPoly f1 = fake_descend(h1);
  MultiPoly f2 = fake_descend(h2);
  int d1 = static_cast<int>(f1.degree().value_or(0));
  int d2 = static_cast<int>(f2.degree().value_or(0));

  rep.add_ok = in_Vd(fake_descend(h1 + h2) - (f1 + f2), sys, std::max(d1, d2));
  rep.mul_ok = in_Vd(fake_descend(h1 * h2) - f1 * f2, sys, d1 + d2);

  rep.u = remainder_threshold(k->p(), *h2.degree());
  UniPoly h3 = up_mod(h1, h2);
  MultiPoly diff = fake_descend(h3) - f1;
  rep.rem_level = std::max<int>(h1.is_zero() ? 0 : static_cast<int>(up_weight(h1)), rep.u);
  rep.rem_ok = in_Vd(diff, sys, rep.rem_level);
  if (rep.rem_level > 1) {
    int dd = diff.is_zero() ? 0 : static_cast<int>(*diff.degree());
    rep.rem_at_u_minus_1 = dd <= rep.rem_level - 1 && in_Vd(diff, sys, rep.rem_level - 1);
  }
  return rep;
}

GcdPropReport gcdprop_check(std::shared_ptr<const Field> k, const UniPoly& f) {
  GcdPropReport rep;
  require(!f.is_constant(), Errc::ConstantInInput, "f must be nonconstant");
  rep.u = remainder_threshold(k->p(), *f.degree());
  PolySystem sys = build_system(k, {f}, Flavor::FAKE_Fbar_f);
  MacaulayState vu = compute_Wd(sys, rep.u, Ord::DRL);

  auto [g, trace] = up_gcd(UniPoly::field_equation(k.get()), f);
  rep.holds = true;
  // trace = [X^{q^n}-X, f, g_1, ..., 0]; the claim covers the computed
  // remainders and the monic gcd.
  for (std::size_t i = 2; i < trace.remainders.size(); ++i) {
    ++rep.remainders;
    if (!vu.contains(fake_descend(trace.remainders[i]))) {
      rep.holds = false;
      if (rep.first_failure < 0) rep.first_failure = static_cast<int>(i);
    }
  }
  if (!vu.contains(fake_descend(g))) {
    rep.holds = false;
    if (rep.first_failure < 0) rep.first_failure = 0;
  }
  return rep;
}

}  // namespace descentlab
