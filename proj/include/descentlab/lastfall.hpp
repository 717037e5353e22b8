#pragma once

#include <optional>

#include "descentlab/bounds.hpp"
#include "descentlab/solve.hpp"

namespace descentlab {

struct FallEvent {
  int degree = 0;
  std::vector<Monomial> new_lts;  // leading terms of new elements of degree < d
};

// Exact last-fall-degree computation through a finite certificate: once the
// reduced basis sits inside V_{J*}, a degree-compatible division argument
// settles every higher degree, so scanning I_{<=j} against V_j for j <= J*
// decides d_E exactly. Without a reachable J* the scan still yields a lower
// bracket.
struct LastFallReport {
  std::optional<int> exact;
  int lower = 0;                    // valid in all cases
  std::optional<int> stabilization; // J*, the DRL solving degree
  std::vector<FallEvent> events;
  std::vector<std::size_t> v_ranks;
  std::vector<std::size_t> ideal_ranks;

  bool certified() const { return exact.has_value(); }
  int exact_or_throw() const;
};

// d_max <= 0 picks the system default. Systems whose ideal is not
// zero-dimensional are accepted only with allow_degree_cap (bracket
// semantics).
LastFallReport last_fall_exact(const PolySystem& sys, int d_max = 0,
                               bool allow_degree_cap = false);

struct RelateWeilReport {
  int lfd_weil = 0;       // exact d of F'_f
  int lfd_fake = 0;       // exact d of Fbar_f
  std::uint32_t deg_weil = 0;  // deg(F')
  int lhs = 0;            // max{d_{F'_f}, q, deg F'}
  int rhs = 0;            // max{d_{Fbar_f}, q, deg F'}
  bool holds = false;
};

RelateWeilReport relate_weil_check(std::shared_ptr<const Field> k,
                                   const std::vector<UniPoly>& F, int d_max = 0);

// Membership assertions behind the addition/multiplication/remainder
// congruences: checked inside V-spaces of the fake descent system of {h2}.
struct MembershipReport {
  bool add_ok = false;
  bool mul_ok = false;
  bool rem_ok = false;
  int u = 0;
  int rem_level = 0;          // max(w(h1), u)
  bool rem_at_u_minus_1 = false;  // recorded, not asserted
  void check() const;
};

MembershipReport membership_lemma_suite(std::shared_ptr<const Field> k, const UniPoly& h1,
                                        const UniPoly& h2);

// Every Euclidean remainder of gcd(X^{q^n}-X, f) has its fake descent in
// V_u of the fake descent system of {f}.
struct GcdPropReport {
  int u = 0;
  std::size_t remainders = 0;
  bool holds = false;
  int first_failure = -1;  // index in the trace when !holds
};

GcdPropReport gcdprop_check(std::shared_ptr<const Field> k, const UniPoly& f);

}  // namespace descentlab
