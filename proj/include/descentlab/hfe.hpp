#pragma once

#include "descentlab/bounds.hpp"
#include "descentlab/lastfall.hpp"
#include "descentlab/solve.hpp"

namespace descentlab {

struct HfeParams {
  std::uint32_t q = 2;
  std::uint32_t n = 5;
  std::uint32_t t = 3;
  std::uint64_t seed = 1;
};

// Basic HFE: central map f = sum beta X^{q^a + q^b} + sum alpha X^{q^z} + mu
// with deg(f) <= q^t, hidden by secret affine maps S, T over GF(q). The
// public key is the componentwise descent of f composed with S and T,
// reduced modulo the field equations; every component has degree <= 2.
struct HfeKeyPair {
  HfeParams params;
  std::shared_ptr<const Field> base;  // GF(q)
  std::shared_ptr<const Field> ext;   // GF(q^n)
  UniPoly f;
  AffineMap S, T;
  std::vector<MultiPoly> pub;
};

HfeKeyPair hfe_keygen(std::uint32_t q, std::uint32_t n, std::uint32_t t, std::uint64_t seed);
HfeKeyPair hfe_keygen(std::uint32_t q, std::uint32_t n, std::uint32_t t, std::uint64_t seed,
                      std::shared_ptr<const Field> ext);

std::vector<digit_t> hfe_encrypt(const HfeKeyPair& kp, std::span<const digit_t> plaintext);

// All preimages of the ciphertext under the public map, via root finding of
// the central polynomial; sorted, the true plaintext always included.
std::vector<std::vector<digit_t>> hfe_decrypt(const HfeKeyPair& kp,
                                              std::span<const digit_t> ciphertext);

struct HfeAttackResult {
  std::vector<std::vector<digit_t>> candidates;
  SolveReport public_solve;  // engine run on {p_i - c_i} + field equations
  BoundReport bounds;        // closed-form bounds of the central map
  bool read_from_rows = false;  // solution taken from the trailing linear rows
  std::optional<int> sd_fake_central;        // sd of the fake descent of {f - Y}
  std::optional<int> lfd_weil_central;       // exact last fall degree of F'_f of {f - Y}
};

// Runs the matrix engine on the public system. The private half of the key
// is used only for the accompanying central-map measurements and bounds;
// pass measure_central = false to skip them.
HfeAttackResult hfe_attack(const HfeKeyPair& kp, std::span<const digit_t> ciphertext,
                           int d_max = 0, bool measure_central = true);

}  // namespace descentlab
