#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "descentlab/field.hpp"
#include "descentlab/multipoly.hpp"

namespace descentlab {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// Where a matrix row came from: a generator times a monomial, or a product
// adjoined during mutant extension round `round`.
struct RowProv {
  int gen = -1;
  Monomial mult;
  int round = 0;
};

// GF(2) rows packed 64 columns per word. Column c is bit (c & 63) of word
// (c >> 6); the leading column is the lowest set bit.
struct F2Ops {
  using Row = std::vector<std::uint64_t>;

  std::size_t cols = 0;
  std::size_t words = 0;

  explicit F2Ops(std::size_t cols_) : cols(cols_), words((cols_ + 63) / 64) {}

  Row make_row() const { return Row(words, 0); }

  static void set(Row& r, std::size_t c, std::uint32_t v) {
    if (v & 1)
      r[c >> 6] |= std::uint64_t(1) << (c & 63);
    else
      r[c >> 6] &= ~(std::uint64_t(1) << (c & 63));
  }

  static std::uint32_t at(const Row& r, std::size_t c) {
    return static_cast<std::uint32_t>((r[c >> 6] >> (c & 63)) & 1);
  }

  std::size_t leading(const Row& r, std::size_t from = 0) const {
    std::size_t w = from >> 6;
    if (w >= words) return npos;
    std::uint64_t cur = r[w] & (~std::uint64_t(0) << (from & 63));
    for (;;) {
      if (cur) {
        std::size_t c = (w << 6) + std::countr_zero(cur);
        return c < cols ? c : npos;
      }
      if (++w >= words) return npos;
      cur = r[w];
    }
  }

  bool is_zero(const Row& r) const {
    for (auto w : r)
      if (w) return false;
    return true;
  }

  // dst -= c * src, valid from column `from` on (src is zero before `from`).
  void submul(Row& dst, std::uint32_t /*c == 1*/, const Row& src, std::size_t from) const {
    for (std::size_t w = from >> 6; w < words; ++w) dst[w] ^= src[w];
  }

  void make_monic(Row&, std::size_t) const {}
};

// Rows over any tabled field: one element index per column, multiplication
// through the log/exp tables, addition by XOR in characteristic 2 and by
// table otherwise.
struct FqOps {
  using Row = std::vector<std::uint16_t>;

  const Field* f = nullptr;
  std::size_t cols = 0;
  const std::uint16_t* lg = nullptr;
  const std::uint16_t* ex = nullptr;
  bool char2 = false;
  std::uint32_t ord = 0;

  FqOps(const Field* f_, std::size_t cols_) : f(f_), cols(cols_) {
    require(f->has_tables(), Errc::FieldTooLarge, "matrix kernel needs field tables");
    lg = f->log_table();
    ex = f->exp_table();
    char2 = f->p() == 2;
    ord = static_cast<std::uint32_t>(f->order());
  }

  Row make_row() const { return Row(cols, 0); }

  static void set(Row& r, std::size_t c, std::uint32_t v) {
    r[c] = static_cast<std::uint16_t>(v);
  }

  static std::uint32_t at(const Row& r, std::size_t c) { return r[c]; }

  std::size_t leading(const Row& r, std::size_t from = 0) const {
    for (std::size_t c = from; c < cols; ++c)
      if (r[c]) return c;
    return npos;
  }

  bool is_zero(const Row& r) const { return leading(r, 0) == npos; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return (a && b) ? ex[lg[a] + lg[b]] : 0;
  }

  void submul(Row& dst, std::uint32_t c, const Row& src, std::size_t from) const {
    if (char2) {
      if (c == 1) {
        for (std::size_t k = from; k < cols; ++k) dst[k] ^= src[k];
      } else {
        std::uint32_t lc = lg[c];
        for (std::size_t k = from; k < cols; ++k)
          if (src[k]) dst[k] ^= ex[lc + lg[src[k]]];
      }
    } else {
      for (std::size_t k = from; k < cols; ++k)
        if (src[k]) dst[k] = static_cast<std::uint16_t>(f->sub_idx(dst[k], mul(c, src[k])));
    }
  }

  void make_monic(Row& r, std::size_t lead) const {
    std::uint32_t v = r[lead];
    if (v == 1) return;
    std::uint32_t s = f->inv_idx(v);
    for (std::size_t k = lead; k < cols; ++k)
      if (r[k]) r[k] = static_cast<std::uint16_t>(mul(s, r[k]));
  }
};

}  // namespace descentlab
