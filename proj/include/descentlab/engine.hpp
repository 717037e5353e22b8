#pragma once

#include <memory>
#include <unordered_map>
#include <variant>
#include <vector>

#include "descentlab/descent.hpp"
#include "descentlab/echelon.hpp"

namespace descentlab {

// All monomials of total degree <= d in nvars variables, as matrix columns
// in decreasing term order from left to right.
struct ColumnIndex {
  std::uint32_t nvars = 0;
  int d = 0;
  Ord ord = Ord::DRL;
  std::vector<Monomial> mons;
  std::vector<int> degs;
  std::unordered_map<Monomial, std::uint32_t, MonoHash> pos;

  static ColumnIndex build(std::uint32_t nvars, int d, Ord ord);
  std::size_t size() const { return mons.size(); }
};

std::vector<Monomial> monomials_up_to(std::uint32_t nvars, int d);

struct WdStats {
  std::size_t cols = 0;
  std::size_t initial_rows = 0;
  std::size_t rank = 0;
  std::size_t mutant_rows = 0;  // rows of mutant provenance that created pivots
  int rounds = 0;
};

// Macaulay matrix of a system at degree d: raw rows u*f, their reduced row
// echelon form, and the mutant-extension fixpoint whose row space is W_d.
class MacaulayState {
 public:
  MacaulayState(const PolySystem& sys, int d, Ord ord);

  int d() const { return d_; }
  Ord ord() const { return ord_; }
  const ColumnIndex& columns() const { return cols_; }
  const WdStats& stats() const { return stats_; }
  std::size_t rank() const;
  bool echelonized() const { return echelonized_; }

  void rref();             // echelonize all pending rows
  void mutant_fixpoint();  // extend with u*f_r products until stable

  bool contains(const MultiPoly& g) const;
  std::vector<MultiPoly> row_polys() const;       // matrix order (pivot ascending)
  std::vector<Monomial> pivot_monomials() const;  // same order
  // Pivot monomial and true row degree for rows of degree < d.
  std::vector<std::pair<Monomial, int>> low_pivots() const;

  const Field* field() const { return field_.get(); }

 private:
  template <class Ops>
  struct Impl {
    Ops ops;
    EchelonBasis<Ops> basis;
    std::vector<typename Ops::Row> pending;
    std::vector<RowProv> pending_prov;
    Impl(Ops o, const std::vector<int>* coldeg) : ops(o), basis(o, coldeg) {}
  };

  void add_generator_rows(const PolySystem& sys);

  std::shared_ptr<const Field> field_;
  int d_;
  Ord ord_;
  ColumnIndex cols_;
  WdStats stats_;
  bool echelonized_ = false;
  std::variant<Impl<F2Ops>, Impl<FqOps>> impl_;
};

MacaulayState macaulay_build(const PolySystem& sys, int d, Ord ord);
MacaulayState compute_Wd(const PolySystem& sys, int d, Ord ord);

// Membership in V_d = W_d (computed with DRL, which is degree compatible).
bool in_Vd(const MultiPoly& g, const PolySystem& sys, int d);

}  // namespace descentlab
