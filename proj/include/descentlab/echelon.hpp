#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "descentlab/rows.hpp"

namespace descentlab {

// Reduced-row-echelon basis of a growing row space. absorb() is the OpenMP
// kernel: candidates are reduced against the current basis in parallel,
// survivors are folded in Gauss-Jordan style with the per-pivot elimination
// loop parallelized across rows. The RREF of a row space is unique, so the
// result is bitwise identical for any thread count, chunking, or candidate
// order; rref_serial below recomputes it independently as the reference.
template <class Ops>
class EchelonBasis {
 public:
  using Row = typename Ops::Row;

  struct Entry {
    Row row;
    std::size_t pivot;
    int degree;  // true total degree of the row polynomial
    RowProv prov;
    bool dirty = true;  // content changed since last mutant expansion
  };

  EchelonBasis(Ops ops, const std::vector<int>* coldeg)
      : ops_(std::move(ops)), coldeg_(coldeg), pivot_entry_(ops_.cols, -1) {}

  const Ops& ops() const { return ops_; }
  std::size_t rank() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<Entry>& entries() { return entries_; }

  int entry_at_pivot(std::size_t col) const { return pivot_entry_[col]; }

  // Entry indices ordered by pivot column (matrix row order).
  std::vector<std::size_t> order_by_pivot() const {
    std::vector<std::size_t> idx;
    idx.reserve(entries_.size());
    for (std::size_t c = 0; c < pivot_entry_.size(); ++c)
      if (pivot_entry_[c] >= 0) idx.push_back(static_cast<std::size_t>(pivot_entry_[c]));
    return idx;
  }

  // Cancel every pivot column appearing in r; returns the leading column of
  // the residual (npos when r reduces to zero). One ascending pass suffices
  // because basis rows are zero at all other pivots.
  std::size_t reduce(Row& r) const {
    std::size_t c = ops_.leading(r, 0);
    std::size_t lead = npos;
    while (c != npos) {
      int pi = pivot_entry_[c];
      if (pi >= 0) {
        ops_.submul(r, Ops::at(r, c), entries_[pi].row, c);
        c = ops_.leading(r, c);
      } else {
        if (lead == npos) lead = c;
        c = ops_.leading(r, c + 1);
      }
    }
    return lead;
  }

  bool contains(Row r) const { return reduce(r) == npos; }

  int row_degree(const Row& r) const {
    int d = -1;
    std::size_t c = ops_.leading(r, 0);
    while (c != npos) {
      d = std::max(d, (*coldeg_)[c]);
      c = ops_.leading(r, c + 1);
    }
    return d;
  }

  // Absorb a batch of candidate rows; returns the number of new pivots.
  std::size_t absorb(std::vector<Row>&& rows, std::vector<RowProv>&& provs, int round) {
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(rows.size());

    // Phase A: independent full reduction against the current basis.
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < m; ++i) reduce(rows[i]);

    std::vector<std::size_t> live;
    live.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!ops_.is_zero(rows[i])) live.push_back(i);

    // Phase B: Gauss-Jordan among the survivors. Pivot choice is the
    // minimal (column, input index); the elimination sweep covers both the
    // remaining survivors and the survivors already accepted this batch.
    std::vector<std::size_t> accepted;
    std::vector<char> done(rows.size(), 0);
    for (;;) {
      std::size_t best = npos, best_col = npos;
      for (std::size_t i : live) {
        if (done[i]) continue;
        std::size_t c = ops_.leading(rows[i], 0);
        if (c == npos) {
          done[i] = 1;
          continue;
        }
        if (c < best_col) {
          best_col = c;
          best = i;
        }
      }
      if (best == npos) break;
      done[best] = 1;
      ops_.make_monic(rows[best], best_col);
      const Row& prow = rows[best];
      const std::ptrdiff_t nl = static_cast<std::ptrdiff_t>(live.size());
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t k = 0; k < nl; ++k) {
        std::size_t i = live[k];
        if (i == best) continue;
        std::uint32_t v = Ops::at(rows[i], best_col);
        if (v) ops_.submul(rows[i], v, prow, best_col);
      }
      accepted.push_back(best);
    }

    if (accepted.empty()) return 0;

    // Phase C: clear the new pivot columns from the old rows. The new rows
    // are final and mutually reduced, so each old row is independent.
    std::vector<std::size_t> new_cols;
    new_cols.reserve(accepted.size());
    for (std::size_t i : accepted) new_cols.push_back(ops_.leading(rows[i], 0));
    std::sort(new_cols.begin(), new_cols.end());
    std::vector<int> col_to_acc(ops_.cols, -1);
    for (std::size_t i : accepted) col_to_acc[ops_.leading(rows[i], 0)] = static_cast<int>(i);

    const std::ptrdiff_t ne = static_cast<std::ptrdiff_t>(entries_.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < ne; ++k) {
      Entry& e = entries_[k];
      bool touched = false;
      for (std::size_t c : new_cols) {
        if (c <= e.pivot) continue;
        std::uint32_t v = Ops::at(e.row, c);
        if (v) {
          ops_.submul(e.row, v, rows[col_to_acc[c]], c);
          touched = true;
        }
      }
      if (touched) {
        e.degree = row_degree(e.row);
        e.dirty = true;
      }
    }

    for (std::size_t i : accepted) {
      std::size_t c = ops_.leading(rows[i], 0);
      Entry e{std::move(rows[i]), c, 0, std::move(provs[i]), true};
      e.prov.round = round;
      e.degree = row_degree(e.row);
      pivot_entry_[c] = static_cast<int>(entries_.size());
      entries_.push_back(std::move(e));
    }
    return accepted.size();
  }

 private:
  Ops ops_;
  const std::vector<int>* coldeg_;
  std::vector<Entry> entries_;      // insertion order
  std::vector<int> pivot_entry_;    // column -> entry index, -1 if free
};

// Plain sequential Gauss-Jordan, kept as the reference implementation for
// the tests and the benchmark. Returns RREF rows sorted by pivot column.
template <class Ops>
std::vector<typename Ops::Row> rref_serial(const Ops& ops,
                                           std::vector<typename Ops::Row> rows) {
  using Row = typename Ops::Row;
  std::vector<Row> basis;     // echelon rows
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    // eliminate known pivots
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint32_t v = Ops::at(r, pivots[b]);
      if (v) ops.submul(r, v, basis[b], pivots[b]);
    }
    std::size_t lead = ops.leading(r, 0);
    if (lead == npos) continue;
    ops.make_monic(r, lead);
    // clear the new column from earlier rows
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::uint32_t v = Ops::at(basis[b], lead);
      if (v) ops.submul(basis[b], v, r, lead);
    }
    basis.push_back(std::move(r));
    pivots.push_back(lead);
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  std::vector<Row> out;
  out.reserve(basis.size());
  for (std::size_t i : order) out.push_back(std::move(basis[i]));
  return out;
}

}  // namespace descentlab
