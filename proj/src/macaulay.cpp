#include "descentlab/engine.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_set>

namespace descentlab {

namespace {

void enumerate_rec(std::uint32_t nvars, int budget, std::vector<std::uint32_t>& cur,
                   std::size_t i, std::vector<Monomial>& out) {
  if (i + 1 == nvars) {
    for (int e = 0; e <= budget; ++e) {
      cur[i] = static_cast<std::uint32_t>(e);
      out.emplace_back(cur);
    }
    return;
  }
  for (int e = 0; e <= budget; ++e) {
    cur[i] = static_cast<std::uint32_t>(e);
    enumerate_rec(nvars, budget - e, cur, i + 1, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::uint32_t nvars, int d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> cur(nvars, 0);
  enumerate_rec(nvars, d, cur, 0, out);
  return out;
}

ColumnIndex ColumnIndex::build(std::uint32_t nvars, int d, Ord ord) {
  ColumnIndex ci;
  ci.nvars = nvars;
  ci.d = d;
  ci.ord = ord;
  ci.mons = monomials_up_to(nvars, d);
  require(ci.mons.size() <= (1u << 22), Errc::ParamOutOfRange, "column count beyond desk scale");
  std::sort(ci.mons.begin(), ci.mons.end(),
            [ord](const Monomial& a, const Monomial& b) { return order_cmp(a, b, ord) > 0; });
  ci.degs.reserve(ci.mons.size());
  ci.pos.reserve(ci.mons.size() * 2);
  for (std::size_t c = 0; c < ci.mons.size(); ++c) {
    ci.degs.push_back(static_cast<int>(ci.mons[c].deg()));
    ci.pos.emplace(ci.mons[c], static_cast<std::uint32_t>(c));
  }
  return ci;
}

namespace {

template <class Ops>
typename Ops::Row row_of_poly(const Ops& ops, const ColumnIndex& ci, const Field* f,
                              const MultiPoly& g, bool* fits) {
  auto row = ops.make_row();
  *fits = true;
  for (const auto& term : g.terms()) {
    auto it = ci.pos.find(term.m);
    if (it == ci.pos.end()) {
      *fits = false;
      return row;
    }
    Ops::set(row, it->second, f->index_of(term.c));
  }
  return row;
}

template <class Ops>
std::string row_key(const typename Ops::Row& r) {
  return std::string(reinterpret_cast<const char*>(r.data()),
                     r.size() * sizeof(typename Ops::Row::value_type));
}

// u * (row polynomial), expressed on the same column index.
template <class Ops>
typename Ops::Row mult_row(const Ops& ops, const ColumnIndex& ci,
                           const typename Ops::Row& src, const Monomial& u) {
  auto out = ops.make_row();
  std::size_t c = ops.leading(src, 0);
  while (c != npos) {
    Ops::set(out, ci.pos.at(ci.mons[c] * u), Ops::at(src, c));
    c = ops.leading(src, c + 1);
  }
  return out;
}

}  // namespace

MacaulayState::MacaulayState(const PolySystem& sys, int d, Ord ord)
    : field_(sys.coeff),
      d_(d),
      ord_(ord),
      cols_(ColumnIndex::build(sys.nvars, d, ord)),
      impl_(sys.coeff->order() == 2
                ? std::variant<Impl<F2Ops>, Impl<FqOps>>(
                      std::in_place_index<0>, F2Ops(cols_.size()), &cols_.degs)
                : std::variant<Impl<F2Ops>, Impl<FqOps>>(
                      std::in_place_index<1>, FqOps(sys.coeff.get(), cols_.size()), &cols_.degs)) {
  stats_.cols = cols_.size();
  add_generator_rows(sys);
}

void MacaulayState::add_generator_rows(const PolySystem& sys) {
  std::visit(
      [&](auto& im) {
        using OpsT = decltype(im.ops);
        std::unordered_set<std::string> seen;
        for (std::size_t gi = 0; gi < sys.gens.size(); ++gi) {
          const MultiPoly& g = sys.gens[gi];
          if (g.is_zero()) continue;
          int dg = static_cast<int>(*g.degree());
          if (dg > d_) continue;  // E r S_{<=d}
          bool fits = true;
          auto base = row_of_poly(im.ops, cols_, field_.get(), g, &fits);
          for (const Monomial& u : monomials_up_to(sys.nvars, d_ - dg)) {
            auto row = u.is_unit() ? base : mult_row(im.ops, cols_, base, u);
            auto key = row_key<OpsT>(row);
            if (!seen.insert(std::move(key)).second) continue;
            im.pending.push_back(std::move(row));
            im.pending_prov.push_back({static_cast<int>(gi), u, 0});
          }
        }
        stats_.initial_rows = im.pending.size();
      },
      impl_);
}

std::size_t MacaulayState::rank() const {
  return std::visit([](const auto& im) { return im.basis.rank(); }, impl_);
}

void MacaulayState::rref() {
  if (echelonized_) return;
  std::visit(
      [&](auto& im) {
        im.basis.absorb(std::move(im.pending), std::move(im.pending_prov), 0);
        im.pending.clear();
        im.pending_prov.clear();
      },
      impl_);
  echelonized_ = true;
  stats_.rank = rank();
}

void MacaulayState::mutant_fixpoint() {
  rref();
  std::visit(
      [&](auto& im) {
        constexpr std::size_t kChunk = 256;
        int round = 0;
        for (;;) {
          auto order = im.basis.order_by_pivot();
          std::vector<std::size_t> todo;
          for (std::size_t idx : order) {
            auto& e = im.basis.entries()[idx];
            if (!e.dirty) continue;
            if (e.degree >= d_) {
              e.dirty = false;
              continue;
            }
            todo.push_back(idx);
          }
          if (todo.empty()) break;
          ++round;
          for (std::size_t idx : todo) {
            int rdeg;
            typename decltype(im.ops)::Row snapshot;
            {
              auto& e = im.basis.entries()[idx];
              e.dirty = false;
              rdeg = e.degree;
              if (rdeg >= d_) continue;
              snapshot = e.row;
            }
            std::vector<typename decltype(im.ops)::Row> chunk;
            std::vector<RowProv> chunk_prov;
            for (const Monomial& u : monomials_up_to(cols_.nvars, d_ - rdeg)) {
              if (u.is_unit()) continue;
              chunk.push_back(mult_row(im.ops, cols_, snapshot, u));
              chunk_prov.push_back({-1, u, round});
              if (chunk.size() >= kChunk) {
                stats_.mutant_rows +=
                    im.basis.absorb(std::move(chunk), std::move(chunk_prov), round);
                chunk.clear();
                chunk_prov.clear();
              }
            }
            if (!chunk.empty())
              stats_.mutant_rows +=
                  im.basis.absorb(std::move(chunk), std::move(chunk_prov), round);
          }
        }
        stats_.rounds = round;
      },
      impl_);
  stats_.rank = rank();
}

bool MacaulayState::contains(const MultiPoly& g) const {
  if (g.is_zero()) return true;
  return std::visit(
      [&](const auto& im) {
        bool fits = true;
        auto row = row_of_poly(im.ops, cols_, field_.get(), g, &fits);
        if (!fits) return false;
        return im.basis.contains(std::move(row));
      },
      impl_);
}

std::vector<MultiPoly> MacaulayState::row_polys() const {
  return std::visit(
      [&](const auto& im) {
        std::vector<MultiPoly> out;
        for (std::size_t idx : im.basis.order_by_pivot()) {
          const auto& e = im.basis.entries()[idx];
          std::vector<MTerm> t;
          std::size_t c = im.ops.leading(e.row, 0);
          while (c != npos) {
            t.push_back({cols_.mons[c], field_->element(decltype(im.ops)::at(e.row, c))});
            c = im.ops.leading(e.row, c + 1);
          }
          out.emplace_back(field_.get(), cols_.nvars, std::move(t));
        }
        return out;
      },
      impl_);
}

std::vector<Monomial> MacaulayState::pivot_monomials() const {
  return std::visit(
      [&](const auto& im) {
        std::vector<Monomial> out;
        for (std::size_t idx : im.basis.order_by_pivot())
          out.push_back(cols_.mons[im.basis.entries()[idx].pivot]);
        return out;
      },
      impl_);
}

std::vector<std::pair<Monomial, int>> MacaulayState::low_pivots() const {
  return std::visit(
      [&](const auto& im) {
        std::vector<std::pair<Monomial, int>> out;
        for (std::size_t idx : im.basis.order_by_pivot()) {
          const auto& e = im.basis.entries()[idx];
          if (e.degree < d_) out.emplace_back(cols_.mons[e.pivot], e.degree);
        }
        return out;
      },
      impl_);
}

MacaulayState macaulay_build(const PolySystem& sys, int d, Ord ord) {
  return MacaulayState(sys, d, ord);
}

MacaulayState compute_Wd(const PolySystem& sys, int d, Ord ord) {
  MacaulayState st(sys, d, ord);
  st.mutant_fixpoint();
  return st;
}

bool in_Vd(const MultiPoly& g, const PolySystem& sys, int d) {
  if (!g.is_zero())
    require(static_cast<int>(*g.degree()) <= d, Errc::DegreeExceedsD,
            "membership query above the space degree");
  MacaulayState st = compute_Wd(sys, d, Ord::DRL);
  return st.contains(g);
}

}  // namespace descentlab
