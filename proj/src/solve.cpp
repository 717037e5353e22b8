#include "descentlab/solve.hpp"

#include <algorithm>
#include <sstream>

namespace descentlab {

int SolveReport::sd_or_throw() const {
  if (sd) return *sd;
  std::ostringstream os;
  os << "solving degree not reached by d_max=" << d_max << "; missing " << missing.size()
     << " basis element(s)";
  if (!missing.empty()) os << ", first: " << missing.front().str();
  fail(Errc::NotReachedByDmax, os.str());
}

SolveReport measure_solving_degree(const PolySystem& sys, Ord ord, int d_max) {
  SolveReport rep;
  rep.ord = ord;
  rep.d_max = d_max > 0 ? d_max : sys.default_dmax();
  rep.gb = buchberger_gb(sys, ord);

  // Nothing below the largest basis degree can contain the basis.
  int d_start = std::max(1, static_cast<int>(rep.gb.max_degree()));
  std::size_t prev_low_rank = 0;
  for (int d = d_start; d <= rep.d_max; ++d) {
    MacaulayState st = compute_Wd(sys, d, ord);
    DegreeTrace tr;
    tr.d = d;
    tr.rows = st.stats().initial_rows + st.stats().mutant_rows;
    tr.cols = st.stats().cols;
    tr.rank = st.stats().rank;
    tr.mutants = st.stats().mutant_rows;
    std::size_t low = st.low_pivots().size();
    tr.new_falls = low > prev_low_rank ? low - prev_low_rank : 0;
    prev_low_rank = low;
    rep.trace.push_back(tr);

    rep.missing.clear();
    for (const auto& g : rep.gb.polys)
      if (!st.contains(g)) rep.missing.push_back(g);
    if (!rep.missing.empty()) continue;

    rep.sd = d;
    if (auto point = rep.gb.simple_zero_point(sys.nvars)) {
      rep.simple_zero = true;
      rep.solution = point;
      // The trailing n nonzero rows of the echelon matrix must be exactly
      // X_i - a_i.
      auto polys = st.row_polys();
      rep.deg1_rows_ok = polys.size() >= point->size();
      if (rep.deg1_rows_ok) {
        const Field* f = sys.coeff.get();
        std::size_t n = point->size();
        std::vector<MultiPoly> expect;
        for (std::uint32_t i = 0; i < n; ++i) {
          std::vector<MTerm> t;
          t.push_back({Monomial::variable(sys.nvars, i), f->one()});
          Fe c = f->neg((*point)[i]);
          if (!c.is_zero()) t.push_back({Monomial::unit(sys.nvars), c});
          expect.emplace_back(f, sys.nvars, std::move(t));
        }
        for (std::size_t i = 0; i < n && rep.deg1_rows_ok; ++i) {
          const MultiPoly& row = polys[polys.size() - n + i];
          rep.deg1_rows_ok = std::find(expect.begin(), expect.end(), row) != expect.end();
        }
      }
    }
    break;
  }
  return rep;
}

}  // namespace descentlab
