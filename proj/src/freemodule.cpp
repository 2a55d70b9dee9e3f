#include "creg/freemodule.hpp"

#include <algorithm>

namespace creg {

std::strong_ordering SchreyerOrder::cmp(const ModTerm& a, const ModTerm& b) const {
  const SchreyerColumn& ca = cols[a.comp];
  const SchreyerColumn& cb = cols[b.comp];
  auto r = mono_cmp(base, a.mono * ca.tau, b.mono * cb.tau);
  if (r != std::strong_ordering::equal) return r;
  for (size_t i = 0; i < ca.revpath.size(); ++i)
    if (ca.revpath[i] != cb.revpath[i]) return cb.revpath[i] <=> ca.revpath[i];
  return b.comp <=> a.comp;  // smaller component index is the greater term
}

ModPoly mod_sub_multiple(const ModPoly& f, const ModPoly& g, const Monomial& m, const Scalar& c,
                         const SchreyerOrder& ord) {
  // f - (m, c) * g, merged descending
  ModPoly r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  size_t i = 0, j = 0;
  while (i < f.terms.size() && j < g.terms.size()) {
    ModTerm gt{g.terms[j].first.comp, g.terms[j].first.mono * m};
    auto rel = ord.cmp(f.terms[i].first, gt);
    if (rel == std::strong_ordering::greater) {
      r.terms.push_back(f.terms[i++]);
    } else if (rel == std::strong_ordering::less) {
      Scalar s = -(g.terms[j].second * c);
      if (!s.is_zero()) r.terms.push_back({gt, s});
      ++j;
    } else {
      Scalar s = f.terms[i].second - g.terms[j].second * c;
      if (!s.is_zero()) r.terms.push_back({gt, s});
      ++i;
      ++j;
    }
  }
  for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
  for (; j < g.terms.size(); ++j) {
    Scalar s = -(g.terms[j].second * c);
    if (!s.is_zero()) r.terms.push_back({ModTerm{g.terms[j].first.comp, g.terms[j].first.mono * m}, s});
  }
  return r;
}

SchreyerLevel first_level(const ReducedGB& gb) {
  SchreyerLevel lv;
  lv.order.base = gb.order;
  lv.order.cols = {SchreyerColumn{Monomial{}, {}}};  // S^1
  for (const auto& f : gb.basis) {
    ModPoly p;
    for (const auto& t : f.terms()) p.terms.push_back({ModTerm{0, t.mono}, t.coef});
    lv.gens.push_back(std::move(p));
    lv.degrees.push_back(f.homogeneous_degree());
  }
  return lv;
}

SchreyerLevel syzygy_level(const SchreyerLevel& lv) {
  const int n = static_cast<int>(lv.gens.size());
  SchreyerLevel nx;
  nx.order.base = lv.order.base;
  nx.order.cols.resize(n);
  for (int i = 0; i < n; ++i) {
    const ModTerm& lt = lv.gens[i].lead();
    SchreyerColumn col;
    col.tau = lt.mono * lv.order.cols[lt.comp].tau;
    col.revpath = lv.order.cols[lt.comp].revpath;
    col.revpath.push_back(lt.comp);
    nx.order.cols[i] = std::move(col);
  }

  std::vector<std::vector<int>> bucket(lv.order.cols.size());
  for (int i = 0; i < n; ++i) bucket[lv.gens[i].lead().comp].push_back(i);

  struct Pair {
    int i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (const auto& bk : bucket)
    for (size_t a = 0; a < bk.size(); ++a)
      for (size_t b = a + 1; b < bk.size(); ++b)
        pairs.push_back({bk[a], bk[b], Monomial::lcm(lv.gens[bk[a]].lead().mono, lv.gens[bk[b]].lead().mono)});
  std::sort(pairs.begin(), pairs.end(), [](const Pair& p, const Pair& q) {
    if (p.lcm.deg() != q.lcm.deg()) return p.lcm.deg() < q.lcm.deg();
    if (p.i != q.i) return p.i < q.i;
    return p.j < q.j;
  });

  for (const auto& pr : pairs) {
    const ModPoly& gi = lv.gens[pr.i];
    const ModPoly& gj = lv.gens[pr.j];
    Monomial ui = pr.lcm / gi.lead().mono;
    Monomial uj = pr.lcm / gj.lead().mono;
    Scalar ci = gi.lead_coef().inv();
    Scalar cj = gj.lead_coef().inv();
    // spair = (1/lc_i) ui g_i - (1/lc_j) uj g_j, reduced to zero over the GB;
    // the recorded cofactors form the syzygy.
    ModPoly zero;
    ModPoly spair = mod_sub_multiple(mod_sub_multiple(zero, gi, ui, -ci, lv.order), gj, uj, cj, lv.order);
    std::vector<std::pair<ModTerm, Scalar>> raw;
    raw.push_back({ModTerm{pr.i, ui}, ci});
    raw.push_back({ModTerm{pr.j, uj}, -cj});
    while (!spair.is_zero()) {
      const ModTerm& lt = spair.lead();
      int red = -1;
      for (int cand : bucket[lt.comp])
        if (lv.gens[cand].lead().mono.divides(lt.mono)) {
          red = cand;
          break;
        }
      if (red < 0) throw std::logic_error("S-pair fails to reduce over a Groebner basis");
      Monomial m = lt.mono / lv.gens[red].lead().mono;
      Scalar c = spair.lead_coef() / lv.gens[red].lead_coef();
      spair = mod_sub_multiple(spair, lv.gens[red], m, c, lv.order);
      raw.push_back({ModTerm{red, m}, -c});
    }
    std::sort(raw.begin(), raw.end(), [&](const auto& a, const auto& b) {
      return nx.order.cmp(a.first, b.first) == std::strong_ordering::greater;
    });
    ModPoly syz;
    for (auto& [t, c] : raw) {
      if (!syz.terms.empty() && syz.terms.back().first == t) {
        syz.terms.back().second = syz.terms.back().second + c;
        if (syz.terms.back().second.is_zero()) syz.terms.pop_back();
      } else {
        syz.terms.push_back({t, c});
      }
    }
    if (syz.is_zero() || !(syz.lead() == ModTerm{pr.i, ui}))
      throw std::logic_error("Schreyer lead-term invariant violated");
    nx.gens.push_back(std::move(syz));
    nx.degrees.push_back(ui.deg() + lv.degrees[pr.i]);
  }
  return nx;
}

}  // namespace creg
