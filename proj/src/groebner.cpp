#include "creg/groebner.hpp"

#include <algorithm>
#include <list>

namespace creg {

namespace {

int find_divisor(const Polynomial& h, const std::vector<Polynomial>& G) {
  for (size_t i = 0; i < G.size(); ++i)
    if (!G[i].is_zero() && G[i].lead_mono().divides(h.lead_mono())) return static_cast<int>(i);
  return -1;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G) {
  DivisionResult out;
  out.remainder = Polynomial::zero(f.ring(), f.order());
  out.quotients.assign(G.size(), Polynomial::zero(f.ring(), f.order()));
  Polynomial h = f;
  while (!h.is_zero()) {
    int i = find_divisor(h, G);
    if (i >= 0) {
      Monomial m = h.lead_mono() / G[i].lead_mono();
      Scalar c = h.lead_coef() / G[i].lead_coef();
      out.quotients[i] = out.quotients[i] + Polynomial::monomial(f.ring(), m, c).with_order(f.order());
      h = h - G[i].times_term(m, c);
    } else {
      Polynomial lt = Polynomial::monomial(f.ring(), h.lead_mono(), h.lead_coef()).with_order(f.order());
      out.remainder = out.remainder + lt;
      h = h - lt;
    }
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  Polynomial r = Polynomial::zero(f.ring(), f.order());
  Polynomial h = f;
  while (!h.is_zero()) {
    int i = find_divisor(h, G);
    if (i >= 0) {
      Monomial m = h.lead_mono() / G[i].lead_mono();
      Scalar c = h.lead_coef() / G[i].lead_coef();
      h = h - G[i].times_term(m, c);
    } else {
      Polynomial lt = Polynomial::monomial(f.ring(), h.lead_mono(), h.lead_coef()).with_order(f.order());
      r = r + lt;
      h = h - lt;
    }
  }
  return r;
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& G) {
  require_same_ring(f.ring(), G.ring);
  Polynomial g = f.order() == G.order ? f : f.with_order(G.order);
  return normal_form(g, G.basis);
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (f.is_zero()) return f;
  DivisionResult d = divide(f, {g});
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotients[0];
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
  return f.times_term(l / f.lead_mono(), f.lead_coef().inv()) -
         g.times_term(l / g.lead_mono(), g.lead_coef().inv());
}

namespace {

struct Pair {
  int i, j;
  Monomial lcm;
};

struct PairCmp {
  const MonomialOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.lcm.deg() != b.lcm.deg()) return a.lcm.deg() < b.lcm.deg();
    auto c = mono_cmp(*ord, a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Gebauer-Moeller update: prunes the pair list when g[t] joins the basis.
void gm_update(std::vector<Pair>& pairs, const std::vector<Polynomial>& g, int t) {
  const Monomial& lt = g[t].lead_mono();
  std::vector<Pair> fresh;
  for (int i = 0; i < t; ++i) {
    if (g[i].is_zero()) continue;
    fresh.push_back({i, t, Monomial::lcm(g[i].lead_mono(), lt)});
  }
  // criterion M/F: drop a new pair if another new pair's lcm properly divides
  // it, or ties with it and was kept first
  std::vector<Pair> kept;
  for (size_t a = 0; a < fresh.size(); ++a) {
    bool drop = false;
    for (size_t b = 0; b < fresh.size() && !drop; ++b) {
      if (a == b) continue;
      if (fresh[b].lcm == fresh[a].lcm) {
        if (b < a) drop = true;  // F: keep the first representative
      } else if (fresh[b].lcm.divides(fresh[a].lcm)) {
        drop = true;  // M
      }
    }
    for (const auto& k : kept)
      if (k.lcm.divides(fresh[a].lcm) && k.lcm != fresh[a].lcm) drop = true;
    if (!drop) kept.push_back(fresh[a]);
  }
  // criterion B on old pairs
  std::erase_if(pairs, [&](const Pair& p) {
    return lt.divides(p.lcm) && Monomial::lcm(g[p.i].lead_mono(), lt) != p.lcm &&
           Monomial::lcm(g[p.j].lead_mono(), lt) != p.lcm;
  });
  // Buchberger's coprimality criterion
  for (auto& p : kept)
    if (!g[p.i].lead_mono().coprime(lt)) pairs.push_back(p);
}

}  // namespace

ReducedGB buchberger(std::vector<Polynomial> gens, const MonomialOrder& order, RingPtr ring) {
  ReducedGB out;
  out.order = order;
  out.ring = std::move(ring);
  std::vector<Polynomial> g;
  for (auto& f : gens) {
    if (!out.ring) out.ring = f.ring();
    if (f.is_zero()) continue;
    require_same_ring(out.ring, f.ring());
    g.push_back(f.order() == order ? f : f.with_order(order));
  }
  if (g.empty()) return out;  // zero ideal marker

  std::vector<Pair> pairs;
  for (size_t t = 0; t < g.size(); ++t) gm_update(pairs, g, static_cast<int>(t));
  PairCmp cmp{&order};
  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), cmp);
    Pair p = *it;
    pairs.erase(it);
    Polynomial r = normal_form(s_polynomial(g[p.i], g[p.j]), g);
    if (!r.is_zero()) {
      g.push_back(r.monic());
      gm_update(pairs, g, static_cast<int>(g.size()) - 1);
    }
  }

  // minimalize: drop elements whose lead is divisible by another lead
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].lead_mono().divides(g[i].lead_mono())) {
        if (g[j].lead_mono() != g[i].lead_mono() || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  // full tail reduction against the others
  std::vector<Polynomial> reduced = minimal;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced[i] = normal_form(minimal[i], others).monic();
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return mono_cmp(order, a.lead_mono(), b.lead_mono()) == std::strong_ordering::less;
  });
  out.basis = std::move(reduced);
  return out;
}

}  // namespace creg
