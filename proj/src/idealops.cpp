#include "creg/ideal.hpp"

namespace creg {

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens = I.gens();
  for (const auto& g : J.gens()) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens())
    for (const auto& g : J.gens()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr& r = I.ring();
  if (I.is_zero() || J.is_zero()) return zero_ideal(r);
  RingPtr ext = extend_ring(r);
  int tvar = r->nvars;
  MonomialOrder ord = MonomialOrder::elim(ext->nvars, {tvar});
  Polynomial t = Polynomial::variable(ext, tvar).with_order(ord);
  Polynomial one_minus_t = Polynomial::constant(ext, 1).with_order(ord) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * embed_extended(f, ext, ord));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * embed_extended(g, ext, ord));
  ReducedGB gb = buchberger(std::move(gens), ord, ext);
  MonomialOrder base_ord = MonomialOrder::grevlex(r->nvars);
  std::vector<Polynomial> kept;
  for (const auto& f : gb.basis) {
    bool has_t = false;
    for (const auto& term : f.terms())
      if (term.mono[tvar] != 0) {
        has_t = true;
        break;
      }
    if (!has_t) kept.push_back(restrict_from_extended(f, r, base_ord));
  }
  return Ideal(r, std::move(kept));
}

namespace {

Ideal quotient_by_poly(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("ideal quotient by zero");
  if (f.degree() == 0) return I;
  Ideal fI(I.ring(), {f});
  Ideal both = ideal_intersect(I, fI);
  std::vector<Polynomial> gens;
  for (const auto& g : both.gens()) {
    auto q = divide_exact(g, f);
    if (!q) throw std::logic_error("intersection generator not divisible in ideal quotient");
    gens.push_back(*q);
  }
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) throw std::invalid_argument("ideal quotient by the zero ideal");
  bool first = true;
  Ideal acc;
  for (const auto& f : J.gens()) {
    Ideal q = quotient_by_poly(I, f);
    acc = first ? q : ideal_intersect(acc, q);
    first = false;
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  Ideal cur = I;
  for (;;) {
    Ideal next = ideal_quotient(cur, J);
    if (next.equals(cur)) return cur;
    cur = next;
  }
}

Ideal saturate(const Ideal& I) {
  auto sat = I.cached<Ideal>("saturation_m", [&]() -> std::shared_ptr<const Ideal> {
    return std::make_shared<const Ideal>(saturate(I, irrelevant_ideal(I.ring())));
  });
  return *sat;
}

bool is_saturated(const Ideal& I) { return saturate(I).equals(I); }

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  const RingPtr& r = I.ring();
  if (vars.empty()) return Ideal(r, I.groebner().basis);
  MonomialOrder ord = MonomialOrder::elim(r->nvars, vars);
  const ReducedGB& gb = I.groebner(ord);
  std::vector<bool> drop(r->nvars, false);
  for (int v : vars) drop[v] = true;
  MonomialOrder base_ord = MonomialOrder::grevlex(r->nvars);
  std::vector<Polynomial> kept;
  for (const auto& f : gb.basis) {
    bool uses = false;
    for (const auto& term : f.terms())
      for (int v = 0; v < r->nvars && !uses; ++v)
        if (drop[v] && term.mono[v] != 0) uses = true;
    if (!uses) kept.push_back(f.with_order(base_ord));
  }
  return Ideal(r, std::move(kept));
}

}  // namespace creg
