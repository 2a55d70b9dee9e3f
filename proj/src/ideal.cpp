#include "creg/ideal.hpp"

namespace creg {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : rep_(std::make_shared<Rep>()) {
  rep_->ring = std::move(ring);
  for (auto& f : gens) {
    if (f.is_zero()) continue;
    require_same_ring(rep_->ring, f.ring());
    rep_->gens.push_back(std::move(f));
  }
}

const ReducedGB& Ideal::groebner() const { return groebner(MonomialOrder::grevlex(rep_->ring->nvars)); }

const ReducedGB& Ideal::groebner(const MonomialOrder& ord) const {
  std::string key = ord.key();
  {
    std::lock_guard<std::mutex> lk(rep_->mu);
    auto it = rep_->gb.find(key);
    if (it != rep_->gb.end()) return *it->second;
  }
  auto gb = std::make_shared<ReducedGB>(buchberger(rep_->gens, ord, rep_->ring));
  std::lock_guard<std::mutex> lk(rep_->mu);
  auto [it, inserted] = rep_->gb.emplace(key, gb);
  return *it->second;
}

bool Ideal::is_homogeneous() const {
  for (const auto& f : rep_->gens)
    if (!f.is_homogeneous()) return false;
  return true;
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, groebner()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::equals(const Ideal& other) const {
  const auto& a = groebner().basis;
  const auto& b = other.groebner().basis;
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return I.contains(f);
}

Ideal zero_ideal(const RingPtr& r) { return Ideal(r, {}); }

Ideal unit_ideal(const RingPtr& r) { return Ideal(r, {Polynomial::constant(r, 1)}); }

Ideal irrelevant_ideal(const RingPtr& r) {
  std::vector<Polynomial> gens;
  for (int i = 0; i < r->nvars; ++i) gens.push_back(Polynomial::variable(r, i));
  return Ideal(r, std::move(gens));
}

}  // namespace creg
