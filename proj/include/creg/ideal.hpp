#pragma once

#include <any>
#include <map>
#include <mutex>

#include "creg/groebner.hpp"

namespace creg {

/// Homogeneous ideal: generator list plus lazily computed reduced Groebner
/// bases per order. Cheap to copy; copies share the write-once caches.
/// The zero and unit ideals are legal values.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return rep_->ring; }
  const std::vector<Polynomial>& gens() const { return rep_->gens; }

  const ReducedGB& groebner() const;
  const ReducedGB& groebner(const MonomialOrder& ord) const;

  bool is_zero() const { return groebner().is_zero_ideal(); }
  bool is_unit() const { return groebner().is_unit_ideal(); }
  bool is_proper() const { return !is_unit(); }
  bool is_homogeneous() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;

  /// Write-once auxiliary cache slot (Hilbert data, saturation, ...). The
  /// producer runs outside the lock; concurrent readers observe either no
  /// cache or a complete one.
  template <typename T>
  std::shared_ptr<const T> cached(const std::string& key, const std::function<std::shared_ptr<const T>()>& mk) const {
    {
      std::lock_guard<std::mutex> lk(rep_->mu);
      auto it = rep_->aux.find(key);
      if (it != rep_->aux.end()) return std::any_cast<std::shared_ptr<const T>>(it->second);
    }
    auto value = mk();
    std::lock_guard<std::mutex> lk(rep_->mu);
    auto [it, inserted] = rep_->aux.emplace(key, std::any(value));
    return std::any_cast<std::shared_ptr<const T>>(it->second);
  }

 private:
  struct Rep {
    RingPtr ring;
    std::vector<Polynomial> gens;
    mutable std::mutex mu;
    mutable std::map<std::string, std::shared_ptr<const ReducedGB>> gb;
    mutable std::map<std::string, std::any> aux;
  };
  std::shared_ptr<Rep> rep_;
};

/// f in I, via normal form against the cached basis.
bool ideal_member(const Polynomial& f, const Ideal& I);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
/// I*J, generated by pairwise generator products.
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// Via an auxiliary variable t with a block-elimination order:
/// eliminate t from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// (I : J); J must be nonzero.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// (I : J^inf) by iterating the quotient until stable. J defaults to the
/// irrelevant maximal ideal.
Ideal saturate(const Ideal& I);
Ideal saturate(const Ideal& I, const Ideal& J);
bool is_saturated(const Ideal& I);
/// I ∩ K[vars not in `vars`], generated by basis elements free of `vars`.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

Ideal irrelevant_ideal(const RingPtr& r);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);

}  // namespace creg
