#pragma once

#include "creg/invariants.hpp"
#include "creg/linalg.hpp"

namespace creg {

/// Projective linear subspace given by independent linear forms in reduced
/// row echelon form. dim = n - rank; dim -1 encodes the empty subspace.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  static LinearSubspace from_forms(const RingPtr& r, const std::vector<Polynomial>& forms);
  static LinearSubspace whole(const RingPtr& r);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& forms() const { return forms_; }
  int ambient_dim() const { return ring_->nvars - 1; }
  int dim() const { return ambient_dim() - static_cast<int>(forms_.size()); }
  Ideal ideal() const;
  bool contains_point(const std::vector<Scalar>& pt) const;
  bool contains(const LinearSubspace& other) const;
  bool operator==(const LinearSubspace& o) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> forms_;  // canonical RREF rows
};

/// Smallest linear subspace containing V(I): zero set of the degree-1 part
/// of the saturation.
LinearSubspace span_of(const Ideal& I);

/// Intersection of subspaces: union of the defining forms.
LinearSubspace subspace_meet(const LinearSubspace& a, const LinearSubspace& b);

LinearSubspace line_through(const RingPtr& r, const std::vector<Scalar>& p, const std::vector<Scalar>& q);
LinearSubspace subspace_through(const RingPtr& r, const std::vector<std::vector<Scalar>>& points);

/// deg(C) - dim(Span(C)) + 2, the Eisenbud-Goto bound.
struct XiValue {
  long long degree = 0;
  int span_dim = 0;
  long long xi = 0;
};

XiValue xi_of_ideal(const Ideal& I);

}  // namespace creg
