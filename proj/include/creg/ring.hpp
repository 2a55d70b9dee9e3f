#pragma once

#include <memory>
#include <string>
#include <vector>

#include "creg/monomial.hpp"
#include "creg/scalar.hpp"

namespace creg {

/// Graded polynomial ring S = K[x_0,...,x_{nvars-1}].
struct Ring {
  int nvars;
  FieldSpec field;
  std::vector<std::string> names;

  bool operator==(const Ring& o) const { return nvars == o.nvars && field == o.field && names == o.names; }
};

using RingPtr = std::shared_ptr<const Ring>;

/// Ring for P^n: nvars = n+1, variables named x0..xn.
RingPtr make_ring(int nvars, FieldSpec field = FieldSpec::prime());

/// Same variables plus a trailing elimination variable "t".
RingPtr extend_ring(const RingPtr& r);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace creg
