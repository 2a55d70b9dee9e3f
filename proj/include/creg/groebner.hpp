#pragma once

#include <optional>

#include "creg/polynomial.hpp"

namespace creg {

/// Unique reduced Groebner basis for (ideal, order): monic elements, no term
/// divisible by another element's leading monomial, sorted ascending by
/// leading monomial. An empty basis marks the zero ideal.
struct ReducedGB {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> basis;

  bool is_zero_ideal() const { return basis.empty(); }
  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].degree() == 0; }
};

/// Remainder of f under full division by G: no term of the result is
/// divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
Polynomial normal_form(const Polynomial& f, const ReducedGB& G);

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // f = sum quotients[i]*G[i] + remainder
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& G);

/// Exact quotient f/g; nullopt if g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Buchberger with the normal pair-selection strategy and Gebauer-Moeller
/// pruning; returns the reduced basis. Empty input yields the zero-ideal
/// marker rather than an error.
ReducedGB buchberger(std::vector<Polynomial> gens, const MonomialOrder& order, RingPtr ring = nullptr);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace creg
