#pragma once

#include "creg/groebner.hpp"

namespace creg {

/// Term of a free module S^k: component index plus ring monomial.
struct ModTerm {
  int comp;
  Monomial mono;
  bool operator==(const ModTerm&) const = default;
};

/// Schreyer data for one free-module basis element: the composed monomial
/// down to S^1 and the reversed component path used for tie-breaking.
struct SchreyerColumn {
  Monomial tau;
  std::vector<int> revpath;
};

/// Module monomial order induced by the previous level's lead terms
/// (Schreyer order): compare composed ring monomials, ties broken along
/// the component paths, deepest level first, smaller index greater.
struct SchreyerOrder {
  MonomialOrder base;
  std::vector<SchreyerColumn> cols;

  std::strong_ordering cmp(const ModTerm& a, const ModTerm& b) const;
};

/// Element of a free module, terms strictly descending in the level order.
struct ModPoly {
  std::vector<std::pair<ModTerm, Scalar>> terms;

  bool is_zero() const { return terms.empty(); }
  const ModTerm& lead() const { return terms.front().first; }
  const Scalar& lead_coef() const { return terms.front().second; }
};

ModPoly mod_sub_multiple(const ModPoly& f, const ModPoly& g, const Monomial& m, const Scalar& c,
                         const SchreyerOrder& ord);

/// One level of a Schreyer resolution: a Groebner basis of a submodule of
/// S^k with respect to `order`, plus grading data.
struct SchreyerLevel {
  SchreyerOrder order;          // order on this level's ambient module
  std::vector<ModPoly> gens;    // GB elements, construction order
  std::vector<int> degrees;     // homogeneous degree of each element
};

/// Level 1 from a reduced Groebner basis of an ideal (submodule of S^1).
SchreyerLevel first_level(const ReducedGB& gb);

/// Syzygies of `level` via S-pair reductions; the result is a Groebner basis
/// of the syzygy module with respect to the induced Schreyer order.
SchreyerLevel syzygy_level(const SchreyerLevel& level);

}  // namespace creg
