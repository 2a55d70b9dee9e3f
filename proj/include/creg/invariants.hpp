#pragma once

#include <utility>

#include "creg/ideal.hpp"

namespace creg {

/// Hilbert series data of S/I: numerator Q with HS = Q(t)/(1-t)^nvars,
/// reduced form P(t)/(1-t)^d with P(1) != 0, and the Hilbert polynomial.
struct HilbertData {
  std::vector<long long> numerator;           // Q(t), index = power of t
  std::vector<long long> reduced;             // P(t)
  int krull_dim = 0;                          // d: affine dimension of the cone S/I
  long long degree = 0;                       // P(1)
  std::vector<mpq_class> hilbert_polynomial;  // coefficients in the degree variable

  int projective_dim() const { return krull_dim - 1; }
};

/// Numerator from the lead-term monomial ideal by the standard pivot
/// splitting recursion; order-independent (grevlex used).
const HilbertData& hilbert_series(const Ideal& I);

/// dim_K (S/I)_d.
long long hilbert_function(const Ideal& I, int d);

std::vector<mpq_class> hilbert_polynomial(const Ideal& I);
mpq_class eval_poly(const std::vector<mpq_class>& coeffs, long long at);

/// (projective dimension of V(I), degree). Unit ideal -> (-1, 0), the empty
/// scheme. Precondition elsewhere per operation.
std::pair<int, long long> dim_deg(const Ideal& I);

/// Smallest d >= 0 with I_e = I^sat_e for all e >= d; 0 for saturated ideals
/// (clamping convention, recorded in the design notes). The scan bound comes
/// from the resolution-backed regularity.
int saturation_degree(const Ideal& I);

/// Standalone numerator for a list of monomial generators (exposed for the
/// brute-force oracles in the tests).
std::vector<long long> hilbert_numerator_of_monomials(std::vector<Monomial> gens, int nvars);

/// Reduction and Hilbert polynomial from a given numerator Q(t) with
/// HS = Q/(1-t)^nvars. Also used to turn Betti tables into Hilbert data.
HilbertData hilbert_from_numerator(std::vector<long long> numerator, int nvars);

}  // namespace creg
