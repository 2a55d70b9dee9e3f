#pragma once

#include <optional>

#include "creg/resolution.hpp"

namespace creg {

/// Principal-diagonal degree data of a Hilbert-Burch resolution
/// 0 -> sum S(-b_i) -> sum S(-a_i) -> S of S/I for a codimension-2 ACM
/// subscheme of P^2 (finite scheme, or plane curve union finite scheme with
/// d_curve > 0). `violations` lists the identities that fail; empty means
/// everything checked out.
struct DiagonalDegrees {
  std::vector<int> a;  // descending, t+1 values
  std::vector<int> b;  // descending, t values
  std::vector<int> e;  // e_i = b_i - a_i
  std::vector<int> f;  // from a_i = sum_{j<i} e_j + sum_{j>=i} f_j (+ d_curve)
  int d_curve = 0;
  long long ef_sum = 0;  // sum_{i<=j} e_i f_j
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Reads the diagonal degrees off a Betti table of S/I in P^2 and verifies
/// the identities. Throws on a non-Hilbert-Burch shape.
DiagonalDegrees hilbert_burch_degrees(const BettiTable& B, int d_curve);

/// For finite X in P^2 with reg = deg(X) (collinear) or reg = deg(X)-1,
/// deg != 4 — or for a plane-curve-union-finite scheme in the equality case
/// of the regularity bound — extracts a line meeting the scheme in degree
/// reg. Returns nothing when the hypotheses fail.
std::optional<Polynomial> find_extremal_line_planar(const Ideal& I);

/// All F_p-rational points of a finite scheme in P^2 (prime field only).
std::vector<std::vector<Scalar>> rational_points_plane(const Ideal& I);

}  // namespace creg
