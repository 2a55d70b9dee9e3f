#pragma once

#include <optional>

#include "creg/geometry.hpp"
#include "creg/resolution.hpp"
#include "creg/sampling.hpp"

namespace creg {

enum class ComponentKind { Line, RationalNormalCurve, PlaneCurve, Other };

/// phi(s,t) = sum_j cols[j] * s^(d-j) * t^j, a degree-d map P^1 -> P^n.
struct Parametrization {
  std::vector<std::vector<Scalar>> cols;
  int degree() const { return static_cast<int>(cols.size()) - 1; }
  std::vector<Scalar> at(const Scalar& s, const Scalar& t) const;
};

struct CurveComponent {
  Ideal ideal;  // saturated; prime by construction unless tagged otherwise
  ComponentKind kind = ComponentKind::Other;
  long long degree = 0;
  LinearSubspace span;
  std::optional<Parametrization> param;
  std::string label;
  bool maybe_reducible = false;
};

/// Reduced one-dimensional scheme: saturated ideal, component metadata, and
/// the incidence graph (edge iff the pairwise intersection is nonempty).
class Curve {
 public:
  Curve() = default;
  static Curve single(CurveComponent comp);
  Curve(Ideal ideal, std::vector<CurveComponent> comps, bool tree_tag);

  const Ideal& ideal() const { return ideal_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  const std::vector<CurveComponent>& components() const { return comps_; }
  const std::vector<std::pair<int, int>>& incidence() const { return incidence_; }
  bool tree_tag() const { return tree_tag_; }

  long long degree() const;
  LinearSubspace span() const { return span_of(ideal_); }
  XiValue xi() const { return xi_of_ideal(ideal_); }

 private:
  Ideal ideal_;
  std::vector<CurveComponent> comps_;
  std::vector<std::pair<int, int>> incidence_;
  bool tree_tag_ = false;
};

Ideal linear_subspace_ideal(const RingPtr& r, const std::vector<Polynomial>& forms);
Ideal point_ideal(const RingPtr& r, const std::vector<Scalar>& p);

/// Line through two distinct points.
Curve linear_curve(const RingPtr& r, const std::vector<Scalar>& p, const std::vector<Scalar>& q);

/// Degree-d rational normal curve from the coefficient rows of a map
/// P^1 -> P^n (rows[i][j] multiplies s^(d-j) t^j in coordinate i). The ideal
/// is the 2x2-minor ideal in recovered coordinates plus the span's linear
/// forms; rows of rank < d+1 are rejected.
Curve rational_normal_curve(const RingPtr& r, int d, const std::vector<std::vector<Scalar>>& rows);

/// V(I_plane + (form)) for a plane curve; the form must be written in the
/// plane's free coordinates (the non-pivot variables of its echelon forms).
Curve plane_curve(const LinearSubspace& plane, const Polynomial& form);

/// Intersection of the part ideals; parts must have no common components.
Curve curve_union(const std::vector<Curve>& parts);

bool is_connected(const Curve& c);

XiValue xi(const Curve& c);

/// deg of saturate(I_C + I_Lambda); Lambda must contain no component of C
/// and the intersection must be finite (0 for an empty intersection).
long long secant_degree(const Curve& c, const LinearSubspace& lambda);

/// C cap Lambda finite and reg(C cap Lambda) = Xi(C); for lines the
/// regularity of the finite section is its degree. Never throws on an
/// infinite intersection: false with a diagnostic.
bool is_extremal_secant(const Curve& c, const LinearSubspace& lambda, std::string* diagnostic = nullptr);

struct LinearSectionReport {
  long long section_degree = 0;
  long long bound = 0;
  bool bound_holds = false;
  int hyperplane_sections_checked = 0;
  bool hyperplane_sections_nondegenerate = false;
  std::uint64_t seed = 0;
};

/// deg(C cap L) <= deg(C) - n + 1 + dim(L) for connected nondegenerate C,
/// plus the hyperplane-section nondegeneracy lemma on seeded samples.
LinearSectionReport check_linear_section_bound(const Curve& c, const LinearSubspace& lambda,
                                               std::uint64_t seed = 1, int hyperplane_samples = 3);

// ---- constructions ----

struct TreeStep {
  int degree;
  /// (nvars) x (degree+1) coefficient columns; column 0 is the gluing point.
  std::vector<std::vector<Scalar>> rows;
};
struct TreeSpec {
  std::vector<TreeStep> steps;
};

/// Linearly normal tree of rational curves: each step's span meets the
/// partial tree's span in exactly the gluing point, which is also the
/// scheme intersection. Violations are errors.
Curve tree(const RingPtr& r, const TreeSpec& spec);

/// Seeded tree spec generator (fresh coordinate directions per component).
TreeSpec random_tree_spec(const RingPtr& r, Rng& rng, int max_components);

struct GiaimoOptions {
  bool fermat_e = true;  // false: E = a union of m-3 lines through neither P nor Q
};

/// The section-3 construction in fixed coordinates:
/// L = {x3=x4=0}, M = {x0=x4=0}, N = {x1=x3=0}, K = V(x2,x3,x4), P = e1,
/// Q = e0, F = V(x0,x4,x2^2-x1*x3), G = V(x1,x3,x2^2-x0*x4),
/// E = V(x3,x4,x0^(m-3)+x1^(m-3)+x2^(m-3)); C = E u F u G u K.
/// All incidence side conditions are asserted at construction time.
struct GiaimoCurve {
  int m = 0;
  Curve curve;
  Curve E, F, G, K;
  LinearSubspace L, M, N;
  std::vector<Scalar> P, Q;
  LinearSubspace secant_line_through_P;  // V(x0,x3,x4), an (m-1)-secant
  LinearSubspace secant_line_avoiding;   // V(x0+2x1+5x2, x3, x4), an (m-2)-secant
};
GiaimoCurve giaimo_curve(int m, FieldSpec field = FieldSpec::prime(), GiaimoOptions opts = {});

/// The section-4 configuration: twisted cubic D in {x4=0}, extremal secant
/// L = line(e0,e3), non-secant M through A = [1:1:1:1:0] and B = [1:0:0:1:0],
/// and a conic C in the plane spanned by M and e4 meeting D at A and L at B.
struct TwistedConfig {
  Curve curve;  // C u D
  Curve conic, cubic;
  LinearSubspace L, M;
  std::vector<Scalar> A, B;
};
TwistedConfig twisted_config(FieldSpec field = FieldSpec::prime());

struct CurveBudget {
  int max_components = 4;
  int max_total_degree = 8;
  int max_ambient = 6;  // P^n
};

/// Deterministic for a seed: glues lines/conics/twisted cubics so the result
/// is connected and reduced, with span-intersection dimension <= 2 at each
/// gluing. Errors after bounded retries if the budget cannot be met.
Curve random_connected_curve(std::uint64_t seed, const CurveBudget& budget,
                             FieldSpec field = FieldSpec::prime());

}  // namespace creg
