#include "creg/curve.hpp"

#include <algorithm>

#include "creg/linalg.hpp"

namespace creg {

std::vector<Scalar> Parametrization::at(const Scalar& s, const Scalar& t) const {
  const int d = degree();
  std::vector<Scalar> pt(cols[0].size(), Scalar());
  for (int j = 0; j <= d; ++j) {
    Scalar w = Scalar::one(cols[0][0].field());
    for (int k = 0; k < d - j; ++k) w = w * s;
    for (int k = 0; k < j; ++k) w = w * t;
    for (size_t i = 0; i < pt.size(); ++i) pt[i] = pt[i] + w * cols[j][i];
  }
  return pt;
}

Curve Curve::single(CurveComponent comp) {
  Ideal id = comp.ideal;
  return Curve(id, {std::move(comp)}, false);
}

Curve::Curve(Ideal ideal, std::vector<CurveComponent> comps, bool tree_tag)
    : ideal_(std::move(ideal)), comps_(std::move(comps)), tree_tag_(tree_tag) {
  auto [dim, deg] = dim_deg(ideal_);
  (void)deg;
  if (dim != 1) throw std::invalid_argument("curve ideal is not one-dimensional");
  for (size_t i = 0; i < comps_.size(); ++i)
    for (size_t j = i + 1; j < comps_.size(); ++j) {
      Ideal meet = saturate(ideal_sum(comps_[i].ideal, comps_[j].ideal));
      if (!meet.is_unit()) incidence_.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
}

long long Curve::degree() const { return dim_deg(ideal_).second; }

Ideal linear_subspace_ideal(const RingPtr& r, const std::vector<Polynomial>& forms) {
  return LinearSubspace::from_forms(r, forms).ideal();
}

Ideal point_ideal(const RingPtr& r, const std::vector<Scalar>& p) {
  return subspace_through(r, {p}).ideal();
}

Curve linear_curve(const RingPtr& r, const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
  LinearSubspace line = line_through(r, p, q);  // throws on equal points
  CurveComponent comp;
  comp.ideal = line.ideal();
  comp.kind = ComponentKind::Line;
  comp.degree = 1;
  comp.span = line;
  comp.param = Parametrization{{p, q}};
  return Curve::single(std::move(comp));
}

namespace {

// X with M X = I, for M of full row rank.
std::optional<DenseMat> right_inverse(const DenseMat& m) {
  DenseMat aug(m.rows, m.cols + m.rows, m.field);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = Scalar::one(m.field);
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != m.rows) return std::nullopt;
  for (int c : pivots)
    if (c >= m.cols) return std::nullopt;
  DenseMat x(m.cols, m.rows, m.field);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) x.at(pivots[i], j) = aug.at(i, m.cols + j);
  return x;
}

}  // namespace

Curve rational_normal_curve(const RingPtr& r, int d, const std::vector<std::vector<Scalar>>& rows) {
  if (d < 1) throw std::invalid_argument("rational normal curve degree must be >= 1");
  if (static_cast<int>(rows.size()) != r->nvars) throw std::invalid_argument("row count != variable count");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != d + 1) throw std::invalid_argument("row length != degree + 1");

  // A^T: columns of the map as rows
  DenseMat At(d + 1, r->nvars, r->field);
  for (int i = 0; i < r->nvars; ++i)
    for (int j = 0; j <= d; ++j) At.at(j, i) = rows[i][j];
  // left kernel of A: forms vanishing on the image
  auto ker = kernel_basis(At);
  if (static_cast<int>(ker.size()) != r->nvars - (d + 1))
    throw std::invalid_argument("degenerate row data: image does not span a P^" + std::to_string(d));
  std::vector<Polynomial> gens;
  std::vector<Polynomial> span_forms;
  for (const auto& v : ker) {
    Polynomial f = Polynomial::zero(r);
    for (int i = 0; i < r->nvars; ++i)
      if (!v[i].is_zero()) f = f + Polynomial::variable(r, i).scaled(v[i]);
    span_forms.push_back(f);
    gens.push_back(f);
  }
  // recover standard coordinates y_j = (B x)_j with B A = I, then take the
  // 2x2 minors of [[y_0..y_{d-1}],[y_1..y_d]]
  auto Bo = right_inverse(At);
  if (!Bo) throw std::invalid_argument("degenerate row data");
  std::vector<Polynomial> y;
  for (int j = 0; j <= d; ++j) {
    Polynomial f = Polynomial::zero(r);
    for (int i = 0; i < r->nvars; ++i)
      if (!Bo->at(i, j).is_zero()) f = f + Polynomial::variable(r, i).scaled(Bo->at(i, j));
    y.push_back(f);
  }
  for (int i = 0; i + 1 <= d - 1; ++i)
    for (int j = i + 1; j <= d - 1; ++j) gens.push_back(y[i] * y[j + 1] - y[i + 1] * y[j]);

  CurveComponent comp;
  comp.ideal = Ideal(r, gens);
  comp.kind = d == 1 ? ComponentKind::Line : ComponentKind::RationalNormalCurve;
  comp.degree = d;
  comp.span = LinearSubspace::from_forms(r, span_forms);
  Parametrization par;
  for (int j = 0; j <= d; ++j) {
    std::vector<Scalar> col;
    for (int i = 0; i < r->nvars; ++i) col.push_back(rows[i][j]);
    par.cols.push_back(std::move(col));
  }
  comp.param = std::move(par);

  // the parametrization must satisfy every generator
  auto r2 = make_ring(2, r->field);
  MonomialOrder o2 = MonomialOrder::grevlex(2);
  std::vector<Polynomial> images;
  for (int i = 0; i < r->nvars; ++i) {
    Polynomial img = Polynomial::zero(r2, o2);
    for (int j = 0; j <= d; ++j) {
      std::vector<int> es{d - j, j};
      img = img + Polynomial::monomial(r2, Monomial::from_exponents(es), rows[i][j]).with_order(o2);
    }
    images.push_back(img);
  }
  for (const auto& g : gens)
    if (!g.substitute(r2, o2, images).is_zero())
      throw std::logic_error("rational normal curve ideal does not vanish on the parametrization");
  return Curve::single(std::move(comp));
}

Curve plane_curve(const LinearSubspace& plane, const Polynomial& form) {
  if (plane.dim() != 2) throw std::invalid_argument("plane_curve needs a 2-plane");
  if (form.is_zero()) throw std::invalid_argument("zero form");
  if (!form.is_homogeneous()) throw std::invalid_argument("inhomogeneous form");
  const RingPtr& r = plane.ring();
  require_same_ring(r, form.ring());
  // free coordinates: variables without a pivot in the echelon forms
  std::vector<bool> pivot(r->nvars, false);
  for (const auto& f : plane.forms()) {
    int lead = -1;
    for (int v = 0; v < r->nvars && lead < 0; ++v)
      for (const auto& t : f.terms())
        if (t.mono[v]) {
          lead = v;
          break;
        }
    pivot[lead] = true;
  }
  for (const auto& t : form.terms())
    for (int v = 0; v < r->nvars; ++v)
      if (t.mono[v] && pivot[v])
        throw std::invalid_argument("form must be written in the plane's free coordinates");

  std::vector<Polynomial> gens = plane.forms();
  gens.push_back(form);
  CurveComponent comp;
  comp.ideal = Ideal(r, gens);
  comp.degree = form.degree();
  comp.kind = form.degree() == 1 ? ComponentKind::Line : ComponentKind::PlaneCurve;
  comp.span = form.degree() == 1 ? subspace_meet(plane, LinearSubspace::from_forms(r, {form})) : plane;
  comp.maybe_reducible = form.degree() > 1;
  return Curve::single(std::move(comp));
}

Curve curve_union(const std::vector<Curve>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty union");
  const RingPtr& r = parts.front().ring();
  std::vector<CurveComponent> comps;
  for (const auto& p : parts) {
    require_same_ring(r, p.ring());
    for (const auto& c : p.components()) comps.push_back(c);
  }
  for (size_t i = 0; i < comps.size(); ++i)
    for (size_t j = i + 1; j < comps.size(); ++j)
      if (comps[i].ideal.contains(comps[j].ideal) || comps[j].ideal.contains(comps[i].ideal))
        throw std::invalid_argument("curves share a component");
  Ideal acc = comps.front().ideal;
  for (size_t i = 1; i < comps.size(); ++i) acc = ideal_intersect(acc, comps[i].ideal);
  return Curve(std::move(acc), std::move(comps), false);
}

bool is_connected(const Curve& c) {
  const size_t n = c.components().size();
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [i, j] : c.incidence()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

XiValue xi(const Curve& c) { return xi_of_ideal(c.ideal()); }

namespace {

bool component_inside(const CurveComponent& comp, const LinearSubspace& lambda) {
  for (const auto& f : lambda.forms())
    if (!comp.ideal.contains(f)) return false;
  return true;
}

}  // namespace

long long secant_degree(const Curve& c, const LinearSubspace& lambda) {
  require_same_ring(c.ring(), lambda.ring());
  for (const auto& comp : c.components())
    if (component_inside(comp, lambda))
      throw std::invalid_argument("subspace contains the component " +
                                  (comp.label.empty() ? std::string("<unnamed>") : comp.label));
  Ideal z = saturate(ideal_sum(c.ideal(), lambda.ideal()));
  auto [dim, deg] = dim_deg(z);
  if (dim > 0) throw std::invalid_argument("intersection with the subspace is not finite");
  return deg;
}

bool is_extremal_secant(const Curve& c, const LinearSubspace& lambda, std::string* diagnostic) {
  require_same_ring(c.ring(), lambda.ring());
  for (const auto& comp : c.components())
    if (component_inside(comp, lambda)) {
      if (diagnostic) *diagnostic = "subspace contains a component: intersection is not finite";
      return false;
    }
  Ideal z = saturate(ideal_sum(c.ideal(), lambda.ideal()));
  auto [dim, deg] = dim_deg(z);
  if (dim > 0) {
    if (diagnostic) *diagnostic = "intersection is not finite";
    return false;
  }
  if (dim < 0 || deg == 0) {
    if (diagnostic) *diagnostic = "empty intersection";
    return false;
  }
  long long xival = xi(c).xi;
  long long reg_section;
  if (lambda.dim() == 1) {
    reg_section = deg;  // a finite scheme on a line has regularity equal to its degree
  } else {
    reg_section = regularity(z);
  }
  if (diagnostic)
    *diagnostic = "reg(C cap L) = " + std::to_string(reg_section) + ", Xi = " + std::to_string(xival);
  return reg_section == xival;
}

LinearSectionReport check_linear_section_bound(const Curve& c, const LinearSubspace& lambda,
                                               std::uint64_t seed, int hyperplane_samples) {
  LinearSectionReport rep;
  rep.seed = seed;
  if (!is_connected(c)) throw std::invalid_argument("curve must be connected");
  LinearSubspace sp = c.span();
  int n = c.ring()->nvars - 1;
  if (sp.dim() != n) throw std::invalid_argument("curve is degenerate: re-embed in its span first");
  rep.section_degree = secant_degree(c, lambda);
  rep.bound = c.degree() - n + 1 + lambda.dim();
  rep.bound_holds = rep.section_degree <= rep.bound;

  Rng rng(seed);
  rep.hyperplane_sections_nondegenerate = true;
  int done = 0;
  int guard = 0;
  while (done < hyperplane_samples && guard++ < 100 * hyperplane_samples) {
    Polynomial h = Polynomial::zero(c.ring());
    for (int v = 0; v < c.ring()->nvars; ++v)
      h = h + Polynomial::variable(c.ring(), v).scaled(rng.scalar(c.ring()->field));
    if (h.is_zero() || h.degree() != 1) continue;
    bool contains_comp = false;
    for (const auto& comp : c.components())
      if (comp.ideal.contains(h)) contains_comp = true;
    if (contains_comp) continue;
    Ideal section = saturate(ideal_sum(c.ideal(), Ideal(c.ring(), {h})));
    // nondegeneracy in the hyperplane: the section's linear span is exactly V(h)
    LinearSubspace section_span = span_of(section);
    LinearSubspace hplane = LinearSubspace::from_forms(c.ring(), {h});
    if (!(section_span == hplane)) rep.hyperplane_sections_nondegenerate = false;
    ++done;
  }
  rep.hyperplane_sections_checked = done;
  return rep;
}

}  // namespace creg
