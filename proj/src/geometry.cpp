#include "creg/geometry.hpp"

namespace creg {

namespace {

std::vector<Polynomial> rows_to_forms(const RingPtr& r, const DenseMat& m, size_t nrows) {
  std::vector<Polynomial> forms;
  for (size_t i = 0; i < nrows; ++i) {
    Polynomial f = Polynomial::zero(r);
    for (int j = 0; j < r->nvars; ++j)
      if (!m.at(static_cast<int>(i), j).is_zero())
        f = f + Polynomial::variable(r, j).scaled(m.at(static_cast<int>(i), j));
    if (!f.is_zero()) forms.push_back(f);
  }
  return forms;
}

}  // namespace

LinearSubspace LinearSubspace::from_forms(const RingPtr& r, const std::vector<Polynomial>& forms) {
  DenseMat m(static_cast<int>(forms.size()), r->nvars, r->field);
  for (size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].is_zero()) continue;
    if (forms[i].degree() != 1) throw std::invalid_argument("subspace forms must be linear");
    require_same_ring(r, forms[i].ring());
    for (const auto& t : forms[i].terms())
      for (int v = 0; v < r->nvars; ++v)
        if (t.mono[v]) m.at(static_cast<int>(i), v) = t.coef;
  }
  auto pivots = rref(m);
  LinearSubspace s;
  s.ring_ = r;
  s.forms_ = rows_to_forms(r, m, pivots.size());
  return s;
}

LinearSubspace LinearSubspace::whole(const RingPtr& r) {
  LinearSubspace s;
  s.ring_ = r;
  return s;
}

Ideal LinearSubspace::ideal() const { return Ideal(ring_, forms_); }

bool LinearSubspace::contains_point(const std::vector<Scalar>& pt) const {
  for (const auto& f : forms_)
    if (!f.eval(pt).is_zero()) return false;
  return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  // every form of *this vanishes on `other`: row space containment
  LinearSubspace join = subspace_meet(*this, other);
  return join == other;
}

bool LinearSubspace::operator==(const LinearSubspace& o) const {
  if (forms_.size() != o.forms_.size()) return false;
  for (size_t i = 0; i < forms_.size(); ++i)
    if (forms_[i] != o.forms_[i]) return false;
  return true;
}

LinearSubspace span_of(const Ideal& I) {
  Ideal sat = saturate(I);
  std::vector<Polynomial> linear;
  for (const auto& f : sat.groebner().basis)
    if (f.degree() == 1) linear.push_back(f);
  return LinearSubspace::from_forms(I.ring(), linear);
}

LinearSubspace subspace_meet(const LinearSubspace& a, const LinearSubspace& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> forms = a.forms();
  for (const auto& f : b.forms()) forms.push_back(f);
  return LinearSubspace::from_forms(a.ring(), forms);
}

LinearSubspace subspace_through(const RingPtr& r, const std::vector<std::vector<Scalar>>& points) {
  DenseMat m(static_cast<int>(points.size()), r->nvars, r->field);
  for (size_t i = 0; i < points.size(); ++i) {
    if (static_cast<int>(points[i].size()) != r->nvars) throw std::invalid_argument("point length mismatch");
    for (int j = 0; j < r->nvars; ++j) m.at(static_cast<int>(i), j) = points[i][j];
  }
  auto ker = kernel_basis(std::move(m));
  std::vector<Polynomial> forms;
  for (const auto& v : ker) {
    Polynomial f = Polynomial::zero(r);
    for (int j = 0; j < r->nvars; ++j)
      if (!v[j].is_zero()) f = f + Polynomial::variable(r, j).scaled(v[j]);
    forms.push_back(f);
  }
  return LinearSubspace::from_forms(r, forms);
}

LinearSubspace line_through(const RingPtr& r, const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
  LinearSubspace s = subspace_through(r, {p, q});
  if (s.dim() != 1) throw std::invalid_argument("points coincide: no unique line");
  return s;
}

XiValue xi_of_ideal(const Ideal& I) {
  auto [dim, deg] = dim_deg(I);
  if (dim != 1) throw std::invalid_argument("Xi is defined for curves (dimension 1)");
  XiValue x;
  x.degree = deg;
  x.span_dim = span_of(I).dim();
  x.xi = x.degree - x.span_dim + 2;
  return x;
}

}  // namespace creg
