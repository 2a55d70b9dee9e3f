#include "creg/polynomial.hpp"

#include <algorithm>
#include <map>

namespace creg {

RingPtr make_ring(int nvars, FieldSpec field) {
  if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("variable count out of range");
  Ring r;
  r.nvars = nvars;
  r.field = field;
  for (int i = 0; i < nvars; ++i) r.names.push_back("x" + std::to_string(i));
  return std::make_shared<Ring>(std::move(r));
}

RingPtr extend_ring(const RingPtr& r) {
  if (r->nvars + 1 > kMaxVars) throw std::invalid_argument("variable count out of range");
  Ring e;
  e.nvars = r->nvars + 1;
  e.field = r->field;
  e.names = r->names;
  e.names.push_back("t");
  return std::make_shared<Ring>(std::move(e));
}

Polynomial::Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> terms)
    : ring_(std::move(ring)), order_(std::move(order)) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return mono_cmp(order_, a.mono, b.mono) == std::strong_ordering::greater; });
  for (auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = terms_.back().coef + t.coef;
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else {
      terms_.push_back(t);
    }
  }
}

Polynomial Polynomial::zero(const RingPtr& r) { return zero(r, MonomialOrder::grevlex(r->nvars)); }
Polynomial Polynomial::zero(const RingPtr& r, const MonomialOrder& o) { return Polynomial(r, o); }

Polynomial Polynomial::constant(const RingPtr& r, const Scalar& c) {
  Polynomial f(r, MonomialOrder::grevlex(r->nvars));
  if (!c.is_zero()) f.terms_.push_back({Monomial{}, c});
  return f;
}

Polynomial Polynomial::constant(const RingPtr& r, long long c) {
  return constant(r, Scalar::from_int(r->field, c));
}

Polynomial Polynomial::variable(const RingPtr& r, int i, int e) {
  if (i < 0 || i >= r->nvars) throw std::invalid_argument("variable index out of range");
  return monomial(r, Monomial::variable(i, e), Scalar::one(r->field));
}

Polynomial Polynomial::monomial(const RingPtr& r, const Monomial& m, const Scalar& c) {
  Polynomial f(r, MonomialOrder::grevlex(r->nvars));
  if (!c.is_zero()) f.terms_.push_back({m, c});
  return f;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return terms_.front();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.deg();
  for (const auto& t : terms_)
    if (t.mono.deg() != d) return false;
  return true;
}

int Polynomial::homogeneous_degree() const {
  if (!is_homogeneous()) throw std::domain_error("inhomogeneous polynomial");
  return degree();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  require_same_ring(ring_, o.ring_);
  if (!(order_ == o.order_)) throw std::invalid_argument("monomial order mismatch");
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = mono_cmp(order_, terms_[i].mono, o.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      r.terms_.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  Polynomial r(ring_, order_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = t.coef * c;
    if (!s.is_zero()) r.terms_.push_back({t.mono * m, s});
  }
  // multiplication by a monomial preserves the order of terms
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const { return times_term(Monomial{}, c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  require_same_ring(ring_, o.ring_);
  if (!(order_ == o.order_)) throw std::invalid_argument("monomial order mismatch");
  auto cmp = [this](const Monomial& a, const Monomial& b) {
    return mono_cmp(order_, a, b) == std::strong_ordering::greater;
  };
  std::map<Monomial, Scalar, decltype(cmp)> acc(cmp);
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      Monomial m = s.mono * t.mono;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, s.coef * t.coef);
      else
        it->second = it->second + s.coef * t.coef;
    }
  Polynomial r(ring_, order_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coef().inv());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
  return Polynomial(ring_, o, terms_);
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars) throw std::invalid_argument("point length mismatch");
  Scalar acc = Scalar::zero(ring_->field);
  for (const auto& t : terms_) {
    Scalar v = t.coef;
    for (int i = 0; i < ring_->nvars; ++i)
      for (int e = 0; e < t.mono[i]; ++e) v = v * point[i];
    acc = acc + v;
  }
  return acc;
}

Polynomial Polynomial::substitute(const RingPtr& target, const MonomialOrder& target_order,
                                  const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != ring_->nvars) throw std::invalid_argument("image count mismatch");
  Polynomial acc = Polynomial::zero(target, target_order);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.coef).with_order(target_order);
    for (int i = 0; i < ring_->nvars; ++i)
      for (int e = 0; e < t.mono[i]; ++e) v = v * images[i];
    acc = acc + v;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = t.coef.str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (k == 0)
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    std::string mono;
    for (int i = 0; i < ring_->nvars; ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->names[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c;
    } else {
      if (c != "1") out += c + '*';
      out += mono;
    }
  }
  return out;
}

Polynomial embed_extended(const Polynomial& f, const RingPtr& ext, const MonomialOrder& ord) {
  std::vector<Term> ts = f.terms();
  return Polynomial(ext, ord, std::move(ts));
}

Polynomial restrict_from_extended(const Polynomial& f, const RingPtr& base, const MonomialOrder& ord) {
  for (const auto& t : f.terms())
    if (t.mono[base->nvars] != 0) throw std::logic_error("term involves the elimination variable");
  std::vector<Term> ts = f.terms();
  return Polynomial(base, ord, std::move(ts));
}

}  // namespace creg
