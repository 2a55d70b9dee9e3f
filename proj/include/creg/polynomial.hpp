#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "creg/ring.hpp"

namespace creg {

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Exact multivariate polynomial: terms strictly descending in the carried
/// monomial order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(RingPtr ring, MonomialOrder order) : ring_(std::move(ring)), order_(std::move(order)) {}
  Polynomial(RingPtr ring, MonomialOrder order, std::vector<Term> terms);

  static Polynomial zero(const RingPtr& r);
  static Polynomial zero(const RingPtr& r, const MonomialOrder& o);
  static Polynomial constant(const RingPtr& r, const Scalar& c);
  static Polynomial constant(const RingPtr& r, long long c);
  static Polynomial variable(const RingPtr& r, int i, int e = 1);
  static Polynomial monomial(const RingPtr& r, const Monomial& m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Term& leading() const;
  const Monomial& lead_mono() const { return leading().mono; }
  const Scalar& lead_coef() const { return leading().coef; }

  /// Total degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.deg(); }
  bool is_homogeneous() const;
  /// Degree of the (unique) homogeneous degree; throws if inhomogeneous.
  int homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Re-sorts the term list under a different order.
  Polynomial with_order(const MonomialOrder& o) const;

  Scalar eval(const std::vector<Scalar>& point) const;
  /// x_i -> images[i]; images live in an arbitrary target ring.
  Polynomial substitute(const RingPtr& target, const MonomialOrder& target_order,
                        const std::vector<Polynomial>& images) const;

  /// Canonical text: terms in descending order, `^` exponents, explicit `*`.
  std::string str() const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Embeds into the t-extended ring (same exponents, t absent).
Polynomial embed_extended(const Polynomial& f, const RingPtr& ext, const MonomialOrder& ord);
/// Drops the trailing t variable; every term must be t-free.
Polynomial restrict_from_extended(const Polynomial& f, const RingPtr& base, const MonomialOrder& ord);

/// Parses the canonical rendering (plus whitespace/parentheses); integer
/// coefficients, variables by ring name.
Polynomial parse_polynomial(const RingPtr& r, const std::string& text,
                            std::optional<MonomialOrder> order = std::nullopt);

}  // namespace creg
