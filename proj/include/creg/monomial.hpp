#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace creg {

/// Hard cap on ring variables (ambient P^10 plus one elimination variable).
inline constexpr int kMaxVars = 12;

/// Exponent vector with cached total degree. The variable count lives in the
/// ring; monomials from different rings compare only through ring-aware code.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int i, int e = 1) {
    Monomial m;
    m.e_[i] = static_cast<std::uint8_t>(e);
    m.deg_ = e;
    return m;
  }
  static Monomial from_exponents(const std::vector<int>& es);

  int deg() const { return deg_; }
  int operator[](int i) const { return e_[i]; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Arbitrary total order for container keys (not a monomial order).
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  int deg_ = 0;
};

struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };
  Kind kind = Kind::Grevlex;
  /// Number of leading entries of `perm` forming the eliminated block
  /// (Block orders only; grevlex within each block).
  int block_size = 0;
  int nvars = 0;
  /// perm[0] is the greatest variable. Empty perm means identity.
  std::vector<int> perm;

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder lex(int nvars);
  /// Block-elimination order: `block` variables first, grevlex on both blocks.
  static MonomialOrder elim(int nvars, const std::vector<int>& block);

  bool operator==(const MonomialOrder&) const = default;
  std::string key() const;
};

std::strong_ordering mono_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b);

}  // namespace creg
