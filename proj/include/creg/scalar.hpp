#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace creg {

enum class FieldMode { Prime, Rational };

/// Coefficient field: F_p for a word-size prime p (default 32003), or exact
/// rationals with arbitrary-precision numerator/denominator.
struct FieldSpec {
  FieldMode mode = FieldMode::Prime;
  std::uint32_t p = 32003;

  static FieldSpec prime(std::uint32_t p = 32003);
  static FieldSpec rational() { return FieldSpec{FieldMode::Rational, 0}; }
  bool operator==(const FieldSpec&) const = default;
  std::string describe() const;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. No floating-point representation anywhere.
class Scalar {
 public:
  /// Null scalar: an exact zero not yet attached to a field. Arithmetic with a
  /// null operand adopts the other operand's field.
  Scalar() : rep_(Fp{0, 0}) {}

  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long v);
  static Scalar from_mpq(mpq_class q);

  bool is_zero() const;
  bool is_one() const;
  bool is_null() const;
  FieldSpec field() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Balanced lift for F_p (values above p/2 print negative); "a" or "a/b"
  /// for rationals.
  std::string str() const;

  /// F_p residue in [0,p); throws in rational mode.
  std::uint32_t residue() const;
  const mpq_class& rat() const;

 private:
  struct Fp {
    std::uint32_t v;
    std::uint32_t p;  // p == 0 marks the null scalar
    bool operator==(const Fp&) const = default;
  };
  explicit Scalar(Fp f) : rep_(f) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  std::variant<Fp, mpq_class> rep_;
};

}  // namespace creg
