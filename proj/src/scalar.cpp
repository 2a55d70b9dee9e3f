#include "creg/scalar.hpp"

namespace creg {

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldMode::Prime, p};
}

std::string FieldSpec::describe() const {
  return mode == FieldMode::Prime ? "F_" + std::to_string(p) : "QQ";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
  if (f.mode == FieldMode::Rational) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(f.p);
  if (r < 0) r += f.p;
  return Scalar(Fp{static_cast<std::uint32_t>(r), f.p});
}

Scalar Scalar::from_mpq(mpq_class q) {
  q.canonicalize();
  return Scalar(std::move(q));
}

bool Scalar::is_zero() const {
  if (auto* f = std::get_if<Fp>(&rep_)) return f->v == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (auto* f = std::get_if<Fp>(&rep_)) return f->v == 1;
  return std::get<mpq_class>(rep_) == 1;
}

bool Scalar::is_null() const {
  auto* f = std::get_if<Fp>(&rep_);
  return f && f->p == 0;
}

FieldSpec Scalar::field() const {
  if (auto* f = std::get_if<Fp>(&rep_)) return FieldSpec{FieldMode::Prime, f->p};
  return FieldSpec::rational();
}

namespace {
[[noreturn]] void mismatch() { throw std::invalid_argument("scalar field mismatch"); }
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_null()) return o;
  if (o.is_null()) return *this;
  if (auto* a = std::get_if<Fp>(&rep_)) {
    auto* b = std::get_if<Fp>(&o.rep_);
    if (!b || a->p != b->p) mismatch();
    std::uint64_t s = static_cast<std::uint64_t>(a->v) + b->v;
    if (s >= a->p) s -= a->p;
    return Scalar(Fp{static_cast<std::uint32_t>(s), a->p});
  }
  auto* b = std::get_if<mpq_class>(&o.rep_);
  if (!b) mismatch();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) + *b));
}

Scalar Scalar::operator-() const {
  if (auto* a = std::get_if<Fp>(&rep_)) {
    if (a->p == 0 || a->v == 0) return *this;
    return Scalar(Fp{a->p - a->v, a->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_null()) return *this;
  if (o.is_null()) return o;
  if (auto* a = std::get_if<Fp>(&rep_)) {
    auto* b = std::get_if<Fp>(&o.rep_);
    if (!b || a->p != b->p) mismatch();
    std::uint64_t m = static_cast<std::uint64_t>(a->v) * b->v % a->p;
    return Scalar(Fp{static_cast<std::uint32_t>(m), a->p});
  }
  auto* b = std::get_if<mpq_class>(&o.rep_);
  if (!b) mismatch();
  return Scalar(mpq_class(std::get<mpq_class>(rep_) * *b));
}

Scalar Scalar::inv() const {
  if (auto* a = std::get_if<Fp>(&rep_)) {
    if (a->p == 0 || a->v == 0) throw std::domain_error("inverse of zero");
    // extended Euclid
    long long t = 0, newt = 1, r = a->p, newr = a->v;
    while (newr != 0) {
      long long q = r / newr;
      long long tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += a->p;
    return Scalar(Fp{static_cast<std::uint32_t>(t), a->p});
  }
  const auto& q = std::get<mpq_class>(rep_);
  if (q == 0) throw std::domain_error("inverse of zero");
  return Scalar(mpq_class(1 / q));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  if (is_null() || o.is_null()) return is_zero() && o.is_zero();
  if (auto* a = std::get_if<Fp>(&rep_)) {
    auto* b = std::get_if<Fp>(&o.rep_);
    return b && *a == *b;
  }
  auto* b = std::get_if<mpq_class>(&o.rep_);
  return b && std::get<mpq_class>(rep_) == *b;
}

std::string Scalar::str() const {
  if (auto* a = std::get_if<Fp>(&rep_)) {
    if (a->p == 0) return "0";
    long long v = a->v;
    if (v > a->p / 2) v -= a->p;
    return std::to_string(v);
  }
  return std::get<mpq_class>(rep_).get_str();
}

std::uint32_t Scalar::residue() const {
  if (auto* a = std::get_if<Fp>(&rep_)) return a->v;
  throw std::logic_error("residue() on rational scalar");
}

const mpq_class& Scalar::rat() const {
  if (auto* a = std::get_if<mpq_class>(&rep_)) return *a;
  throw std::logic_error("rat() on prime-field scalar");
}

}  // namespace creg
