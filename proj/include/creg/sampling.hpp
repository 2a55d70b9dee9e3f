#pragma once

#include <random>

#include "creg/polynomial.hpp"

namespace creg {

/// Seeded deterministic sampler. All randomized constructions and fuzz
/// suites draw through this so failures replay from the recorded seed.
/// (Engine output is consumed directly; std distributions are not portable.)
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next() { return eng(); }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  Scalar scalar(const FieldSpec& f) {
    if (f.mode == FieldMode::Prime) return Scalar::from_int(f, static_cast<long long>(below(f.p)));
    return Scalar::from_int(f, range(-9, 9));
  }
  Scalar nonzero_scalar(const FieldSpec& f) {
    for (;;) {
      Scalar s = scalar(f);
      if (!s.is_zero()) return s;
    }
  }
  std::vector<Scalar> point(const RingPtr& r) {
    for (;;) {
      std::vector<Scalar> p;
      bool nz = false;
      for (int i = 0; i < r->nvars; ++i) {
        p.push_back(scalar(r->field));
        nz = nz || !p.back().is_zero();
      }
      if (nz) return p;
    }
  }
};

}  // namespace creg
