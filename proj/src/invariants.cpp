#include "creg/invariants.hpp"

#include <algorithm>

#include "creg/resolution.hpp"

namespace creg {

namespace {

using Poly1 = std::vector<long long>;  // integer polynomial in t

Poly1 mul1(const Poly1& a, const Poly1& b) {
  if (a.empty() || b.empty()) return {};
  Poly1 r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly1 add1(Poly1 a, const Poly1& b, long long shift = 0, long long scale = 1) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t j = 0; j < b.size(); ++j) a[j + shift] += scale * b[j];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

void interreduce_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& x, const Monomial& y) { return x.deg() < y.deg(); });
  std::vector<Monomial> kept;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  gens = std::move(kept);
}

Poly1 numerator_rec(std::vector<Monomial> gens, int nvars) {
  interreduce_monomials(gens);
  if (gens.empty()) return {1};
  if (gens.front().deg() == 0) return {};
  // pure powers of distinct variables: product formula
  bool pure = true;
  for (const auto& m : gens) {
    int support = 0;
    for (int v = 0; v < nvars; ++v)
      if (m[v]) ++support;
    if (support > 1) {
      pure = false;
      break;
    }
  }
  if (pure) {
    Poly1 q{1};
    for (const auto& m : gens) {
      Poly1 f(m.deg() + 1, 0);
      f[0] = 1;
      f[m.deg()] = -1;
      q = mul1(q, f);
    }
    return q;
  }
  // pivot: a variable of some mixed generator (so both branches shrink),
  // the most frequent one, with the smallest positive exponent among users
  std::vector<int> freq(nvars, 0);
  std::vector<char> in_mixed(nvars, 0);
  for (const auto& m : gens) {
    int support = 0;
    for (int v = 0; v < nvars; ++v)
      if (m[v]) {
        ++freq[v];
        ++support;
      }
    if (support >= 2)
      for (int v = 0; v < nvars; ++v)
        if (m[v]) in_mixed[v] = 1;
  }
  int pv = -1;
  for (int v = 0; v < nvars; ++v)
    if (in_mixed[v] && (pv < 0 || freq[v] > freq[pv])) pv = v;
  if (pv < 0) throw std::logic_error("pivot selection failed");
  int pe = 255;
  for (const auto& m : gens)
    if (m[pv]) pe = std::min(pe, static_cast<int>(m[pv]));
  Monomial pivot = Monomial::variable(pv, pe);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    std::vector<int> es(nvars);
    for (int v = 0; v < nvars; ++v) es[v] = m[v];
    es[pv] = std::max(0, es[pv] - pe);
    colon.push_back(Monomial::from_exponents(es));
  }
  Poly1 a = numerator_rec(std::move(plus), nvars);
  Poly1 b = numerator_rec(std::move(colon), nvars);
  return add1(a, b, pe, 1);
}

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<long long> hilbert_numerator_of_monomials(std::vector<Monomial> gens, int nvars) {
  return numerator_rec(std::move(gens), nvars);
}

HilbertData hilbert_from_numerator(std::vector<long long> numerator, int nvars) {
  HilbertData h;
  h.numerator = std::move(numerator);
  h.reduced = h.numerator;
  h.krull_dim = nvars;
  // divide out (1-t) while P(1) == 0
  for (;;) {
    if (h.reduced.empty()) {
      h.krull_dim = 0;
      break;
    }
    long long at1 = 0;
    for (long long c : h.reduced) at1 += c;
    if (at1 != 0 || h.krull_dim == 0) break;
    // synthetic division: P(t) = (1-t) * Q(t)
    Poly1 q(h.reduced.size() - 1, 0);
    long long carry = 0;
    for (size_t i = 0; i + 1 < h.reduced.size(); ++i) {
      q[i] = h.reduced[i] + carry;
      carry = q[i];
    }
    h.reduced = q;
    while (!h.reduced.empty() && h.reduced.back() == 0) h.reduced.pop_back();
    --h.krull_dim;
  }
  h.degree = 0;
  for (long long c : h.reduced) h.degree += c;
  // Hilbert polynomial from P/(1-t)^d: HP(m) = sum_k P_k * C(m-k+d-1, d-1)
  int d = h.krull_dim;
  if (d > 0) {
    std::vector<mpq_class> hp(d, mpq_class(0));
    for (size_t k = 0; k < h.reduced.size(); ++k) {
      // C(m-k+d-1, d-1) as a polynomial in m: prod_{i=1..d-1} (m-k+i) / (d-1)!
      std::vector<mpq_class> term{mpq_class(1)};
      for (int i = 1; i <= d - 1; ++i) {
        std::vector<mpq_class> next(term.size() + 1, mpq_class(0));
        long c0 = -static_cast<long>(k) + i;
        for (size_t j = 0; j < term.size(); ++j) {
          next[j] += term[j] * c0;
          next[j + 1] += term[j];
        }
        term = next;
      }
      mpq_class fact(1);
      for (int i = 2; i <= d - 1; ++i) fact *= i;
      for (size_t j = 0; j < term.size(); ++j) {
        mpq_class add = mpq_class(static_cast<long>(h.reduced[k])) * term[j] / fact;
        if (j >= hp.size()) hp.resize(j + 1, mpq_class(0));
        hp[j] += add;
      }
    }
    while (!hp.empty() && hp.back() == 0) hp.pop_back();
    h.hilbert_polynomial = hp;
  }
  return h;
}

const HilbertData& hilbert_series(const Ideal& I) {
  auto data = I.cached<HilbertData>("hilbert", [&]() -> std::shared_ptr<const HilbertData> {
    if (I.is_unit()) throw std::domain_error("hilbert_series of the unit ideal");
    if (!I.is_homogeneous()) throw std::domain_error("hilbert_series of an inhomogeneous ideal");
    int n = I.ring()->nvars;
    std::vector<Monomial> leads;
    for (const auto& f : I.groebner().basis) leads.push_back(f.lead_mono());
    return std::make_shared<HilbertData>(hilbert_from_numerator(numerator_rec(std::move(leads), n), n));
  });
  return *data;
}

long long hilbert_function(const Ideal& I, int d) {
  if (d < 0) return 0;
  if (I.is_unit()) return 0;
  const auto& h = hilbert_series(I);
  int n = I.ring()->nvars;
  long long acc = 0;
  for (size_t k = 0; k < h.numerator.size() && static_cast<int>(k) <= d; ++k)
    acc += h.numerator[k] * binom(d - static_cast<long long>(k) + n - 1, n - 1);
  return acc;
}

std::vector<mpq_class> hilbert_polynomial(const Ideal& I) {
  if (I.is_unit()) throw std::domain_error("hilbert_polynomial of the unit ideal");
  return hilbert_series(I).hilbert_polynomial;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, long long at) {
  mpq_class acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * static_cast<long>(at) + coeffs[i];
  return acc;
}

std::pair<int, long long> dim_deg(const Ideal& I) {
  if (I.is_unit()) return {-1, 0};
  const auto& h = hilbert_series(I);
  return {h.projective_dim(), h.degree};
}

int saturation_degree(const Ideal& I) {
  if (I.is_unit()) return 0;
  Ideal sat = saturate(I);
  if (sat.equals(I)) return 0;
  int bound = regularity(I);  // sat(I) <= reg(I)
  int last_diff = -1;
  for (int e = 0; e <= bound; ++e)
    if (hilbert_function(I, e) != hilbert_function(sat, e)) last_diff = e;
  return last_diff + 1;
}

}  // namespace creg
