#include "creg/monomial.hpp"

#include <algorithm>

namespace creg {

Monomial Monomial::from_exponents(const std::vector<int>& es) {
  if (static_cast<int>(es.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  Monomial m;
  for (size_t i = 0; i < es.size(); ++i) {
    if (es[i] < 0 || es[i] > 255) throw std::invalid_argument("exponent out of range");
    m.e_[i] = static_cast<std::uint8_t>(es[i]);
    m.deg_ += es[i];
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] + o.e_[i]);
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e_[i] && o.e_[i]) return false;
  return true;
}

MonomialOrder MonomialOrder::grevlex(int nvars) { return MonomialOrder{Kind::Grevlex, 0, nvars, {}}; }

MonomialOrder MonomialOrder::lex(int nvars) { return MonomialOrder{Kind::Lex, 0, nvars, {}}; }

MonomialOrder MonomialOrder::elim(int nvars, const std::vector<int>& block) {
  MonomialOrder o;
  o.kind = Kind::Block;
  o.block_size = static_cast<int>(block.size());
  o.nvars = nvars;
  o.perm = block;
  std::vector<bool> in(nvars, false);
  for (int v : block) in[v] = true;
  for (int v = 0; v < nvars; ++v)
    if (!in[v]) o.perm.push_back(v);
  return o;
}

std::string MonomialOrder::key() const {
  std::string k;
  k += static_cast<char>('0' + static_cast<int>(kind));
  k += ':' + std::to_string(block_size) + ':';
  for (int v : perm) k += std::to_string(v) + ',';
  return k;
}

namespace {

// grevlex on the variable subsequence perm[lo..hi): higher degree first,
// ties broken by the last nonzero entry of a-b being negative.
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, const std::vector<int>& perm, int lo,
                                   int hi) {
  int da = 0, db = 0;
  if (perm.empty()) {
    for (int i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
  } else {
    for (int i = lo; i < hi; ++i) {
      da += a[perm[i]];
      db += b[perm[i]];
    }
  }
  if (da != db) return da <=> db;
  for (int i = hi - 1; i >= lo; --i) {
    int v = perm.empty() ? i : perm[i];
    int d = a[v] - b[v];
    if (d != 0) return (d < 0) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering mono_cmp(const MonomialOrder& ord, const Monomial& a, const Monomial& b) {
  switch (ord.kind) {
    case MonomialOrder::Kind::Grevlex:
      return grevlex_range(a, b, ord.perm, 0, ord.nvars);
    case MonomialOrder::Kind::Lex:
      for (int i = 0; i < ord.nvars; ++i) {
        int v = ord.perm.empty() ? i : ord.perm[i];
        if (a[v] != b[v]) return a[v] <=> b[v];
      }
      return std::strong_ordering::equal;
    case MonomialOrder::Kind::Block: {
      auto c = grevlex_range(a, b, ord.perm, 0, ord.block_size);
      if (c != std::strong_ordering::equal) return c;
      return grevlex_range(a, b, ord.perm, ord.block_size, ord.nvars);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace creg
