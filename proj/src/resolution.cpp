#include "creg/resolution.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "creg/freemodule.hpp"
#include "creg/invariants.hpp"

namespace creg {

int BettiTable::max_homological_index() const {
  int m = 0;
  for (const auto& [ij, v] : entries)
    if (v != 0) m = std::max(m, ij.first);
  return m;
}

int BettiTable::regularity() const {
  int r = 0;
  bool any = false;
  for (const auto& [ij, v] : entries)
    if (v != 0) {
      r = any ? std::max(r, ij.second - ij.first) : ij.second - ij.first;
      any = true;
    }
  if (!any) throw std::domain_error("regularity of an empty Betti table");
  return r;
}

namespace {

struct WorkComplex {
  std::vector<std::vector<int>> shifts;                       // per module 0..L
  std::vector<std::vector<char>> alive;                       // per module
  std::vector<std::vector<std::map<int, Polynomial>>> cols;   // maps[k]: F_{k+1} -> F_k
};

bool is_unit_entry(const Polynomial& p) { return !p.is_zero() && p.degree() == 0; }

void cancel(WorkComplex& w, int k, int r, int c) {
  auto& mat = w.cols[k];
  Scalar u = mat[c].at(r).lead_coef();
  Scalar uinv = u.inv();
  // clear row r from the other columns using column c
  for (size_t c2 = 0; c2 < mat.size(); ++c2) {
    if (static_cast<int>(c2) == c || !w.alive[k + 1][c2]) continue;
    auto it = mat[c2].find(r);
    if (it == mat[c2].end()) continue;
    Polynomial lambda = it->second.scaled(uinv);
    for (const auto& [row, p] : mat[c]) {
      if (row == r) continue;
      auto jt = mat[c2].find(row);
      if (jt == mat[c2].end()) {
        Polynomial q = -(lambda * p);
        if (!q.is_zero()) mat[c2].emplace(row, std::move(q));
      } else {
        jt->second = jt->second - lambda * p;
        if (jt->second.is_zero()) mat[c2].erase(jt);
      }
    }
    mat[c2].erase(r);
  }
  // delete column c (module k+1 element) and row r (module k element)
  mat[c].clear();
  w.alive[k + 1][c] = 0;
  w.alive[k][r] = 0;
  if (k + 1 < static_cast<int>(w.cols.size()))
    for (auto& col : w.cols[k + 1]) col.erase(c);
  if (k >= 1) w.cols[k - 1][r].clear();
}

void minimalize(WorkComplex& w) {
  for (int k = static_cast<int>(w.cols.size()) - 1; k >= 0; --k) {
    std::deque<int> pending;  // candidate columns to scan
    for (size_t c = 0; c < w.cols[k].size(); ++c) pending.push_back(static_cast<int>(c));
    while (!pending.empty()) {
      int c = pending.front();
      pending.pop_front();
      if (!w.alive[k + 1][c]) continue;
      int r = -1;
      for (const auto& [row, p] : w.cols[k][c])
        if (is_unit_entry(p)) {
          r = row;
          break;
        }
      if (r < 0) continue;
      // columns touched by the cancellation may acquire new unit entries
      for (size_t c2 = 0; c2 < w.cols[k].size(); ++c2)
        if (static_cast<int>(c2) != c && w.alive[k + 1][c2] && w.cols[k][c2].count(r))
          pending.push_back(static_cast<int>(c2));
      cancel(w, k, r, c);
    }
  }
}

}  // namespace

Resolution min_free_resolution(const Ideal& I, Resolution::Target target) {
  if (I.is_unit()) throw std::domain_error("free resolution of the unit ideal");
  if (!I.is_homogeneous()) throw std::domain_error("free resolution of an inhomogeneous ideal");
  auto cached = I.cached<Resolution>("resolution", [&]() -> std::shared_ptr<const Resolution> {
    auto res = std::make_shared<Resolution>();
    res->ring = I.ring();
    res->target = Resolution::Target::Quotient;
    res->shifts.push_back({0});  // F_0 = S
    if (I.is_zero()) return res;

    WorkComplex w;
    w.shifts.push_back({0});
    SchreyerLevel lv = first_level(I.groebner());
    int guard = I.ring()->nvars + 2;
    while (!lv.gens.empty()) {
      if (--guard < 0) throw std::logic_error("resolution exceeds the Hilbert syzygy bound");
      w.shifts.push_back(lv.degrees);
      std::vector<std::map<int, Polynomial>> mat(lv.gens.size());
      MonomialOrder base = MonomialOrder::grevlex(I.ring()->nvars);
      for (size_t c = 0; c < lv.gens.size(); ++c) {
        std::map<int, std::vector<Term>> rows;
        for (const auto& [t, coef] : lv.gens[c].terms) rows[t.comp].push_back({t.mono, coef});
        for (auto& [row, terms] : rows) mat[c].emplace(row, Polynomial(I.ring(), base, std::move(terms)));
      }
      w.cols.push_back(std::move(mat));
      lv = syzygy_level(lv);
    }
    for (const auto& s : w.shifts) w.alive.push_back(std::vector<char>(s.size(), 1));

    minimalize(w);

    // compact, sorting each module canonically by (shift, construction order)
    std::vector<std::vector<int>> newindex(w.shifts.size());
    res->shifts.clear();
    for (size_t k = 0; k < w.shifts.size(); ++k) {
      std::vector<int> order;
      for (size_t s = 0; s < w.shifts[k].size(); ++s)
        if (w.alive[k][s]) order.push_back(static_cast<int>(s));
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return w.shifts[k][a] < w.shifts[k][b]; });
      newindex[k].assign(w.shifts[k].size(), -1);
      std::vector<int> shifts;
      for (size_t pos = 0; pos < order.size(); ++pos) {
        newindex[k][order[pos]] = static_cast<int>(pos);
        shifts.push_back(w.shifts[k][order[pos]]);
      }
      if (shifts.empty() && k > 0) break;
      res->shifts.push_back(std::move(shifts));
    }
    for (size_t k = 0; k + 1 < res->shifts.size(); ++k) {
      std::vector<std::map<int, Polynomial>> mat(res->shifts[k + 1].size());
      for (size_t c = 0; c < w.cols[k].size(); ++c) {
        if (!w.alive[k + 1][c]) continue;
        auto& col = mat[newindex[k + 1][c]];
        for (const auto& [row, p] : w.cols[k][c]) col.emplace(newindex[k][row], p);
      }
      res->maps.push_back(std::move(mat));
    }
    return res;
  });

  if (target == Resolution::Target::Quotient) return *cached;
  if (I.is_zero()) throw std::domain_error("free resolution of the zero ideal as a module");
  Resolution r;
  r.ring = cached->ring;
  r.target = Resolution::Target::Ideal;
  r.shifts.assign(cached->shifts.begin() + 1, cached->shifts.end());
  if (cached->maps.size() > 1) r.maps.assign(cached->maps.begin() + 1, cached->maps.end());
  return r;
}

BettiTable betti_table(const Resolution& r) {
  BettiTable t;
  for (size_t k = 0; k < r.shifts.size(); ++k)
    for (int s : r.shifts[k]) t.entries[{static_cast<int>(k), s}] += 1;
  return t;
}

int regularity_of_quotient(const Ideal& I) {
  if (I.is_unit()) throw std::domain_error("regularity of the unit ideal");
  if (I.is_zero()) throw std::domain_error("regularity of the zero ideal");
  return betti_table(min_free_resolution(I)).regularity();
}

int regularity(const Ideal& I) { return regularity_of_quotient(I) + 1; }

int regularity_crosscheck(const Ideal& I) {
  int sd = saturation_degree(I);
  Ideal sat = saturate(I);
  if (sat.is_unit()) return sd;  // reg((1)) is undefined; the saturation degree decides
  return std::max(regularity(sat), sd);
}

void validate_resolution(const Resolution& r) {
  for (size_t k = 0; k < r.maps.size(); ++k) {
    if (r.maps[k].size() != r.shifts[k + 1].size()) throw std::logic_error("resolution shape mismatch");
    for (size_t c = 0; c < r.maps[k].size(); ++c) {
      if (r.maps[k][c].empty()) throw std::logic_error("zero column in a minimal resolution");
      for (const auto& [row, p] : r.maps[k][c]) {
        if (p.is_zero()) throw std::logic_error("stored zero entry");
        if (!p.is_homogeneous()) throw std::logic_error("inhomogeneous entry");
        if (p.degree() != r.shifts[k + 1][c] - r.shifts[k][row]) throw std::logic_error("graded degree mismatch");
        if (p.degree() == 0) throw std::logic_error("unit entry in a minimal resolution");
      }
    }
  }
  // consecutive maps compose to zero
  for (size_t k = 0; k + 1 < r.maps.size(); ++k) {
    for (size_t c = 0; c < r.maps[k + 1].size(); ++c) {
      std::map<int, Polynomial> acc;
      for (const auto& [mid, p] : r.maps[k + 1][c]) {
        for (const auto& [row, q] : r.maps[k][mid]) {
          Polynomial prod = q * p;
          auto it = acc.find(row);
          if (it == acc.end())
            acc.emplace(row, std::move(prod));
          else
            it->second = it->second + prod;
        }
      }
      for (const auto& [row, p] : acc)
        if (!p.is_zero()) throw std::logic_error("maps do not compose to zero");
    }
  }
}

std::string render_betti(const BettiTable& t) {
  if (t.entries.empty()) return "empty\n";
  int maxi = 0, minrow = 0, maxrow = 0;
  bool first = true;
  for (const auto& [ij, v] : t.entries) {
    if (v == 0) continue;
    int row = ij.second - ij.first;
    if (first) {
      minrow = maxrow = row;
      first = false;
    }
    maxi = std::max(maxi, ij.first);
    minrow = std::min(minrow, row);
    maxrow = std::max(maxrow, row);
  }
  std::vector<long long> totals(maxi + 1, 0);
  for (const auto& [ij, v] : t.entries)
    if (ij.first <= maxi) totals[ij.first] += v;

  auto cell = [&](long long v) { return v == 0 ? std::string(".") : std::to_string(v); };
  std::vector<int> width(maxi + 1, 1);
  for (int i = 0; i <= maxi; ++i) {
    width[i] = std::max(width[i], static_cast<int>(std::to_string(i).size()));
    width[i] = std::max(width[i], static_cast<int>(cell(totals[i]).size()));
    for (int row = minrow; row <= maxrow; ++row)
      width[i] = std::max(width[i], static_cast<int>(cell(t.get(i, row + i)).size()));
  }
  int label = static_cast<int>(std::string("total:").size());
  for (int row = minrow; row <= maxrow; ++row)
    label = std::max(label, static_cast<int>((std::to_string(row) + ":").size()));

  std::ostringstream out;
  auto pad = [&](const std::string& s, int wdt) {
    out << std::string(wdt - static_cast<int>(s.size()), ' ') << s;
  };
  pad("", label);
  for (int i = 0; i <= maxi; ++i) {
    out << "  ";
    pad(std::to_string(i), width[i]);
  }
  out << '\n';
  pad("total:", label);
  for (int i = 0; i <= maxi; ++i) {
    out << "  ";
    pad(cell(totals[i]), width[i]);
  }
  out << '\n';
  for (int row = minrow; row <= maxrow; ++row) {
    pad(std::to_string(row) + ":", label);
    for (int i = 0; i <= maxi; ++i) {
      out << "  ";
      pad(cell(t.get(i, row + i)), width[i]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace creg
