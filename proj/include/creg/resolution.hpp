#pragma once

#include <map>

#include "creg/ideal.hpp"

namespace creg {

/// Graded Betti numbers beta_{i,j}.
struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;

  long long get(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  int max_homological_index() const;
  /// max{j - i : beta_{i,j} != 0}.
  int regularity() const;
};

/// Minimal graded free resolution. For target Quotient the modules run
/// F_0 = S, F_1, ...; for target Ideal the F_0 = S step is stripped so the
/// complex resolves I itself.
struct Resolution {
  enum class Target { Quotient, Ideal };

  RingPtr ring;
  Target target = Target::Quotient;
  /// shifts[k][s]: twist of the s-th summand S(-shift) of F_k.
  std::vector<std::vector<int>> shifts;
  /// maps[k]: F_{k+1} -> F_k, one sparse column (row -> entry) per summand
  /// of F_{k+1}.
  std::vector<std::vector<std::map<int, Polynomial>>> maps;

  int length() const { return static_cast<int>(maps.size()); }
};

/// Schreyer-order syzygy steps followed by minimalization (unit entries
/// cancelled greedily from the last matrix backwards) and canonical sorting.
Resolution min_free_resolution(const Ideal& I, Resolution::Target target = Resolution::Target::Quotient);

BettiTable betti_table(const Resolution& r);

/// reg(I) = max{j-i : beta_{i,j}(I) != 0}; errors on the zero and unit ideal.
int regularity(const Ideal& I);
/// reg(S/I) = reg(I) - 1 for proper nonzero I.
int regularity_of_quotient(const Ideal& I);
/// max(reg(I^sat), sat(I)); when I^sat is the unit ideal the first argument
/// is undefined and the saturation degree alone is returned.
int regularity_crosscheck(const Ideal& I);

/// Composition-is-zero, minimality and grading consistency; throws on
/// violation. The graded exactness oracle lives in the tests.
void validate_resolution(const Resolution& r);

/// Macaulay-style grid: rows j-i, columns i.
std::string render_betti(const BettiTable& t);

}  // namespace creg
