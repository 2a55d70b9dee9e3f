#include <cassert>
#include <iostream>
#include "creg/ideal.hpp"

using namespace creg;

int main() {
  auto R = make_ring(4);
  auto f = parse_polynomial(R, "x1^2-x0*x2");
  auto g = parse_polynomial(R, "x1*x2-x0*x3");
  auto h = parse_polynomial(R, "x2^2-x1*x3");
  Ideal tc(R, {f, g, h});
  const auto& gb = tc.groebner();
  for (const auto& b : gb.basis) std::cout << b.str() << "\n";
  assert(gb.basis.size() == 3);
  assert(ideal_member(parse_polynomial(R, "x0*x3-x1*x2"), tc));
  Ideal a(R, {parse_polynomial(R, "x0")});
  Ideal b(R, {parse_polynomial(R, "x1")});
  Ideal c = ideal_intersect(a, b);
  std::cout << "intersect: " << c.groebner().basis[0].str() << "\n";
  assert(c.groebner().basis.size() == 1 && c.groebner().basis[0].str() == "x0*x1");
  std::cout << "smoke ok\n";
  return 0;
}
