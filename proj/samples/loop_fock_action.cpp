// Builds a few states of the fermionic Fock module for the loop algebra of
// gl_2 and checks the commutator [f_x, f_y] against f_[x,y] + rho c(x,y).

#include <iostream>

#include "fockrep/cocycle.hpp"
#include "fockrep/instances.hpp"
#include "fockrep/io.hpp"
#include "fockrep/parse.hpp"

int main() {
  using namespace fockrep;
  const Realization R = build(AlgebraKind::loop, 2, Statistics::fermi);

  const LieElement x = parse_element(R, "E[1,2]*t^-1");
  const LieElement y = parse_element(R, "E[2,1]*t^1");

  FockVector v = fx_vacuum(x, R);
  std::cout << "f_x v0        = " << to_json(v, R).dump() << '\n';
  std::cout << "f_y f_x v0    = " << to_json(apply_fx(y, v, R), R).dump() << '\n';

  const Scalar c = cocycle(x, y, R);
  std::cout << "c(x, y)       = " << c << '\n';

  const FockVector lhs = apply_fx(x, apply_fx(y, v, R), R) - apply_fx(y, apply_fx(x, v, R), R);
  const FockVector rhs = apply_fx(bracket(x, y, R), v, R) + Scalar(R.rho()) * c * v;
  std::cout << "module law on f_x v0: " << (lhs == rhs ? "holds" : "FAILS") << '\n';
  return lhs == rhs ? 0 : 1;
}
