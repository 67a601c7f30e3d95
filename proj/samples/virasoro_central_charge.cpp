// Prints c(L_m, L_-m) for the Witt algebra three ways: the finite crossing
// sums, the Fock-space commutator for both statistics, and (m - m^3)/6.

#include <iomanip>
#include <iostream>

#include "fockrep/cocycle.hpp"
#include "fockrep/instances.hpp"

int main() {
  using namespace fockrep;
  const Realization bose = build(AlgebraKind::witt, 1, Statistics::bose);
  const Realization fermi = build(AlgebraKind::witt, 1, Statistics::fermi);

  std::cout << std::setw(4) << "m" << std::setw(10) << "sums" << std::setw(10) << "bose" << std::setw(10) << "fermi"
            << std::setw(10) << "formula" << '\n';
  for (int m = 0; m <= 8; ++m) {
    const auto x = BasisSymbol::witt(m), y = BasisSymbol::witt(-m);
    std::cout << std::setw(4) << m << std::setw(10) << cocycle(x, y, bose) << std::setw(10) << cocycle_oracle(x, y, bose)
              << std::setw(10) << cocycle_oracle(x, y, fermi) << std::setw(10) << closed_form(x, y) << '\n';
  }
}
