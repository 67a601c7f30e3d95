#pragma once

// The 2-cocycle of the central extension, two ways:
//  * cocycle():        sum_{a in J, g notin J} x_a^g y_g^a - sum_{a notin J, g in J} x_a^g y_g^a,
//                      each sum driven by the (finite) up-crossings of one factor;
//  * cocycle_oracle(): rho * kappa([f_x, f_y] v0 - f_[x,y] v0) on Fock space.
// The two share no intermediate results.

#include <functional>
#include <span>
#include <stdexcept>
#include <utility>

#include "fockrep/algebra.hpp"
#include "fockrep/fock.hpp"

namespace fockrep {

struct CocycleSums {
  Scalar into_complement;  // alpha in J, gamma outside: up-crossings of y
  Scalar into_cut;         // alpha outside, gamma in J: up-crossings of x
};

inline CocycleSums cocycle_sums(const LieElement& x, const LieElement& y, const Realization& R) {
  CocycleSums s;
  for (const auto& cr : up_crossings(y, R)) s.into_complement += cr.coeff * act(x, cr.target, R).coeff(cr.source);
  for (const auto& cr : up_crossings(x, R)) s.into_cut += cr.coeff * act(y, cr.target, R).coeff(cr.source);
  return s;
}

inline Scalar cocycle(const LieElement& x, const LieElement& y, const Realization& R) {
  auto s = cocycle_sums(x, y, R);
  return s.into_complement - s.into_cut;
}

inline Scalar cocycle(const BasisSymbol& x, const BasisSymbol& y, const Realization& R) {
  return cocycle(element(x), element(y), R);
}

/// rho * kappa(f_x f_y v0 - f_y f_x v0 - f_[x,y] v0)
inline Scalar cocycle_oracle(const LieElement& x, const LieElement& y, const Realization& R) {
  FockVector v = apply_fx(x, fx_vacuum(y, R), R);
  v -= apply_fx(y, fx_vacuum(x, R), R);
  v -= apply_fx(bracket(x, y, R), vacuum(), R);
  return Scalar(R.rho()) * kappa(v);
}

inline Scalar cocycle_oracle(const BasisSymbol& x, const BasisSymbol& y, const Realization& R) {
  return cocycle_oracle(element(x), element(y), R);
}

using CocycleFn = std::function<Scalar(const LieElement&, const LieElement&, const Realization&)>;

/// c(x,y) = -c(y,x) and c(x,[y,z]) + c(y,[z,x]) + c(z,[x,y]) = 0, exactly.
inline bool check_cocycle_identities(const LieElement& x, const LieElement& y, const LieElement& z,
                                     const Realization& R, const CocycleFn& c = nullptr) {
  auto cf = c ? c : CocycleFn([](const LieElement& a, const LieElement& b, const Realization& r) {
    return cocycle(a, b, r);
  });
  if (cf(x, y, R) != -cf(y, x, R)) return false;
  if (cf(y, z, R) != -cf(z, y, R)) return false;
  if (cf(z, x, R) != -cf(x, z, R)) return false;
  Scalar jac = cf(x, bracket(y, z, R), R) + cf(y, bracket(z, x, R), R) + cf(z, bracket(x, y, R), R);
  return jac.is_zero();
}

/// [f_x, f_y] - f_[x,y] acts on every sample as the scalar rho * c(x,y).
inline bool centrality_check(const LieElement& x, const LieElement& y, std::span<const FockVector> samples,
                             const Realization& R) {
  const Scalar central = Scalar(R.rho()) * cocycle(x, y, R);
  const LieElement xy = bracket(x, y, R);
  for (const auto& v : samples) {
    FockVector lhs = apply_fx(x, apply_fx(y, v, R), R) - apply_fx(y, apply_fx(x, v, R), R) - apply_fx(xy, v, R);
    if (!(lhs == central * v)) return false;
  }
  return true;
}

/// Closed formulas for the default cut n >= 0:
///   witt:  c(L_m, L_n) = delta_{m,-n} (m - m^3)/6
///   loop:  c(E_ij t^m, E_kl t^n) = m delta_{m+n,0} tr(E_ij E_kl)
///   weyl:  c(E_ij(k,l), E_mn(r,s)) = tr(E_ij E_mn) delta_{k+r,l+s} (-1)^(s+1) l! s! binom(r, l+s+1)
inline Scalar closed_form(const BasisSymbol& x, const BasisSymbol& y) {
  if (x.kind != y.kind) throw std::invalid_argument("closed_form: symbols from different algebras");
  switch (x.kind) {
    case AlgebraKind::witt: {
      if (x.a + y.a != 0) return Scalar(0);
      const Integer m = Integer(x.a);
      return Scalar(Integer(m - m * m * m), Integer(6));
    }
    case AlgebraKind::loop: {
      const bool trace = x.j == y.i && x.i == y.j;
      if (!trace || x.a + y.a != 0) return Scalar(0);
      return Scalar(x.a);
    }
    case AlgebraKind::weyl: {
      const bool trace = x.j == y.i && x.i == y.j;
      const std::int64_t k = x.a, l = x.b, r = y.a, s = y.b;
      if (!trace || k + r != l + s) return Scalar(0);
      return Scalar(Integer(sign_power(s + 1) * factorial(l) * factorial(s))) * binomial(Integer(r), l + s + 1);
    }
    default: break;
  }
  throw std::invalid_argument("closed_form: no closed formula for algebra '" + to_string(x.kind) + "'");
}

inline Scalar closed_form(const LieElement& x, const LieElement& y) {
  Scalar out;
  for (const auto& [sx, cx] : x)
    for (const auto& [sy, cy] : y) out += cx * cy * closed_form(sx, sy);
  return out;
}

}  // namespace fockrep
