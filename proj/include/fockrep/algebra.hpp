#pragma once

// Linear extensions of the instance data to arbitrary Lie elements.

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fockrep/realization.hpp"

namespace fockrep {

inline void validate(const LieElement& x, const Realization& R) {
  R.require_same_kind(x);
  for (const auto& [s, c] : x) R.model().validate(s);
}

inline LieElement bracket(const LieElement& x, const LieElement& y, const Realization& R) {
  R.require_same_kind(x);
  R.require_same_kind(y);
  LieElement out;
  for (const auto& [sx, cx] : x)
    for (const auto& [sy, cy] : y) out.add_scaled(R.model().bracket(sx, sy), cx * cy);
  return out;
}

/// x.w_alpha = sum_gamma x_gamma^alpha w_gamma
inline SparseVector act(const LieElement& x, const Index& alpha, const Realization& R) {
  R.require_same_kind(x);
  SparseVector out;
  for (const auto& [s, c] : x) out.add_scaled(R.model().act(s, alpha), c);
  return out;
}

/// x applied to an arbitrary module vector.
inline SparseVector act(const LieElement& x, const SparseVector& v, const Realization& R) {
  SparseVector out;
  for (const auto& [alpha, c] : v) out.add_scaled(act(x, alpha, R), c);
  return out;
}

/// x.w_beta^* = -sum_alpha x_beta^alpha w_alpha^*, returned as alpha -> -x_beta^alpha.
inline SparseVector dual_act(const LieElement& x, const Index& beta, const Realization& R) {
  R.require_same_kind(x);
  SparseVector out;
  for (const auto& [s, c] : x) out.add_scaled(R.model().row(s, beta), -c);
  return out;
}

/// All nonzero x_gamma^alpha with alpha in J and gamma outside J, sorted by (alpha, gamma).
inline std::vector<Crossing> up_crossings(const LieElement& x, const Realization& R) {
  R.require_same_kind(x);
  std::map<std::pair<Index, Index>, Scalar> acc;
  for (const auto& [s, c] : x)
    for (const auto& cr : R.model().up_crossings(s, R.config().j_cut)) {
      auto& slot = acc[{cr.source, cr.target}];
      slot += c * cr.coeff;
    }
  std::vector<Crossing> out;
  for (const auto& [key, c] : acc)
    if (!c.is_zero()) out.push_back({key.first, key.second, c});
  return out;
}

/// act([x, y], alpha) == x.(y.w_alpha) - y.(x.w_alpha) on every sample, with the
/// bracket supplied by the caller.
inline bool check_action_homomorphism(const LieElement& x, const LieElement& y, const LieElement& xy,
                                      std::span<const Index> samples, const Realization& R) {
  for (const auto& alpha : samples) {
    SparseVector lhs = act(xy, alpha, R);
    SparseVector rhs = act(x, act(y, alpha, R), R) - act(y, act(x, alpha, R), R);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

inline bool check_action_homomorphism(const LieElement& x, const LieElement& y, std::span<const Index> samples,
                                      const Realization& R) {
  return check_action_homomorphism(x, y, bracket(x, y, R), samples, R);
}

}  // namespace fockrep
