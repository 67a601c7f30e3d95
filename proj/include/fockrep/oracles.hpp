#pragma once

// Brute-force reference computations used by the verification suites. These
// go through generic rewriting and window scans rather than the closed forms.

#include <set>
#include <span>
#include <vector>

#include "fockrep/algebra.hpp"
#include "fockrep/fock.hpp"
#include "fockrep/weyl.hpp"

namespace fockrep::oracle {

/// Up-crossings found by scanning act over every source in `window`.
inline std::vector<Crossing> scan_up_crossings(const LieElement& x, std::span<const Index> window,
                                               const Realization& R) {
  std::vector<Crossing> out;
  std::set<Index> seen(window.begin(), window.end());
  for (const auto& alpha : seen) {
    if (!R.in_J(alpha)) continue;
    for (const auto& [gamma, c] : act(x, alpha, R))
      if (!R.in_J(gamma)) out.push_back({alpha, gamma, c});
  }
  return out;
}

/// -x_beta^alpha for every alpha in `window`, read off act.
inline SparseVector scan_dual_act(const LieElement& x, const Index& beta, std::span<const Index> window,
                                  const Realization& R) {
  SparseVector out;
  std::set<Index> seen(window.begin(), window.end());
  for (const auto& alpha : seen) out.add(alpha, -act(x, alpha, R).coeff(beta));
  return out;
}

namespace detail {
/// Creation letters first (unstarred, then starred), annihilators last.
struct FockRank {
  const Realization* R;
  auto operator()(const Letter& l) const {
    int cls = 0;
    if (l.starred) cls = R->in_J(l.index) ? 1 : 3;
    else cls = R->in_J(l.index) ? 2 : 0;
    return std::pair{cls, l.index};
  }
};
}  // namespace detail

/// Evaluates a word expression on v0 by full rewriting: sort annihilators to
/// the right, where they kill v0.
inline FockVector vacuum_reduce(const WordExpr& w, const Realization& R,
                                SwapSchedule schedule = SwapSchedule::leftmost) {
  FockVector out;
  for (const auto& [seq, c] : reorder(w, R.rho(), detail::FockRank{&R}, schedule)) {
    bool killed = false;
    Monomial m;
    for (const auto& l : seq) {
      if (!is_creation(l, R)) {
        killed = true;
        break;
      }
      (l.starred ? m.starred : m.unstarred).push_back(l.index);
    }
    if (!killed) out.add(m, c);
  }
  return out;
}

/// f_x v from a finite truncation of sum_{alpha,gamma} x_gamma^alpha :w_gamma w*_alpha:
/// containing every term that can act nonzero on v, multiplied out in the
/// generator algebra and evaluated on v0.
inline FockVector apply_fx_truncated(const LieElement& x, const FockVector& v, const Realization& R) {
  std::set<Index> sources;
  for (const auto& cr : up_crossings(x, R)) sources.insert(cr.source);
  FockVector out;
  for (const auto& [m, c] : v) {
    std::set<Index> alphas = sources;
    std::vector<Index> touched = m.unstarred;
    touched.insert(touched.end(), m.starred.begin(), m.starred.end());
    for (const auto& s : touched) {
      alphas.insert(s);
      for (const auto& [a, coeff] : dual_act(x, s, R)) alphas.insert(a);
    }
    const LetterSeq tail = m.letters();
    WordExpr expr;
    for (const auto& alpha : alphas) {
      for (const auto& [gamma, xg] : act(x, alpha, R)) {
        LetterSeq w;
        Scalar k = xg;
        if (gamma == alpha && R.in_J(alpha)) {
          w = {Letter::star(alpha), Letter::w(gamma)};
          k *= Scalar(-R.rho());
        } else {
          w = {Letter::w(gamma), Letter::star(alpha)};
        }
        w.insert(w.end(), tail.begin(), tail.end());
        expr.add(w, k * c);
      }
    }
    out += vacuum_reduce(expr, R);
  }
  return out;
}

}  // namespace fockrep::oracle
