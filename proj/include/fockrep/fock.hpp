#pragma once

// Fock space V_res: basis w_U w*_S v0 with U outside J, S inside J, the
// generator action, the quadratic operators f_x, the vacuum pairing and the
// J-grading.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fockrep/algebra.hpp"
#include "fockrep/weyl.hpp"

namespace fockrep {

using FockMonomial = Monomial;
using FockVector = SparseMap<Monomial>;

inline FockVector vacuum() { return {FockMonomial{}, Scalar(1)}; }

/// True for creation letters: w_a with a outside J, w*_b with b in J.
inline bool is_creation(const Letter& l, const Realization& R) { return l.starred == R.in_J(l.index); }

inline bool is_fock_monomial(const FockMonomial& m, const Realization& R) {
  auto sorted_ok = [&](const std::vector<Index>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (v[i] < v[i - 1]) return false;
      if (R.fermionic() && v[i] == v[i - 1]) return false;
    }
    return true;
  };
  if (!sorted_ok(m.unstarred) || !sorted_ok(m.starred)) return false;
  for (const auto& a : m.unstarred)
    if (R.in_J(a) || !R.model().valid_index(a)) return false;
  for (const auto& b : m.starred)
    if (!R.in_J(b) || !R.model().valid_index(b)) return false;
  return true;
}

namespace detail {

inline void apply_letter_to_monomial(const Letter& l, const FockMonomial& m, const Scalar& c, const Realization& R,
                                     FockVector& out) {
  const int rho = R.rho();
  if (is_creation(l, R)) {
    // Insert into the matching block; the letter passes every smaller entry
    // of its block, and a starred letter also passes all of U.
    FockMonomial r = m;
    auto& block = l.starred ? r.starred : r.unstarred;
    auto pos = std::upper_bound(block.begin(), block.end(), l.index);
    if (R.fermionic() && pos != block.begin() && *(pos - 1) == l.index) return;
    std::size_t passed = static_cast<std::size_t>(pos - block.begin());
    if (l.starred) passed += m.unstarred.size();
    block.insert(pos, l.index);
    out.add(r, c * Scalar(transposition_sign(rho, passed)));
    return;
  }
  // Annihilation: contract against each matching occurrence, then the letter
  // reaches v0 and vanishes.
  const auto& block = l.starred ? m.unstarred : m.starred;
  for (std::size_t p = 0; p < block.size(); ++p) {
    if (block[p] != l.index) continue;
    FockMonomial r = m;
    auto& target = l.starred ? r.unstarred : r.starred;
    target.erase(target.begin() + static_cast<std::ptrdiff_t>(p));
    Scalar sign = l.starred ? Scalar(transposition_sign(rho, p))
                            : Scalar(rho * transposition_sign(rho, m.unstarred.size() + p));
    out.add(r, c * sign);
  }
}

}  // namespace detail

inline FockVector apply_letter(const Letter& l, const FockVector& v, const Realization& R) {
  FockVector out;
  for (const auto& [m, c] : v) detail::apply_letter_to_monomial(l, m, c, R, out);
  return out;
}

/// Applies the letters right to left: u_1 ... u_k v.
inline FockVector apply_letters(std::span<const Letter> letters, FockVector v, const Realization& R) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = apply_letter(*it, v, R);
  return v;
}

/// f_x v0 = sum over up-crossings of x_gamma^alpha w_gamma w*_alpha v0.
inline FockVector fx_vacuum(const LieElement& x, const Realization& R) {
  FockVector out;
  for (const auto& cr : up_crossings(x, R)) out.add(FockMonomial{{cr.target}, {cr.source}}, cr.coeff);
  return out;
}

namespace detail {

/// f_x (u_1 ... u_k v0) = sum_i u_1 .. (x.u_i) .. u_k v0 + u_1 ... u_k f_x v0.
inline void apply_fx_to_monomial(const LieElement& x, const FockMonomial& m, const Scalar& c,
                                 const FockVector& fx0, const Realization& R, FockVector& out) {
  const LetterSeq letters = m.letters();
  const std::size_t k = letters.size();

  FockVector tail = apply_letters(letters, fx0, R);
  out.add_scaled(tail, c);

  for (std::size_t i = 0; i < k; ++i) {
    const Letter& u = letters[i];
    FockMonomial suffix;
    for (std::size_t t = i + 1; t < k; ++t) (letters[t].starred ? suffix.starred : suffix.unstarred).push_back(letters[t].index);

    const SparseVector image = u.starred ? dual_act(x, u.index, R) : act(x, u.index, R);
    if (image.empty()) continue;
    FockVector replaced;
    for (const auto& [idx, coeff] : image) apply_letter_to_monomial({idx, u.starred}, suffix, coeff, R, replaced);
    replaced = apply_letters(std::span<const Letter>(letters.data(), i), std::move(replaced), R);
    out.add_scaled(replaced, c);
  }
}

}  // namespace detail

inline FockVector apply_fx(const LieElement& x, const FockVector& v, const Realization& R) {
  const FockVector fx0 = fx_vacuum(x, R);
  FockVector out;
  for (const auto& [m, c] : v) detail::apply_fx_to_monomial(x, m, c, fx0, R, out);
  return out;
}

/// Coefficient of v0.
inline Scalar kappa(const FockVector& v) { return v.coeff(FockMonomial{}); }

/// Eigenvalue of J: l(unstarred) - l(starred).
inline std::int64_t j_degree(const FockMonomial& m) {
  return static_cast<std::int64_t>(m.unstarred.size()) - static_cast<std::int64_t>(m.starred.size());
}

/// All Fock basis monomials over `window` with total length in [min_length, max_length],
/// in ascending monomial order.
inline std::vector<FockMonomial> enumerate_basis(const Realization& R, std::span<const Index> window,
                                                 std::size_t min_length, std::size_t max_length) {
  std::vector<Index> outside, inside;
  for (const auto& a : window) (R.in_J(a) ? inside : outside).push_back(a);
  std::sort(outside.begin(), outside.end());
  outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());

  // Multisets (sets if fermionic) of size exactly n over `pool`, ascending.
  const bool repeat = !R.fermionic();
  auto choose = [repeat](const std::vector<Index>& pool, std::size_t n) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (cur.size() == n) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        rec(repeat ? i : i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };

  std::vector<FockMonomial> out;
  for (std::size_t len = min_length; len <= max_length; ++len)
    for (std::size_t nu = 0; nu <= len; ++nu)
      for (auto& u : choose(outside, nu))
        for (auto& s : choose(inside, len - nu)) out.push_back(FockMonomial{u, s});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fockrep
