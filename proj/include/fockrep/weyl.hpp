#pragma once

// The generator algebra: words in w_alpha, w_alpha^*, rewritten under
//   (R1) v w = -rho w v           (same kind of letter)
//   (R2) w*_a w_b = -rho w_b w*_a + delta_ab,  w_a w*_b = -rho w*_b w_a + rho delta_ab
// by adjacent transpositions. Every sign in the library comes from
// counting transpositions, each worth -rho.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <vector>

#include "fockrep/realization.hpp"

namespace fockrep {

struct Letter {
  Index index;
  bool starred = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;

  static Letter w(Index i) { return {i, false}; }
  static Letter star(Index i) { return {i, true}; }
};

using LetterSeq = std::vector<Letter>;

struct Word {
  Scalar coeff = Scalar(1);
  LetterSeq letters;
};

/// Unstarred letters (ascending) followed by starred letters (ascending).
struct Monomial {
  std::vector<Index> unstarred;
  std::vector<Index> starred;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  [[nodiscard]] std::size_t length() const { return unstarred.size() + starred.size(); }

  [[nodiscard]] LetterSeq letters() const {
    LetterSeq out;
    out.reserve(length());
    for (const auto& i : unstarred) out.push_back(Letter::w(i));
    for (const auto& i : starred) out.push_back(Letter::star(i));
    return out;
  }
};

using StandardExpr = SparseMap<Monomial>;
using WordExpr = SparseMap<LetterSeq>;

/// (-rho)^count
inline int transposition_sign(int rho, std::size_t count) { return (rho == 1 && count % 2 == 1) ? -1 : 1; }

enum class SwapSchedule { leftmost, rightmost };

/// Sorts every word into the order given by `rank` (a strict weak order key on
/// letters), applying (R1)/(R2) at each adjacent inversion. Words with two equal
/// adjacent letters vanish when rho = +1.
template <class Rank>
WordExpr reorder(const WordExpr& input, int rho, Rank rank, SwapSchedule schedule = SwapSchedule::leftmost) {
  WordExpr done;
  std::vector<std::pair<LetterSeq, Scalar>> work(input.begin(), input.end());
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;

    bool vanishes = false;
    std::ptrdiff_t pos = -1;
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    for (std::ptrdiff_t i = 0; i + 1 < n; ++i) {
      if (rho == 1 && w[i] == w[i + 1]) {
        vanishes = true;
        break;
      }
      if (rank(w[i + 1]) < rank(w[i])) {
        pos = i;
        if (schedule == SwapSchedule::leftmost) break;
      }
    }
    if (vanishes) continue;
    if (pos < 0) {
      done.add(w, c);
      continue;
    }

    const Letter a = w[pos];
    const Letter b = w[pos + 1];
    if (a.index == b.index && a.starred != b.starred) {
      LetterSeq contracted;
      contracted.reserve(w.size() - 2);
      contracted.insert(contracted.end(), w.begin(), w.begin() + pos);
      contracted.insert(contracted.end(), w.begin() + pos + 2, w.end());
      // w*_a w_a -> +1, w_a w*_a -> +rho
      work.emplace_back(std::move(contracted), a.starred ? c : c * Scalar(rho));
    }
    std::swap(w[pos], w[pos + 1]);
    work.emplace_back(std::move(w), c * Scalar(-rho));
  }
  return done;
}

namespace detail {
struct StandardRank {
  auto operator()(const Letter& l) const { return std::pair{l.starred, l.index}; }
};

inline Monomial to_monomial(const LetterSeq& sorted) {
  Monomial m;
  for (const auto& l : sorted) (l.starred ? m.starred : m.unstarred).push_back(l.index);
  return m;
}
}  // namespace detail

inline StandardExpr rewrite_standard(const WordExpr& w, int rho, SwapSchedule schedule = SwapSchedule::leftmost) {
  StandardExpr out;
  for (const auto& [seq, c] : reorder(w, rho, detail::StandardRank{}, schedule)) out.add(detail::to_monomial(seq), c);
  return out;
}

inline StandardExpr rewrite_standard(const Word& w, int rho, SwapSchedule schedule = SwapSchedule::leftmost) {
  return rewrite_standard(WordExpr(w.letters, w.coeff), rho, schedule);
}

inline StandardExpr rewrite_standard(const Word& w, const Realization& R,
                                     SwapSchedule schedule = SwapSchedule::leftmost) {
  return rewrite_standard(w, R.rho(), schedule);
}

/// :w_gamma w_alpha^*: in standard form.
inline StandardExpr normal_order_pair(const Index& gamma, const Index& alpha, const Realization& R) {
  if (gamma == alpha && R.in_J(alpha))
    return rewrite_standard(Word{Scalar(-R.rho()), {Letter::star(alpha), Letter::w(gamma)}}, R);
  return {Monomial{{gamma}, {alpha}}, Scalar(1)};
}

/// Moves a letter in front of w_U w*_S v to the far right in closed form:
///   w*_a w_U w*_S = (-rho)^(|U|+|S|) w_U w*_S w*_a + sum_{p: U_p = a} (-rho)^(p-1) w_{U - p} w*_S
///   w_a  w_U w*_S = (-rho)^(|U|+|S|) w_U w*_S w_a  + sum_{q: S_q = a} rho (-rho)^(|U|+q-1) w_U w*_{S - q}
/// with p, q 1-based positions; repeated letters contribute once per occurrence.
inline WordExpr comp2_terms(const Index& alpha, bool starred, const Monomial& m, int rho) {
  WordExpr out;
  LetterSeq lead = m.letters();
  lead.push_back({alpha, starred});
  out.add(lead, Scalar(transposition_sign(rho, m.length())));

  const auto& block = starred ? m.unstarred : m.starred;
  for (std::size_t p = 0; p < block.size(); ++p) {
    if (block[p] != alpha) continue;
    Monomial rest = m;
    auto& target = starred ? rest.unstarred : rest.starred;
    target.erase(target.begin() + static_cast<std::ptrdiff_t>(p));
    Scalar c = starred ? Scalar(transposition_sign(rho, p))
                       : Scalar(rho * transposition_sign(rho, m.unstarred.size() + p));
    out.add(rest.letters(), c);
  }
  return out;
}

/// Standard form of letter * m obtained from the closed-form reordering.
inline StandardExpr comp2_closed_form(const Index& alpha, bool starred, const Monomial& m, int rho) {
  return rewrite_standard(comp2_terms(alpha, starred, m, rho), rho);
}

}  // namespace fockrep
