#pragma once

// Seeded verification suites. Each check covers one stated invariant and
// reports how many cases it ran plus the first counterexample, if any.
//
// Suites: numerics, appendix, algebra, weyl, fock, cocycle, instances, all.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fockrep/algebra.hpp"
#include "fockrep/cocycle.hpp"
#include "fockrep/fock.hpp"
#include "fockrep/instances.hpp"
#include "fockrep/oracles.hpp"
#include "fockrep/parse.hpp"
#include "fockrep/weyl.hpp"

namespace fockrep::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string failure;
};

struct Options {
  std::uint64_t seed = 0;
  // Bound for the numeric identity suites (m, l, s range of the appendix lemma).
  int max = 10;
  // Random samples per instance; 0 means each check's own default.
  std::size_t samples = 0;
};

/// mt19937_64 with a fixed reduction so draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }
  bool coin() { return (engine_() & 1U) != 0; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

struct SymbolBounds {
  std::int64_t exp = 4;  // |m|, |n|, |k| bound
  std::int64_t deg = 3;  // weyl p-degree bound
};

inline BasisSymbol random_symbol(const Realization& R, Rng& rng, SymbolBounds b = {}) {
  const int n = R.config().n;
  auto row = [&] { return static_cast<int>(rng.uniform(1, n)); };
  switch (R.kind()) {
    case AlgebraKind::gl: return BasisSymbol::gl(row(), row());
    case AlgebraKind::loop: return BasisSymbol::loop(row(), row(), rng.uniform(-b.exp, b.exp));
    case AlgebraKind::witt: return BasisSymbol::witt(rng.uniform(-b.exp, b.exp));
    case AlgebraKind::qtorus: return BasisSymbol::qtorus(row(), row(), rng.uniform(-b.exp, b.exp), rng.uniform(-b.exp, b.exp));
    case AlgebraKind::weyl: return BasisSymbol::weyl(row(), row(), rng.uniform(-b.exp, b.exp), rng.uniform(0, b.deg));
  }
  return {};
}

inline LieElement random_element(const Realization& R, Rng& rng, std::size_t max_terms = 3, SymbolBounds b = {}) {
  LieElement x;
  const auto terms = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) x.add(random_symbol(R, rng, b), Scalar(rng.uniform(-3, 3), rng.uniform(1, 2)));
  return x;
}

/// Every basis symbol of the instance within the bounds, in ascending order.
inline std::vector<BasisSymbol> basis_symbols(const Realization& R, SymbolBounds b) {
  std::vector<BasisSymbol> out;
  const int n = R.config().n;
  if (R.kind() == AlgebraKind::witt) {
    for (std::int64_t m = -b.exp; m <= b.exp; ++m) out.push_back(BasisSymbol::witt(m));
    return out;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      switch (R.kind()) {
        case AlgebraKind::gl: out.push_back(BasisSymbol::gl(i, j)); break;
        case AlgebraKind::loop:
          for (std::int64_t m = -b.exp; m <= b.exp; ++m) out.push_back(BasisSymbol::loop(i, j, m));
          break;
        case AlgebraKind::qtorus:
          for (std::int64_t m = -b.exp; m <= b.exp; ++m)
            for (std::int64_t k = -b.exp; k <= b.exp; ++k) out.push_back(BasisSymbol::qtorus(i, j, m, k));
          break;
        case AlgebraKind::weyl:
          for (std::int64_t k = -b.exp; k <= b.exp; ++k)
            for (std::int64_t l = 0; l <= b.deg; ++l) out.push_back(BasisSymbol::weyl(i, j, k, l));
          break;
        case AlgebraKind::witt: break;
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Module indices within `radius` of the cut (all rows for gl).
inline std::vector<Index> cut_window(const Realization& R, std::int64_t radius) {
  const std::int64_t c = R.config().j_cut;
  return R.model().window(c - radius, c + radius - 1);
}

/// A Fock vector of one or two monomials, each of length at most max_len,
/// built from creation letters near the cut.
inline FockVector random_fock_vector(const Realization& R, Rng& rng, std::size_t max_len = 3) {
  const auto window = cut_window(R, 3);
  FockVector v;
  const auto terms = rng.uniform(1, 2);
  for (std::int64_t t = 0; t < terms; ++t) {
    LetterSeq letters;
    const auto len = rng.uniform(0, static_cast<std::int64_t>(max_len));
    for (std::int64_t k = 0; k < len; ++k) {
      const Index& a = rng.pick(window);
      letters.push_back({a, R.in_J(a)});
    }
    v.add_scaled(apply_letters(letters, vacuum(), R), Scalar(rng.uniform(1, 3)));
  }
  if (v.empty()) v = vacuum();
  return v;
}

/// Instances sampled by the randomized checks, both statistics each.
inline std::vector<Realization> catalog() {
  std::vector<Realization> out;
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    out.push_back(build(AlgebraKind::gl, 3, st, 0));
    out.push_back(build(AlgebraKind::gl, 3, st, 2));
    out.push_back(build(AlgebraKind::loop, 2, st));
    out.push_back(build(AlgebraKind::witt, 1, st));
    out.push_back(build(AlgebraKind::qtorus, 2, st, 0, Scalar(3, 2)));
    out.push_back(build(AlgebraKind::weyl, 2, st));
  }
  return out;
}

inline std::string describe(const Realization& R) {
  std::ostringstream os;
  os << to_string(R.kind());
  if (R.kind() != AlgebraKind::witt) os << " N=" << R.config().n;
  if (R.kind() == AlgebraKind::qtorus) os << " q=" << R.config().q;
  os << " rho=" << R.rho() << " J=" << R.model().describe_cut(R.config().j_cut);
  return os.str();
}

namespace detail {

/// Accumulates cases for one check; the first failure message is kept.
class Tally {
 public:
  Tally(std::string suite, std::string name) { r_.suite = std::move(suite), r_.name = std::move(name); }

  bool expect(bool ok, const std::function<std::string()>& why) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.failure = why();
    }
    return ok;
  }
  [[nodiscard]] bool failed() const { return !r_.passed; }
  CheckResult result() && { return std::move(r_); }

 private:
  CheckResult r_;
};

inline std::size_t samples_or(const Options& o, std::size_t fallback) { return o.samples ? o.samples : fallback; }


}  // namespace detail

// ---- numerics ------------------------------------------------------------

inline CheckResult check_binomial_negation(const Options&) {
  detail::Tally t("numerics", "binomial upper negation");
  for (std::int64_t a = -30; a <= 30; ++a)
    for (std::int64_t b = 0; b <= 64; ++b) {
      Scalar lhs = binomial(Integer(a), b);
      Scalar rhs = Scalar(sign_power(b)) * binomial(Integer(b - a - 1), b);
      t.expect(lhs == rhs, [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
    }
  return std::move(t).result();
}

inline CheckResult check_vandermonde(const Options&) {
  detail::Tally t("numerics", "Vandermonde convolution");
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b)
      for (std::int64_t c = 0; c <= 20; ++c) {
        Scalar sum;
        for (std::int64_t n = 0; n <= c; ++n) sum += binomial(Integer(a), n) * binomial(Integer(b), c - n);
        t.expect(sum == binomial(Integer(a + b), c), [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
        });
      }
  return std::move(t).result();
}

inline CheckResult check_binomial_symmetry(const Options&) {
  detail::Tally t("numerics", "binomial symmetry");
  for (std::int64_t d = 0; d <= 64; ++d)
    for (std::int64_t b = 0; b <= d; ++b)
      t.expect(binomial(Integer(d), b) == binomial(Integer(d), d - b),
               [&] { return "d=" + std::to_string(d) + " b=" + std::to_string(b); });
  return std::move(t).result();
}

inline CheckResult check_falling_factorial_product(const Options&) {
  detail::Tally t("numerics", "falling factorial splitting");
  for (std::int64_t a = -15; a <= 15; ++a)
    for (std::int64_t b = 0; b <= 12; ++b)
      for (std::int64_t c = 0; c <= 12; ++c) {
        Integer lhs = falling_factorial(Integer(a), b) * falling_factorial(Integer(a - b), c);
        t.expect(lhs == falling_factorial(Integer(a), b + c), [&] {
          return "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c);
        });
      }
  return std::move(t).result();
}

inline CheckResult check_appendix_lemma(const Options& o) {
  detail::Tally t("appendix", "falling factorial sum lemma");
  for (std::int64_t m = 0; m <= o.max; ++m)
    for (std::int64_t l = 0; l <= o.max; ++l)
      for (std::int64_t s = 0; s <= o.max; ++s) {
        auto where = [&](const char* part, const Integer& lhs, const Integer& rhs) {
          return std::string(part) + " m=" + std::to_string(m) + " l=" + std::to_string(l) + " s=" +
                 std::to_string(s) + ": " + lhs.get_str() + " vs " + rhs.get_str();
        };
        Integer li = appendix_lemma_lhs_i(m, l, s), ri = appendix_lemma_rhs_i(m, l, s);
        t.expect(li == ri, [&] { return where("(i)", li, ri); });
        Integer lii = appendix_lemma_lhs_ii(m, l, s), rii = appendix_lemma_rhs_ii(m, l, s);
        t.expect(lii == rii, [&] { return where("(ii)", lii, rii); });
      }
  return std::move(t).result();
}

// ---- algebra ---------------------------------------------------------------

/// Small instances whose basis triples are enumerated exhaustively.
inline std::vector<std::pair<Realization, SymbolBounds>> exhaustive_bracket_grids() {
  return {
      {build(AlgebraKind::gl, 3), {0, 0}},
      {build(AlgebraKind::loop, 1), {6, 0}},
      {build(AlgebraKind::loop, 2), {2, 0}},
      {build(AlgebraKind::witt), {6, 0}},
      {build(AlgebraKind::qtorus, 1, Statistics::bose, 0, Scalar(2)), {2, 0}},
      {build(AlgebraKind::weyl, 1), {3, 2}},
  };
}

inline CheckResult check_bracket_lie(const Options& o) {
  detail::Tally t("algebra", "bracket antisymmetry, Jacobi, bilinearity");
  auto jacobi = [](const LieElement& x, const LieElement& y, const LieElement& z, const Realization& R) {
    return bracket(x, bracket(y, z, R), R) + bracket(y, bracket(z, x, R), R) + bracket(z, bracket(x, y, R), R);
  };
  for (const auto& [R, b] : exhaustive_bracket_grids()) {
    const auto basis = basis_symbols(R, b);
    for (const auto& sx : basis)
      for (const auto& sy : basis) {
        const LieElement x = element(sx), y = element(sy);
        const LieElement xy = bracket(x, y, R);
        t.expect(xy == -bracket(y, x, R), [&] { return describe(R) + ": [x,y] != -[y,x] for " + render(sx) + ", " + render(sy); });
        for (const auto& sz : basis) {
          if (sz < sy || sy < sx) continue;  // Jacobi is symmetric under permutations up to sign
          t.expect(jacobi(x, y, element(sz), R).empty(),
                   [&] { return describe(R) + ": Jacobi fails on " + render(sx) + ", " + render(sy) + ", " + render(sz); });
        }
      }
  }
  Rng rng(o.seed);
  for (const auto& R : catalog()) {
    if (R.fermionic()) continue;  // the bracket does not depend on the statistics
    for (std::size_t k = 0; k < detail::samples_or(o, 100); ++k) {
      const LieElement x = random_element(R, rng), y = random_element(R, rng), z = random_element(R, rng);
      const Scalar a(rng.uniform(-3, 3), rng.uniform(1, 3)), c(rng.uniform(-3, 3));
      t.expect(bracket(a * x + c * z, y, R) == a * bracket(x, y, R) + c * bracket(z, y, R), [&] { return describe(R) + ": bilinearity fails for x=" + render(x) + ", y=" + render(y); });
      t.expect(jacobi(x, y, z, R).empty(), [&] { return describe(R) + ": Jacobi fails for x=" + render(x); });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_up_crossings_scan(const Options&) {
  detail::Tally t("algebra", "up-crossings match a window scan");
  std::vector<Realization> rs;
  for (int cut : {0, 1, -2}) {
    rs.push_back(build(AlgebraKind::loop, 2, Statistics::bose, cut));
    rs.push_back(build(AlgebraKind::witt, 1, Statistics::bose, cut));
    rs.push_back(build(AlgebraKind::qtorus, 2, Statistics::bose, cut, Scalar(-1)));
    rs.push_back(build(AlgebraKind::weyl, 2, Statistics::bose, cut));
  }
  for (int cut = 0; cut <= 3; ++cut) rs.push_back(build(AlgebraKind::gl, 3, Statistics::bose, cut));
  for (const auto& R : rs) {
    const SymbolBounds b{6, 3};
    const auto window = cut_window(R, b.exp + b.deg + 2);
    for (const auto& s : basis_symbols(R, b)) {
      const LieElement x = element(s);
      auto scanned = oracle::scan_up_crossings(x, window, R);
      auto closed = up_crossings(x, R);
      auto key = [](const Crossing& c) { return std::pair{c.source, c.target}; };
      auto by_key = [&](const Crossing& l, const Crossing& r) { return key(l) < key(r); };
      std::sort(scanned.begin(), scanned.end(), by_key);
      std::sort(closed.begin(), closed.end(), by_key);
      bool same = scanned.size() == closed.size();
      for (std::size_t i = 0; same && i < closed.size(); ++i)
        same = key(scanned[i]) == key(closed[i]) && scanned[i].coeff == closed[i].coeff;
      t.expect(same, [&] { return describe(R) + ": up-crossings of " + render(s); });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_dual_act_transpose(const Options&) {
  detail::Tally t("algebra", "dual action is the negated transpose");
  std::vector<Realization> rs = {build(AlgebraKind::gl, 3), build(AlgebraKind::loop, 2), build(AlgebraKind::witt),
                                 build(AlgebraKind::qtorus, 2, Statistics::bose, 0, Scalar(3, 2)),
                                 build(AlgebraKind::weyl, 2)};
  for (const auto& R : rs) {
    const SymbolBounds b{4, 3};
    const auto betas = cut_window(R, 4);
    const auto window = cut_window(R, 4 + b.exp + b.deg + 2);
    for (const auto& s : basis_symbols(R, b))
      for (const auto& beta : betas) {
        const LieElement x = element(s);
        t.expect(dual_act(x, beta, R) == oracle::scan_dual_act(x, beta, window, R),
                 [&] { return describe(R) + ": " + render(s) + " on " + R.model().render_index(beta); });
      }
  }
  return std::move(t).result();
}

inline CheckResult check_qtorus_degeneration(const Options&) {
  detail::Tally t("algebra", "quantum torus bracket at q=1 is commutative-coefficient");
  const Realization Q = build(AlgebraKind::qtorus, 2, Statistics::bose, 0, Scalar(1));
  for (const auto& x : basis_symbols(Q, {2, 0}))
    for (const auto& y : basis_symbols(Q, {2, 0})) {
      LieElement expect;
      if (x.j == y.i) expect.add(BasisSymbol::qtorus(x.i, y.j, x.a + y.a, x.b + y.b), Scalar(1));
      if (y.j == x.i) expect.add(BasisSymbol::qtorus(y.i, x.j, x.a + y.a, x.b + y.b), Scalar(-1));
      t.expect(bracket(element(x), element(y), Q) == expect, [&] { return render(x) + ", " + render(y); });
    }
  return std::move(t).result();
}

// ---- weyl ------------------------------------------------------------------

inline LetterSeq random_word(Rng& rng, std::size_t max_len, const std::vector<Index>& alphabet) {
  LetterSeq w;
  const auto len = rng.uniform(0, static_cast<std::int64_t>(max_len));
  for (std::int64_t i = 0; i < len; ++i) w.push_back({rng.pick(alphabet), rng.coin()});
  return w;
}

inline std::vector<Index> letter_alphabet(std::size_t n) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({0, static_cast<std::int64_t>(i)});
  return out;
}

inline std::string show_word(const LetterSeq& w) {
  std::string s;
  for (const auto& l : w) s += (l.starred ? "w*" : "w") + std::to_string(l.index.exp) + " ";
  return s.empty() ? "1" : s;
}

/// All standard monomials over `alphabet` of total length <= max_len
/// (multisets for rho = -1, sets for rho = +1).
inline std::vector<Monomial> standard_monomials(const std::vector<Index>& alphabet, std::size_t max_len, int rho) {
  std::vector<Monomial> out;
  std::vector<Index> cur;
  std::function<void(std::size_t, std::size_t, std::vector<std::vector<Index>>&)> rec =
      [&](std::size_t from, std::size_t len, std::vector<std::vector<Index>>& acc) {
        if (cur.size() == len) {
          acc.push_back(cur);
          return;
        }
        for (std::size_t i = from; i < alphabet.size(); ++i) {
          cur.push_back(alphabet[i]);
          rec(rho == 1 ? i + 1 : i, len, acc);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::vector<Index>>> by_len(max_len + 1);
  for (std::size_t len = 0; len <= max_len; ++len) rec(0, len, by_len[len]);
  for (std::size_t lu = 0; lu <= max_len; ++lu)
    for (std::size_t ls = 0; lu + ls <= max_len; ++ls)
      for (const auto& u : by_len[lu])
        for (const auto& s : by_len[ls]) out.push_back(Monomial{u, s});
  return out;
}

inline CheckResult check_confluence(const Options& o) {
  detail::Tally t("weyl", "rewriting is schedule independent");
  Rng rng(o.seed);
  const auto alphabet = letter_alphabet(6);
  for (int rho : {-1, 1})
    for (std::size_t k = 0; k < detail::samples_or(o, 500); ++k) {
      const LetterSeq w = random_word(rng, 6, alphabet);
      const WordExpr e(w, Scalar(1));
      t.expect(rewrite_standard(e, rho, SwapSchedule::leftmost) == rewrite_standard(e, rho, SwapSchedule::rightmost),
               [&] { return "rho=" + std::to_string(rho) + " word " + show_word(w); });
    }
  return std::move(t).result();
}

inline CheckResult check_rewrite_idempotent(const Options&) {
  detail::Tally t("weyl", "standard monomials are fixed points");
  const auto alphabet = letter_alphabet(4);
  for (int rho : {-1, 1})
    for (const auto& m : standard_monomials(alphabet, 5, rho))
      t.expect(rewrite_standard(WordExpr(m.letters(), Scalar(1)), rho) == StandardExpr(m, Scalar(1)),
               [&] { return "rho=" + std::to_string(rho) + " " + show_word(m.letters()); });
  return std::move(t).result();
}

inline CheckResult check_comp2(const Options&) {
  detail::Tally t("weyl", "closed-form letter insertion matches rewriting");
  const auto alphabet = letter_alphabet(4);
  for (int rho : {-1, 1})
    for (const auto& m : standard_monomials(alphabet, 5, rho))
      for (const auto& a : alphabet)
        for (bool starred : {false, true}) {
          LetterSeq w{{a, starred}};
          const LetterSeq tail = m.letters();
          w.insert(w.end(), tail.begin(), tail.end());
          t.expect(comp2_closed_form(a, starred, m, rho) == rewrite_standard(WordExpr(w, Scalar(1)), rho),
                   [&] { return "rho=" + std::to_string(rho) + " word " + show_word(w); });
        }
  return std::move(t).result();
}

inline CheckResult check_fermionic_nilpotence(const Options& o) {
  detail::Tally t("weyl", "fermionic words with a repeated letter vanish");
  Rng rng(o.seed + 1);
  const auto alphabet = letter_alphabet(4);
  for (std::size_t k = 0; k < detail::samples_or(o, 500); ++k) {
    LetterSeq w = random_word(rng, 5, alphabet);
    const Letter l{rng.pick(alphabet), rng.coin()};
    const auto p1 = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(w.size())));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(p1), l);
    const auto p2 = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(w.size())));
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(p2), l);
    // Letters sharing l's index could contract with the copies, so drop them.
    LetterSeq clean;
    for (const auto& x : w)
      if (x == l || x.index != l.index) clean.push_back(x);
    t.expect(rewrite_standard(WordExpr(clean, Scalar(1)), 1).empty(), [&] { return show_word(clean); });
  }
  return std::move(t).result();
}

inline CheckResult check_rewrite_parity(const Options& o) {
  detail::Tally t("weyl", "rewriting preserves unstarred minus starred count");
  Rng rng(o.seed + 2);
  const auto alphabet = letter_alphabet(3);
  for (int rho : {-1, 1})
    for (std::size_t k = 0; k < detail::samples_or(o, 500); ++k) {
      const LetterSeq w = random_word(rng, 6, alphabet);
      std::int64_t deg = 0;
      for (const auto& l : w) deg += l.starred ? -1 : 1;
      for (const auto& [m, c] : rewrite_standard(WordExpr(w, Scalar(1)), rho))
        t.expect(j_degree(m) == deg, [&] { return show_word(w); });
    }
  return std::move(t).result();
}

// ---- fock ------------------------------------------------------------------

inline CheckResult check_module_law(const Options& o) {
  detail::Tally t("fock", "module law with central scalar rho*c");
  Rng rng(o.seed + 10);
  for (const auto& R : catalog())
    for (std::size_t k = 0; k < detail::samples_or(o, 50); ++k) {
      const LieElement x = random_element(R, rng, 2), y = random_element(R, rng, 2);
      const FockVector v = random_fock_vector(R, rng, 3);
      FockVector lhs = apply_fx(bracket(x, y, R), v, R) + Scalar(R.rho()) * cocycle(x, y, R) * v;
      FockVector rhs = apply_fx(x, apply_fx(y, v, R), R) - apply_fx(y, apply_fx(x, v, R), R);
      t.expect(lhs == rhs, [&] { return describe(R) + ": x=" + render(x) + " y=" + render(y); });
    }
  return std::move(t).result();
}

inline CheckResult check_grading(const Options& o) {
  detail::Tally t("fock", "f_x preserves the J-degree");
  Rng rng(o.seed + 10);
  for (const auto& R : catalog())
    for (std::size_t k = 0; k < detail::samples_or(o, 50); ++k) {
      const LieElement x = random_element(R, rng, 2), y = random_element(R, rng, 2);
      const FockVector v = random_fock_vector(R, rng, 3);
      for (const auto& [m, c] : v) {
        const FockVector single(m, Scalar(1));
        for (const auto* e : {&x, &y})
          for (const auto& [m2, c2] : apply_fx(*e, single, R))
            t.expect(j_degree(m2) == j_degree(m) && is_fock_monomial(m2, R),
                     [&] { return describe(R) + ": x=" + render(*e); });
      }
    }
  return std::move(t).result();
}

inline CheckResult check_fx_oracle(const Options& o) {
  detail::Tally t("fock", "f_x matches the truncated normal-ordered sum");
  Rng rng(o.seed + 20);
  for (const auto& R : catalog())
    for (std::size_t k = 0; k < detail::samples_or(o, 200); ++k) {
      const LieElement x = random_element(R, rng, 2);
      const FockVector v = random_fock_vector(R, rng, 3);
      t.expect(apply_fx(x, v, R) == oracle::apply_fx_truncated(x, v, R),
               [&] { return describe(R) + ": x=" + render(x) + " v=" + std::to_string(v.size()) + " terms"; });
    }
  return std::move(t).result();
}

inline CheckResult check_vacuum_criterion(const Options&) {
  detail::Tally t("fock", "annihilators detect the vacuum line");
  for (const auto& R : catalog()) {
    const auto window = cut_window(R, 3);
    LetterSeq annihilators;
    for (const auto& a : window) annihilators.push_back({a, !R.in_J(a)});
    // Every annihilator monomial of length 1..3 kills v0.
    for (const auto& a : annihilators) {
      t.expect(apply_letter(a, vacuum(), R).empty(), [&] { return describe(R) + ": single annihilator"; });
      for (const auto& b : annihilators)
        for (const auto& c : annihilators) {
          const LetterSeq w{a, b, c};
          t.expect(apply_letters(w, vacuum(), R).empty(), [&] { return describe(R) + ": " + show_word(w); });
        }
    }
    // Off the vacuum line, some annihilator acts nonzero.
    for (const auto& m : enumerate_basis(R, window, 1, 2)) {
      const FockVector v(m, Scalar(1));
      bool detected = false;
      for (const auto& a : annihilators) detected = detected || !apply_letter(a, v, R).empty();
      t.expect(detected, [&] { return describe(R) + ": monomial " + show_word(m.letters()) + " looks like vacuum"; });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_fermionic_double_creation(const Options&) {
  detail::Tally t("fock", "fermionic creation letters square to zero");
  for (const auto& R : catalog()) {
    if (!R.fermionic()) continue;
    const auto window = cut_window(R, 3);
    for (const auto& m : enumerate_basis(R, window, 0, 2))
      for (const auto& a : window) {
        const Letter l{a, R.in_J(a)};
        const LetterSeq w{l, l};
        t.expect(apply_letters(w, FockVector(m, Scalar(1)), R).empty(), [&] { return describe(R); });
      }
  }
  return std::move(t).result();
}

// ---- cocycle ---------------------------------------------------------------

struct PairGrid {
  Realization R;
  std::vector<std::pair<BasisSymbol, BasisSymbol>> pairs;
};

inline std::vector<std::pair<BasisSymbol, BasisSymbol>> all_pairs(const std::vector<BasisSymbol>& basis) {
  std::vector<std::pair<BasisSymbol, BasisSymbol>> out;
  out.reserve(basis.size() * basis.size());
  for (const auto& x : basis)
    for (const auto& y : basis) out.emplace_back(x, y);
  return out;
}

/// Grids on which the closed sums and the Fock-space oracle must agree.
inline std::vector<PairGrid> dual_oracle_grids(std::uint64_t seed) {
  std::vector<PairGrid> out;
  Rng rng(seed + 30);
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    for (int cut : {0, 1}) {
      Realization W = build(AlgebraKind::witt, 1, st, cut);
      out.push_back({W, all_pairs(basis_symbols(W, {8, 0}))});
    }
    for (int n = 1; n <= 3; ++n)
      for (int cut = 0; cut <= n; ++cut) {
        Realization G = build(AlgebraKind::gl, n, st, cut);
        out.push_back({G, all_pairs(basis_symbols(G, {0, 0}))});
      }
    for (int n = 1; n <= 3; ++n) {
      Realization L = build(AlgebraKind::loop, n, st);
      out.push_back({L, all_pairs(basis_symbols(L, {5, 0}))});
    }
    for (int n = 1; n <= 2; ++n) {
      Realization Y = build(AlgebraKind::weyl, n, st);
      out.push_back({Y, all_pairs(basis_symbols(Y, {5, 3}))});
    }
    for (const Scalar& q : {Scalar(1), Scalar(2), Scalar(3, 2), Scalar(-1)}) {
      Realization Q1 = build(AlgebraKind::qtorus, 1, st, 0, q);
      out.push_back({Q1, all_pairs(basis_symbols(Q1, {4, 0}))});
      Realization Q2 = build(AlgebraKind::qtorus, 2, st, 0, q);
      PairGrid g{Q2, {}};
      for (int k = 0; k < 500; ++k) g.pairs.emplace_back(random_symbol(Q2, rng), random_symbol(Q2, rng));
      out.push_back(std::move(g));
    }
  }
  return out;
}

inline CheckResult check_dual_oracle(const Options& o) {
  detail::Tally t("cocycle", "closed sums match the Fock-space commutator");
  for (const auto& g : dual_oracle_grids(o.seed))
    for (const auto& [x, y] : g.pairs) {
      const Scalar a = cocycle(x, y, g.R), b = cocycle_oracle(x, y, g.R);
      t.expect(a == b, [&] { return describe(g.R) + ": " + render(x) + ", " + render(y) + ": " + a.str() + " vs " + b.str(); });
    }
  return std::move(t).result();
}

inline CheckResult check_closed_forms(const Options&) {
  detail::Tally t("cocycle", "closed formulas for witt, loop and weyl");
  const Realization W = build(AlgebraKind::witt);
  for (const auto& [x, y] : all_pairs(basis_symbols(W, {20, 0})))
    t.expect(cocycle(x, y, W) == closed_form(x, y), [&] { return render(x) + ", " + render(y); });
  for (int n = 1; n <= 3; ++n) {
    const Realization L = build(AlgebraKind::loop, n);
    for (const auto& [x, y] : all_pairs(basis_symbols(L, {6, 0})))
      t.expect(cocycle(x, y, L) == closed_form(x, y), [&] { return render(x) + ", " + render(y); });
  }
  for (int n = 1; n <= 2; ++n) {
    const Realization Y = build(AlgebraKind::weyl, n);
    for (const auto& [x, y] : all_pairs(basis_symbols(Y, {8, 5})))
      t.expect(cocycle(x, y, Y) == closed_form(x, y), [&] { return render(x) + ", " + render(y); });
  }
  return std::move(t).result();
}

inline CheckResult check_cocycle_identities_sampled(const Options& o) {
  detail::Tally t("cocycle", "antisymmetry and cocycle Jacobi identity");
  Rng rng(o.seed + 40);
  for (const auto& R : catalog()) {
    if (R.fermionic()) continue;  // cocycle() does not see the statistics
    for (std::size_t k = 0; k < detail::samples_or(o, 200); ++k) {
      const LieElement x = random_element(R, rng), y = random_element(R, rng), z = random_element(R, rng);
      t.expect(check_cocycle_identities(x, y, z, R),
               [&] { return describe(R) + ": x=" + render(x) + " y=" + render(y) + " z=" + render(z); });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_corrupted_cocycle_detected(const Options& o) {
  detail::Tally t("cocycle", "a corrupted cocycle is rejected");
  Rng rng(o.seed + 41);
  const CocycleFn corrupted = [](const LieElement& a, const LieElement& b, const Realization& R) {
    auto s = cocycle_sums(a, b, R);
    return s.into_complement + s.into_cut;
  };
  for (const auto& R : {build(AlgebraKind::witt), build(AlgebraKind::loop, 2), build(AlgebraKind::weyl, 2)}) {
    bool caught = false;
    for (int k = 0; k < 200 && !caught; ++k) {
      const LieElement x = random_element(R, rng), y = random_element(R, rng), z = random_element(R, rng);
      caught = !check_cocycle_identities(x, y, z, R, corrupted);
    }
    t.expect(caught, [&] { return describe(R) + ": corrupted cocycle passed every triple"; });
  }
  return std::move(t).result();
}

inline CheckResult check_trivial_cut(const Options&) {
  detail::Tally t("cocycle", "empty cut gives the zero cocycle");
  for (auto st : {Statistics::bose, Statistics::fermi}) {
    const Realization G = build(AlgebraKind::gl, 3, st, 0);
    for (const auto& [x, y] : all_pairs(basis_symbols(G, {0, 0}))) {
      t.expect(cocycle(x, y, G).is_zero(), [&] { return render(x) + ", " + render(y); });
      t.expect(cocycle_oracle(x, y, G).is_zero(), [&] { return "oracle " + render(x) + ", " + render(y); });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_cocycle_bilinear(const Options& o) {
  detail::Tally t("cocycle", "cocycle is bilinear");
  Rng rng(o.seed + 42);
  for (const auto& R : catalog()) {
    if (R.fermionic()) continue;
    for (std::size_t k = 0; k < detail::samples_or(o, 100); ++k) {
      const LieElement x = random_element(R, rng), y = random_element(R, rng), z = random_element(R, rng);
      const Scalar a(rng.uniform(-4, 4), rng.uniform(1, 3)), b(rng.uniform(-4, 4), rng.uniform(1, 3));
      t.expect(cocycle(a * x + b * z, y, R) == a * cocycle(x, y, R) + b * cocycle(z, y, R),
               [&] { return describe(R) + ": x=" + render(x); });
    }
  }
  return std::move(t).result();
}

// ---- instances -------------------------------------------------------------

inline CheckResult check_action_homomorphisms(const Options& o) {
  detail::Tally t("instances", "module action is a Lie homomorphism");
  Rng rng(o.seed + 50);
  for (const auto& R : catalog()) {
    if (R.fermionic()) continue;
    const auto samples = cut_window(R, 6);
    for (std::size_t k = 0; k < detail::samples_or(o, 100); ++k) {
      const LieElement x = random_element(R, rng), y = random_element(R, rng);
      t.expect(check_action_homomorphism(x, y, samples, R), [&] { return describe(R) + ": x=" + render(x) + " y=" + render(y); });
    }
  }
  return std::move(t).result();
}

inline BasisSymbol as_loop(const BasisSymbol& s) { return BasisSymbol::loop(s.i, s.j, s.a); }

inline LieElement as_loop(const LieElement& x) {
  LieElement out;
  for (const auto& [s, c] : x) out.add(as_loop(s), c);
  return out;
}

inline CheckResult check_qtorus_matches_loop(const Options&) {
  detail::Tally t("instances", "quantum torus at q=1 restricts to loop");
  const Realization Q = build(AlgebraKind::qtorus, 2, Statistics::bose, 0, Scalar(1));
  const Realization L = build(AlgebraKind::loop, 2);
  std::vector<BasisSymbol> shared;
  for (const auto& s : basis_symbols(Q, {4, 0}))
    if (s.b == 0) shared.push_back(s);
  const auto window = cut_window(L, 6);
  for (const auto& x : shared) {
    for (const auto& a : window)
      t.expect(act(element(x), a, Q) == act(element(as_loop(x)), a, L), [&] { return "act " + render(x); });
    for (const auto& y : shared) {
      t.expect(as_loop(bracket(element(x), element(y), Q)) == bracket(element(as_loop(x)), element(as_loop(y)), L),
               [&] { return "bracket " + render(x) + ", " + render(y); });
      t.expect(cocycle(x, y, Q) == cocycle(as_loop(x), as_loop(y), L),
               [&] { return "cocycle " + render(x) + ", " + render(y); });
    }
  }
  return std::move(t).result();
}

inline CheckResult check_weyl_degree_zero_is_loop(const Options&) {
  detail::Tally t("instances", "weyl degree-zero part restricts to loop");
  const Realization Y = build(AlgebraKind::weyl, 2);
  const Realization L = build(AlgebraKind::loop, 2);
  std::vector<BasisSymbol> shared;
  for (const auto& s : basis_symbols(Y, {5, 0})) shared.push_back(s);
  for (const auto& x : shared)
    for (const auto& y : shared) {
      t.expect(as_loop(bracket(element(x), element(y), Y)) == bracket(element(as_loop(x)), element(as_loop(y)), L),
               [&] { return "bracket " + render(x) + ", " + render(y); });
      t.expect(cocycle(x, y, Y) == cocycle(as_loop(x), as_loop(y), L),
               [&] { return "cocycle " + render(x) + ", " + render(y); });
    }
  return std::move(t).result();
}

inline LieElement weyl_identity(int n, std::int64_t k, std::int64_t l) {
  LieElement out;
  for (int i = 1; i <= n; ++i) out.add(BasisSymbol::weyl(i, i, k, l), Scalar(1));
  return out;
}

inline CheckResult check_weyl_virasoro_copy(const Options&) {
  detail::Tally t("instances", "weyl I(k,1) cocycle is a Virasoro table");
  for (int n = 1; n <= 3; ++n) {
    const Realization Y = build(AlgebraKind::weyl, n);
    for (std::int64_t k = -8; k <= 8; ++k)
      for (std::int64_t r = -8; r <= 8; ++r) {
        const Scalar expect = k + r == 2 ? binomial(Integer(r), 3) * Scalar(n) : Scalar(0);
        const Scalar got = cocycle(weyl_identity(n, k, 1), weyl_identity(n, r, 1), Y);
        t.expect(got == expect, [&] {
          return "N=" + std::to_string(n) + " k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " + got.str();
        });
      }
  }
  return std::move(t).result();
}

inline CheckResult check_parse_render(const Options& o) {
  detail::Tally t("instances", "parsing a rendered element gives it back");
  Rng rng(o.seed + 60);
  for (const auto& R : catalog()) {
    if (R.fermionic()) continue;
    for (std::size_t k = 0; k < detail::samples_or(o, 200); ++k) {
      const LieElement x = random_element(R, rng, 4, {9, 4});
      t.expect(parse_element(R, render(x)) == x, [&] { return describe(R) + ": " + render(x); });
    }
  }
  return std::move(t).result();
}

// ---- registry ----------------------------------------------------------------

using Check = CheckResult (*)(const Options&);

inline const std::vector<std::pair<std::string, std::vector<Check>>>& suites() {
  static const std::vector<std::pair<std::string, std::vector<Check>>> table = {
      {"numerics", {check_binomial_negation, check_vandermonde, check_binomial_symmetry, check_falling_factorial_product,
                    check_appendix_lemma}},
      {"appendix", {check_appendix_lemma, check_binomial_negation, check_vandermonde, check_binomial_symmetry}},
      {"algebra", {check_bracket_lie, check_up_crossings_scan, check_dual_act_transpose, check_qtorus_degeneration}},
      {"weyl", {check_confluence, check_rewrite_idempotent, check_comp2, check_fermionic_nilpotence, check_rewrite_parity}},
      {"fock", {check_module_law, check_grading, check_fx_oracle, check_vacuum_criterion, check_fermionic_double_creation}},
      {"cocycle", {check_dual_oracle, check_closed_forms, check_cocycle_identities_sampled,
                   check_corrupted_cocycle_detected, check_trivial_cut, check_cocycle_bilinear}},
      {"instances", {check_action_homomorphisms, check_qtorus_matches_loop, check_weyl_degree_zero_is_loop,
                     check_weyl_virasoro_copy, check_parse_render}},
  };
  return table;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, checks] : suites()) out.push_back(name);
  out.emplace_back("all");
  return out;
}

/// Runs a named suite; "all" runs every module suite once (appendix is part of numerics).
inline std::vector<CheckResult> run_suite(const std::string& name, const Options& o) {
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [suite, checks] : suites()) {
    if (name == "all" ? suite == "appendix" : suite != name) continue;
    found = true;
    for (auto check : checks) out.push_back(check(o));
  }
  if (!found && name != "all") throw std::invalid_argument("unknown suite '" + name + "'");
  return out;
}

}  // namespace fockrep::verify
