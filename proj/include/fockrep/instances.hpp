#pragma once

// Catalog of realizations: gl_N on K^N, and N x N matrices over Laurent
// polynomials, the quantum torus and the localized Weyl algebra acting on
// columns of Laurent polynomials, plus the Witt algebra acting on K[t, 1/t].
//
// Every coefficient monomial acts on t^n as a single term
// t^n -> weight(n) t^(n + shift), which makes rows and crossings closed-form.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockrep/realization.hpp"

namespace fockrep {

namespace detail {

struct CoeffTerm {
  std::int64_t a;
  std::int64_t b;
  Scalar c;
};

/// gl_N(K): the coefficient ring is K itself and the module is K^N.
struct ScalarCoeffs {
  static constexpr AlgebraKind kind = AlgebraKind::gl;
  static constexpr bool laurent = false;
  static void validate(std::int64_t a, std::int64_t b) {
    if (a != 0 || b != 0) throw std::invalid_argument("gl symbols carry no exponents");
  }
  static std::int64_t shift(std::int64_t, std::int64_t) { return 0; }
  static Scalar weight(const Scalar&, std::int64_t, std::int64_t, std::int64_t) { return Scalar(1); }
  static std::vector<CoeffTerm> product(const Scalar&, std::int64_t, std::int64_t, std::int64_t, std::int64_t) {
    return {{0, 0, Scalar(1)}};
  }
};

/// K[t, 1/t]: t^a t^r = t^(a+r).
struct LaurentCoeffs {
  static constexpr AlgebraKind kind = AlgebraKind::loop;
  static constexpr bool laurent = true;
  static void validate(std::int64_t, std::int64_t b) {
    if (b != 0) throw std::invalid_argument("loop symbols carry a single exponent");
  }
  static std::int64_t shift(std::int64_t a, std::int64_t) { return a; }
  static Scalar weight(const Scalar&, std::int64_t, std::int64_t, std::int64_t) { return Scalar(1); }
  static std::vector<CoeffTerm> product(const Scalar&, std::int64_t a, std::int64_t, std::int64_t r, std::int64_t) {
    return {{a + r, 0, Scalar(1)}};
  }
};

/// Quantum torus yx = qxy on K[t, 1/t] via x.t^l = t^(l+1), y.t^l = q^l t^l.
/// Monomials x^a y^b; (x^a y^b)(x^r y^s) = q^(b r) x^(a+r) y^(b+s).
struct QuantumTorusCoeffs {
  static constexpr AlgebraKind kind = AlgebraKind::qtorus;
  static constexpr bool laurent = true;
  static void validate(std::int64_t, std::int64_t) {}
  static std::int64_t shift(std::int64_t a, std::int64_t) { return a; }
  static Scalar weight(const Scalar& q, std::int64_t, std::int64_t b, std::int64_t n) { return pow(q, b * n); }
  static std::vector<CoeffTerm> product(const Scalar& q, std::int64_t a, std::int64_t b, std::int64_t r,
                                        std::int64_t s) {
    return {{a + r, b + s, pow(q, b * r)}};
  }
};

/// Localized first Weyl algebra with [p, q] = 1, p = d/dt, q = t.
/// Monomials q^k p^l (l >= 0);
/// q^k p^l q^r p^s = sum_t binom(l, t) (r)_t q^(k+r-t) p^(l+s-t).
struct WeylCoeffs {
  static constexpr AlgebraKind kind = AlgebraKind::weyl;
  static constexpr bool laurent = true;
  static void validate(std::int64_t, std::int64_t l) {
    if (l < 0) throw std::invalid_argument("weyl symbols need a non-negative p exponent");
  }
  static std::int64_t shift(std::int64_t k, std::int64_t l) { return k - l; }
  static Scalar weight(const Scalar&, std::int64_t, std::int64_t l, std::int64_t n) {
    return Scalar(falling_factorial(Integer(n), l));
  }
  static std::vector<CoeffTerm> product(const Scalar&, std::int64_t k, std::int64_t l, std::int64_t r,
                                        std::int64_t s) {
    std::vector<CoeffTerm> out;
    for (std::int64_t t = 0; t <= l; ++t) {
      Scalar c = binomial(Integer(l), t) * Scalar(falling_factorial(Integer(r), t));
      if (!c.is_zero()) out.push_back({k + r - t, l + s - t, c});
    }
    return out;
  }
};

template <class Coeffs>
class MatrixModel final : public InstanceModel {
 public:
  MatrixModel(int n, Scalar q) : n_(n), q_(std::move(q)) {}

  [[nodiscard]] AlgebraKind kind() const override { return Coeffs::kind; }

  void validate(const BasisSymbol& s) const override {
    if (s.kind != Coeffs::kind) throw std::invalid_argument("symbol belongs to another algebra");
    if (s.i < 1 || s.i > n_ || s.j < 1 || s.j > n_)
      throw std::invalid_argument("matrix subscript out of range 1.." + std::to_string(n_));
    Coeffs::validate(s.a, s.b);
  }

  [[nodiscard]] bool valid_index(const Index& alpha) const override {
    return alpha.row >= 1 && alpha.row <= n_ && (Coeffs::laurent || alpha.exp == 0);
  }

  // [E_ij u, E_kl v] = delta_jk E_il (u v) - delta_li E_kj (v u)
  [[nodiscard]] LieElement bracket(const BasisSymbol& x, const BasisSymbol& y) const override {
    LieElement out;
    if (x.j == y.i)
      for (const auto& t : Coeffs::product(q_, x.a, x.b, y.a, y.b)) out.add(make(x.i, y.j, t.a, t.b), t.c);
    if (y.j == x.i)
      for (const auto& t : Coeffs::product(q_, y.a, y.b, x.a, x.b)) out.add(make(y.i, x.j, t.a, t.b), -t.c);
    return out;
  }

  [[nodiscard]] SparseVector act(const BasisSymbol& x, const Index& alpha) const override {
    if (alpha.row != x.j) return {};
    return {Index{x.i, alpha.exp + Coeffs::shift(x.a, x.b)}, Coeffs::weight(q_, x.a, x.b, alpha.exp)};
  }

  [[nodiscard]] SparseVector row(const BasisSymbol& x, const Index& beta) const override {
    if (beta.row != x.i) return {};
    std::int64_t n = beta.exp - Coeffs::shift(x.a, x.b);
    return {Index{x.j, n}, Coeffs::weight(q_, x.a, x.b, n)};
  }

  // Laurent instances: J = {1..N} x {n >= cut}. gl: J = {1..cut}.
  [[nodiscard]] bool in_cut(const Index& alpha, std::int64_t cut) const override {
    return Coeffs::laurent ? alpha.exp >= cut : alpha.row <= cut;
  }

  [[nodiscard]] std::vector<Crossing> up_crossings(const BasisSymbol& x, std::int64_t cut) const override {
    std::vector<Crossing> out;
    if constexpr (Coeffs::laurent) {
      // n >= cut and n + shift < cut
      const std::int64_t d = Coeffs::shift(x.a, x.b);
      for (std::int64_t n = cut; n < cut - d; ++n) {
        Scalar w = Coeffs::weight(q_, x.a, x.b, n);
        if (!w.is_zero()) out.push_back({Index{x.j, n}, Index{x.i, n + d}, w});
      }
    } else {
      if (x.j <= cut && x.i > cut) out.push_back({Index{x.j, 0}, Index{x.i, 0}, Scalar(1)});
    }
    return out;
  }

  [[nodiscard]] std::vector<Index> window(std::int64_t lo, std::int64_t hi) const override {
    std::vector<Index> out;
    if constexpr (Coeffs::laurent) {
      for (std::int64_t e = lo; e <= hi; ++e)
        for (int r = 1; r <= n_; ++r) out.push_back({r, e});
    } else {
      for (int r = 1; r <= n_; ++r) out.push_back({r, 0});
    }
    return out;
  }

  [[nodiscard]] std::string render_index(const Index& alpha) const override {
    if constexpr (Coeffs::laurent) return "(" + std::to_string(alpha.row) + "," + std::to_string(alpha.exp) + ")";
    return std::to_string(alpha.row);
  }

  [[nodiscard]] std::string describe_cut(std::int64_t cut) const override {
    std::string rows = "{1.." + std::to_string(n_) + "}";
    if constexpr (Coeffs::laurent) return rows + "x{n>=" + std::to_string(cut) + "}";
    if (cut <= 0) return "{}";
    return "{1.." + std::to_string(cut) + "}";
  }

 private:
  static BasisSymbol make(int i, int j, std::int64_t a, std::int64_t b) { return {Coeffs::kind, i, j, a, b}; }

  int n_;
  Scalar q_;
};

/// Witt algebra [L_m, L_n] = (m - n) L_(m+n) acting by L_m.t^j = -j t^(m+j).
class WittModel final : public InstanceModel {
 public:
  [[nodiscard]] AlgebraKind kind() const override { return AlgebraKind::witt; }

  void validate(const BasisSymbol& s) const override {
    if (s.kind != AlgebraKind::witt || s.i != 0 || s.j != 0 || s.b != 0)
      throw std::invalid_argument("malformed Witt symbol");
  }

  [[nodiscard]] bool valid_index(const Index& alpha) const override { return alpha.row == 0; }

  [[nodiscard]] LieElement bracket(const BasisSymbol& x, const BasisSymbol& y) const override {
    return {BasisSymbol::witt(x.a + y.a), Scalar(x.a - y.a)};
  }

  [[nodiscard]] SparseVector act(const BasisSymbol& x, const Index& alpha) const override {
    return {Index{0, alpha.exp + x.a}, Scalar(-alpha.exp)};
  }

  [[nodiscard]] SparseVector row(const BasisSymbol& x, const Index& beta) const override {
    std::int64_t j = beta.exp - x.a;
    return {Index{0, j}, Scalar(-j)};
  }

  [[nodiscard]] bool in_cut(const Index& alpha, std::int64_t cut) const override { return alpha.exp >= cut; }

  [[nodiscard]] std::vector<Crossing> up_crossings(const BasisSymbol& x, std::int64_t cut) const override {
    std::vector<Crossing> out;
    for (std::int64_t j = cut; j < cut - x.a; ++j)
      if (j != 0) out.push_back({Index{0, j}, Index{0, j + x.a}, Scalar(-j)});
    return out;
  }

  [[nodiscard]] std::vector<Index> window(std::int64_t lo, std::int64_t hi) const override {
    std::vector<Index> out;
    for (std::int64_t e = lo; e <= hi; ++e) out.push_back({0, e});
    return out;
  }

  [[nodiscard]] std::string render_index(const Index& alpha) const override { return std::to_string(alpha.exp); }

  [[nodiscard]] std::string describe_cut(std::int64_t cut) const override {
    return "{n>=" + std::to_string(cut) + "}";
  }
};

}  // namespace detail

/// Validates cfg and wires up the matching model. Throws std::invalid_argument.
inline Realization build(const InstanceConfig& cfg) {
  if (cfg.kind != AlgebraKind::witt && cfg.n < 1) throw std::invalid_argument("matrix size N must be at least 1");
  std::shared_ptr<const InstanceModel> model;
  switch (cfg.kind) {
    case AlgebraKind::gl:
      if (cfg.j_cut < 0 || cfg.j_cut > cfg.n)
        throw std::invalid_argument("gl cut must lie in 0..N (J = {1..cut})");
      model = std::make_shared<detail::MatrixModel<detail::ScalarCoeffs>>(cfg.n, Scalar(1));
      break;
    case AlgebraKind::loop:
      model = std::make_shared<detail::MatrixModel<detail::LaurentCoeffs>>(cfg.n, Scalar(1));
      break;
    case AlgebraKind::qtorus:
      if (cfg.q.is_zero()) throw std::invalid_argument("quantum torus parameter q must be nonzero");
      model = std::make_shared<detail::MatrixModel<detail::QuantumTorusCoeffs>>(cfg.n, cfg.q);
      break;
    case AlgebraKind::weyl:
      model = std::make_shared<detail::MatrixModel<detail::WeylCoeffs>>(cfg.n, Scalar(1));
      break;
    case AlgebraKind::witt:
      model = std::make_shared<detail::WittModel>();
      break;
  }
  return {std::move(model), cfg};
}

inline Realization build(AlgebraKind kind, int n = 1, Statistics st = Statistics::bose, std::int64_t j_cut = 0,
                         Scalar q = Scalar(1)) {
  return build(InstanceConfig{kind, n, std::move(q), st, j_cut});
}

}  // namespace fockrep
