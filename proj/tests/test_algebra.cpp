#include <gtest/gtest.h>

#include <map>

#include "fockrep/algebra.hpp"
#include "fockrep/instances.hpp"
#include "fockrep/verify.hpp"

using namespace fockrep;

namespace {

// A Laurent polynomial as exponent -> coefficient, acted on by differential
// operators written out by hand: t^k d^l / dt^l.
using Poly = std::map<std::int64_t, Scalar>;

Poly apply_qp(std::int64_t k, std::int64_t l, const Poly& f) {
  Poly out;
  for (const auto& [n, c] : f) {
    Scalar w(1);
    for (std::int64_t i = 0; i < l; ++i) w *= Scalar(n - i);
    if (!w.is_zero()) out[n - l + k] += c * w;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// x^a y^b with x.t^n = t^(n+1), y.t^n = q^n t^n.
Poly apply_xy(const Scalar& q, std::int64_t a, std::int64_t b, const Poly& f) {
  Poly out;
  for (const auto& [n, c] : f) {
    Scalar w(1);
    for (std::int64_t i = 0; i < (b * n < 0 ? -b * n : b * n); ++i) w *= q;
    if (b * n < 0) w = Scalar(1) / w;
    out[n + a] += c * w;
  }
  return out;
}

}  // namespace

TEST(WeylProduct, MatchesOperatorComposition) {
  for (std::int64_t k = -3; k <= 3; ++k)
    for (std::int64_t l = 0; l <= 3; ++l)
      for (std::int64_t r = -3; r <= 3; ++r)
        for (std::int64_t s = 0; s <= 3; ++s)
          for (std::int64_t n = -8; n <= 8; ++n) {
            const Poly tn{{n, Scalar(1)}};
            Poly composed = apply_qp(k, l, apply_qp(r, s, tn));
            Poly via_product;
            for (const auto& t : detail::WeylCoeffs::product(Scalar(1), k, l, r, s))
              for (const auto& [e, c] : apply_qp(t.a, t.b, tn)) via_product[e] += t.c * c;
            std::erase_if(via_product, [](const auto& kv) { return kv.second.is_zero(); });
            ASSERT_EQ(composed, via_product) << k << " " << l << " " << r << " " << s << " n=" << n;
          }
}

TEST(QuantumTorusProduct, MatchesOperatorComposition) {
  for (const Scalar& q : {Scalar(2), Scalar(3, 2), Scalar(-1)})
    for (std::int64_t a = -2; a <= 2; ++a)
      for (std::int64_t b = -2; b <= 2; ++b)
        for (std::int64_t r = -2; r <= 2; ++r)
          for (std::int64_t s = -2; s <= 2; ++s)
            for (std::int64_t n = -4; n <= 4; ++n) {
              const Poly tn{{n, Scalar(1)}};
              Poly composed = apply_xy(q, a, b, apply_xy(q, r, s, tn));
              Poly via_product;
              for (const auto& t : detail::QuantumTorusCoeffs::product(q, a, b, r, s))
                for (const auto& [e, c] : apply_xy(q, t.a, t.b, tn)) via_product[e] += t.c * c;
              ASSERT_EQ(composed, via_product);
            }
}

TEST(QuantumTorusProduct, DefiningRelation) {
  // yx = q xy
  const Scalar q(3, 2);
  auto yx = detail::QuantumTorusCoeffs::product(q, 0, 1, 1, 0);
  auto xy = detail::QuantumTorusCoeffs::product(q, 1, 0, 0, 1);
  ASSERT_EQ(yx.size(), 1U);
  ASSERT_EQ(xy.size(), 1U);
  EXPECT_EQ(yx[0].a, xy[0].a);
  EXPECT_EQ(yx[0].b, xy[0].b);
  EXPECT_EQ(yx[0].c, q * xy[0].c);
}

TEST(Bracket, ReferenceValues) {
  const Realization W = build(AlgebraKind::witt);
  EXPECT_EQ(bracket(element(BasisSymbol::witt(2)), element(BasisSymbol::witt(-1)), W),
            element(BasisSymbol::witt(1), Scalar(3)));

  const Realization Y = build(AlgebraKind::weyl, 1);
  EXPECT_EQ(bracket(element(BasisSymbol::weyl(1, 1, 0, 1)), element(BasisSymbol::weyl(1, 1, 1, 0)), Y),
            element(BasisSymbol::weyl(1, 1, 0, 0)));

  for (const auto& R : verify::catalog()) {
    verify::Rng rng(7);
    for (int k = 0; k < 20; ++k) {
      const LieElement x = verify::random_element(R, rng);
      EXPECT_TRUE(bracket(x, x, R).empty()) << verify::describe(R);
    }
  }
}

TEST(Bracket, MatrixUnitsOfLoop) {
  const Realization L = build(AlgebraKind::loop, 3);
  // [E_12 t, E_23 t^2] = E_13 t^3, [E_12 t, E_21 t^-1] = E_11 - E_22
  EXPECT_EQ(bracket(element(BasisSymbol::loop(1, 2, 1)), element(BasisSymbol::loop(2, 3, 2)), L),
            element(BasisSymbol::loop(1, 3, 3)));
  LieElement h = element(BasisSymbol::loop(1, 1, 0)) - element(BasisSymbol::loop(2, 2, 0));
  EXPECT_EQ(bracket(element(BasisSymbol::loop(1, 2, 1)), element(BasisSymbol::loop(2, 1, -1)), L), h);
}

TEST(Bracket, RejectsMixedInstances) {
  const Realization W = build(AlgebraKind::witt);
  EXPECT_THROW(bracket(element(BasisSymbol::loop(1, 1, 0)), element(BasisSymbol::witt(1)), W), std::invalid_argument);
}

TEST(Act, ReferenceValues) {
  const Realization W = build(AlgebraKind::witt);
  EXPECT_EQ(act(element(BasisSymbol::witt(2)), Index{0, -1}, W), SparseVector(Index{0, 1}, Scalar(1)));

  const Realization L = build(AlgebraKind::loop, 2);
  EXPECT_EQ(act(element(BasisSymbol::loop(1, 2, 3)), Index{2, 0}, L), SparseVector(Index{1, 3}, Scalar(1)));
  EXPECT_TRUE(act(element(BasisSymbol::loop(1, 2, 3)), Index{1, 0}, L).empty());

  const Realization Y = build(AlgebraKind::weyl, 1);
  EXPECT_TRUE(act(element(BasisSymbol::weyl(1, 1, 0, 1)), Index{1, 0}, Y).empty());
  // p^2 t^3 = 6 t
  EXPECT_EQ(act(element(BasisSymbol::weyl(1, 1, 0, 2)), Index{1, 3}, Y), SparseVector(Index{1, 1}, Scalar(6)));
}

TEST(DualAct, ReferenceValues) {
  const Realization W = build(AlgebraKind::witt);
  // (L_2 . w*_1)(w_-1) = -w*_1(L_2 . w_-1) = -1
  EXPECT_EQ(dual_act(element(BasisSymbol::witt(2)), Index{0, 1}, W), SparseVector(Index{0, -1}, Scalar(-1)));

  const Realization L = build(AlgebraKind::loop, 2);
  EXPECT_EQ(dual_act(element(BasisSymbol::loop(1, 2, 3)), Index{1, 3}, L), SparseVector(Index{2, 0}, Scalar(-1)));
}

TEST(DualAct, PairingIsInvariant) {
  // (x.l)(w) + l(x.w) = 0 for l = w*_beta, w = w_alpha.
  for (const auto& R : verify::catalog()) {
    verify::Rng rng(11);
    const auto window = verify::cut_window(R, 5);
    for (int k = 0; k < 20; ++k) {
      const LieElement x = verify::random_element(R, rng);
      for (const auto& a : window)
        for (const auto& b : window) EXPECT_EQ(dual_act(x, b, R).coeff(a) + act(x, a, R).coeff(b), Scalar(0));
    }
  }
}

TEST(UpCrossings, ReferenceValues) {
  const Realization W = build(AlgebraKind::witt);
  auto c = up_crossings(element(BasisSymbol::witt(-2)), W);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].source, (Index{0, 1}));
  EXPECT_EQ(c[0].target, (Index{0, -1}));
  EXPECT_EQ(c[0].coeff, Scalar(-1));
  EXPECT_TRUE(up_crossings(element(BasisSymbol::witt(2)), W).empty());

  const Realization L = build(AlgebraKind::loop, 2);
  c = up_crossings(element(BasisSymbol::loop(1, 2, -1)), L);
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c[0].source, (Index{2, 0}));
  EXPECT_EQ(c[0].target, (Index{1, -1}));
  EXPECT_EQ(c[0].coeff, Scalar(1));
}

TEST(UpCrossings, CancellingTermsArePruned) {
  const Realization W = build(AlgebraKind::witt);
  LieElement x = element(BasisSymbol::witt(-3));
  EXPECT_EQ(up_crossings(x, W).size(), 2U);
  const Realization L = build(AlgebraKind::loop, 1);
  LieElement y = element(BasisSymbol::loop(1, 1, -2));
  EXPECT_EQ(up_crossings(y, L).size(), 2U);
  EXPECT_TRUE(up_crossings(y - y, L).empty());
}

TEST(UpCrossings, EmptyForGlWithoutCut) {
  const Realization G = build(AlgebraKind::gl, 3);
  for (const auto& s : verify::basis_symbols(G, {0, 0})) EXPECT_TRUE(up_crossings(element(s), G).empty());
  const Realization G2 = build(AlgebraKind::gl, 3, Statistics::bose, 1);
  EXPECT_EQ(up_crossings(element(BasisSymbol::gl(2, 1)), G2).size(), 1U);
  EXPECT_TRUE(up_crossings(element(BasisSymbol::gl(1, 2)), G2).empty());
}

TEST(ActionHomomorphism, HoldsAndDetectsCorruption) {
  const Realization W = build(AlgebraKind::witt);
  std::vector<Index> samples;
  for (int j = -3; j <= 3; ++j) samples.push_back({0, j});
  const LieElement x = element(BasisSymbol::witt(2)), y = element(BasisSymbol::witt(-1));
  EXPECT_TRUE(check_action_homomorphism(x, y, samples, W));
  LieElement wrong = bracket(x, y, W);
  wrong *= Scalar(2);
  EXPECT_FALSE(check_action_homomorphism(x, y, wrong, samples, W));

  const Realization L = build(AlgebraKind::loop, 2);
  const auto window = verify::cut_window(L, 4);
  EXPECT_TRUE(check_action_homomorphism(element(BasisSymbol::loop(1, 2, 1)), element(BasisSymbol::loop(2, 1, -1)),
                                        window, L));
}

TEST(AlgebraSuite, AllChecksPass) {
  for (const auto& r : verify::run_suite("algebra", {})) EXPECT_TRUE(r.passed) << r.name << ": " << r.failure;
}
