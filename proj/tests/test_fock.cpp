#include <gtest/gtest.h>

#include "fockrep/cocycle.hpp"
#include "fockrep/fock.hpp"
#include "fockrep/instances.hpp"
#include "fockrep/oracles.hpp"
#include "fockrep/verify.hpp"

using namespace fockrep;

namespace {

const Realization bose_witt = build(AlgebraKind::witt, 1, Statistics::bose);
const Realization fermi_witt = build(AlgebraKind::witt, 1, Statistics::fermi);

FockVector mono(std::vector<Index> u, std::vector<Index> s, Scalar c = Scalar(1)) {
  return {FockMonomial{std::move(u), std::move(s)}, c};
}

Index w(std::int64_t n) { return {0, n}; }

}  // namespace

TEST(ApplyLetter, ReferenceValues) {
  // 1 in J (Witt, J = {n >= 0}): w*_1 creates.
  EXPECT_EQ(apply_letter(Letter::star(w(1)), vacuum(), bose_witt), mono({}, {w(1)}));

  // 1 outside J: use the cut n >= 2.
  const Realization B2 = build(AlgebraKind::witt, 1, Statistics::bose, 2);
  FockVector v = apply_letters(LetterSeq{Letter::w(w(1)), Letter::w(w(1))}, vacuum(), B2);
  EXPECT_EQ(v, mono({w(1), w(1)}, {}));
  EXPECT_EQ(apply_letter(Letter::star(w(1)), v, B2), mono({w(1)}, {}, Scalar(2)));

  // Fermionic w_1 (1 in J) on w*_1 v0 gives +v0 under the anticommutation relations.
  EXPECT_EQ(apply_letter(Letter::w(w(1)), mono({}, {w(1)}), fermi_witt), vacuum());
}

TEST(ApplyLetter, AgreesWithRewritingOracle) {
  for (const auto& R : verify::catalog()) {
    verify::Rng rng(3);
    const auto window = verify::cut_window(R, 3);
    for (int k = 0; k < 100; ++k) {
      const FockVector v = verify::random_fock_vector(R, rng, 3);
      const Letter l{rng.pick(window), rng.coin()};
      WordExpr expr;
      for (const auto& [m, c] : v) {
        LetterSeq seq{l};
        const auto tail = m.letters();
        seq.insert(seq.end(), tail.begin(), tail.end());
        expr.add(seq, c);
      }
      EXPECT_EQ(apply_letter(l, v, R), oracle::vacuum_reduce(expr, R)) << verify::describe(R);
    }
  }
}

TEST(ApplyLetter, FermionicCreationTwiceIsZero) {
  EXPECT_TRUE(apply_letters(LetterSeq{Letter::star(w(2)), Letter::star(w(2))}, vacuum(), fermi_witt).empty());
  EXPECT_FALSE(apply_letters(LetterSeq{Letter::star(w(2)), Letter::star(w(2))}, vacuum(), bose_witt).empty());
}

TEST(ApplyLetter, CreationOrderSign) {
  // w_-2 w_-1 v0 vs w_-1 w_-2 v0
  FockVector a = apply_letters(LetterSeq{Letter::w(w(-1)), Letter::w(w(-2))}, vacuum(), fermi_witt);
  EXPECT_EQ(a, mono({w(-2), w(-1)}, {}, Scalar(-1)));
  FockVector b = apply_letters(LetterSeq{Letter::star(w(0)), Letter::w(w(-1))}, vacuum(), fermi_witt);
  EXPECT_EQ(b, mono({w(-1)}, {w(0)}, Scalar(-1)));
}

TEST(FxVacuum, ReferenceValues) {
  EXPECT_EQ(fx_vacuum(element(BasisSymbol::witt(-2)), bose_witt), mono({w(-1)}, {w(1)}, Scalar(-1)));
  EXPECT_TRUE(fx_vacuum(element(BasisSymbol::witt(2)), bose_witt).empty());
  const Realization L = build(AlgebraKind::loop, 2, Statistics::fermi);
  EXPECT_EQ(fx_vacuum(element(BasisSymbol::loop(1, 2, -1)), L), mono({Index{1, -1}}, {Index{2, 0}}));
}

TEST(ApplyFx, ReferenceValues) {
  const Realization G = build(AlgebraKind::gl, 2, Statistics::bose);
  EXPECT_EQ(apply_fx(element(BasisSymbol::gl(1, 2)), mono({Index{2, 0}}, {}), G), mono({Index{1, 0}}, {}));
  for (const auto& R : verify::catalog()) {
    verify::Rng rng(5);
    for (int k = 0; k < 10; ++k) {
      const LieElement x = verify::random_element(R, rng);
      EXPECT_EQ(apply_fx(x, vacuum(), R), fx_vacuum(x, R));
    }
  }
}

TEST(ApplyFx, WittRaisingOperatorOnTwoParticleState) {
  // The reference value comes from the truncated normal-ordered sum.
  for (const auto* R : {&bose_witt, &fermi_witt}) {
    const FockVector v = mono({w(-1)}, {w(1)});
    const LieElement x = element(BasisSymbol::witt(2)), y = element(BasisSymbol::witt(-2));
    const FockVector fx = apply_fx(x, v, *R);
    EXPECT_EQ(fx, oracle::apply_fx_truncated(x, v, *R));
    // L_2 sends w_-1 to w_1 and w*_1 to 3 w*_-1 (the latter leaves J and annihilates).
    EXPECT_FALSE(fx.empty());
    std::vector<FockVector> samples{v};
    EXPECT_TRUE(centrality_check(x, y, samples, *R));
  }
}

TEST(Kappa, ReferenceValues) {
  EXPECT_EQ(kappa(vacuum()), Scalar(1));
  EXPECT_EQ(kappa(mono({w(-1)}, {w(1)})), Scalar(0));
  EXPECT_EQ(kappa(Scalar(3) * vacuum() + mono({w(-1)}, {}, Scalar(2))), Scalar(3));
}

TEST(JDegree, ReferenceValues) {
  EXPECT_EQ(j_degree(FockMonomial{}), 0);
  EXPECT_EQ(j_degree(FockMonomial{{Index{1, -1}}, {Index{2, 0}}}), 0);
  EXPECT_EQ(j_degree(FockMonomial{{Index{1, -2}, Index{1, -1}}, {}}), 2);
}

TEST(EnumerateBasis, ReferenceValues) {
  const Realization F = build(AlgebraKind::gl, 3, Statistics::fermi);
  const Realization B = build(AlgebraKind::gl, 3, Statistics::bose);
  const auto window = F.model().window(0, 0);
  EXPECT_EQ(enumerate_basis(F, window, 2, 2).size(), 3U);
  EXPECT_EQ(enumerate_basis(B, window, 2, 2).size(), 6U);
  for (const auto* R : {&F, &B}) {
    auto zero = enumerate_basis(*R, window, 0, 0);
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_EQ(zero[0], FockMonomial{});
  }
}

TEST(EnumerateBasis, EveryMonomialIsCanonical) {
  for (const auto& R : verify::catalog())
    for (const auto& m : enumerate_basis(R, verify::cut_window(R, 2), 0, 3)) {
      EXPECT_TRUE(is_fock_monomial(m, R));
      EXPECT_EQ(apply_letters(m.letters(), vacuum(), R), FockVector(m, Scalar(1)));
    }
}

TEST(IsFockMonomial, RejectsBadMonomials) {
  EXPECT_FALSE(is_fock_monomial(FockMonomial{{w(1)}, {}}, bose_witt));  // 1 in J cannot be unstarred
  EXPECT_FALSE(is_fock_monomial(FockMonomial{{}, {w(-1)}}, bose_witt));
  EXPECT_FALSE(is_fock_monomial(FockMonomial{{w(-1), w(-2)}, {}}, bose_witt));  // unsorted
  EXPECT_FALSE(is_fock_monomial(FockMonomial{{w(-1), w(-1)}, {}}, fermi_witt));
  EXPECT_TRUE(is_fock_monomial(FockMonomial{{w(-1), w(-1)}, {}}, bose_witt));
}

TEST(FockSuite, AllChecksPass) {
  for (const auto& r : verify::run_suite("fock", {})) EXPECT_TRUE(r.passed) << r.name << ": " << r.failure;
}

TEST(FockSuite, ModuleLawUnderAlternativeCut) {
  for (auto st : {Statistics::bose, Statistics::fermi})
    for (const auto& R : {build(AlgebraKind::witt, 1, st, 1), build(AlgebraKind::loop, 2, st, 1),
                          build(AlgebraKind::weyl, 1, st, -1)}) {
      verify::Rng rng(17);
      for (int k = 0; k < 30; ++k) {
        const LieElement x = verify::random_element(R, rng, 2), y = verify::random_element(R, rng, 2);
        std::vector<FockVector> samples{verify::random_fock_vector(R, rng, 3), vacuum()};
        EXPECT_TRUE(centrality_check(x, y, samples, R)) << verify::describe(R);
      }
    }
}
