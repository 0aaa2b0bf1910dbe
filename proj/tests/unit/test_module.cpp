#include <gtest/gtest.h>

#include <random>

#include "homconf/errors.hpp"
#include "homconf/module.hpp"
#include "random_poly.hpp"

using namespace homconf;

TEST(Endo, IdentityFixes) {
  Element x({del() + 1, Poly(3)});
  EXPECT_EQ(apply_endo(Endomorphism::identity(2), x), x);
}

TEST(Endo, DiagonalScales) {
  Element x = Element::basis(1, 0);
  EXPECT_EQ(apply_endo(Endomorphism::diagonal({2 * del()}), x).coeffs[0], 2 * del());
}

TEST(Endo, Permutation) {
  Endomorphism swap({{Poly(0), Poly(1)}, {Poly(1), Poly(0)}});
  EXPECT_EQ(apply_endo(swap, Element::basis(2, 0)), Element::basis(2, 1));
}

TEST(Endo, RankMismatch) {
  EXPECT_THROW(apply_endo(Endomorphism::identity(2), Element::basis(3, 0)), RankMismatch);
}

TEST(Endo, RejectsLambda) { EXPECT_THROW(Endomorphism({{lam()}}), Error); }

TEST(Endo, DualTransposesAndFlips) {
  Endomorphism e({{Poly(1), del()}, {Poly(0), Poly(2)}});
  Endomorphism d = e.dual();
  EXPECT_EQ(d.at(1, 0), -del());
  EXPECT_EQ(d.at(0, 1), Poly(0));
  EXPECT_EQ(d.dual(), e);
}

TEST(TensorLeg, IdentityUnchanged) {
  Tensor w = Tensor::pure({Element::basis(2, 0, del()), Element::basis(2, 1)});
  EXPECT_EQ(tensor_apply_endo_leg(Endomorphism::identity(2), w, 1), w);
}

TEST(TensorLeg, SecondLegReadsD2) {
  Tensor w = Tensor::pure({Element::basis(1, 0), Element::basis(1, 0)});
  Tensor out = tensor_apply_endo_leg(Endomorphism::diagonal({del()}), w, 1);
  EXPECT_EQ(out.coeff({0, 0}), del(2));
}

TEST(TensorLeg, DiagonalOnFirstLeg) {
  Tensor w = Tensor::pure({Element::basis(2, 1), Element::basis(2, 0)});
  Tensor out = tensor_apply_endo_leg(Endomorphism::diagonal({Poly(1), del()}), w, 0);
  EXPECT_EQ(out.coeff({1, 0}), del(1));
  EXPECT_EQ(out.entries().size(), 1u);
}

TEST(TensorLeg, OutOfRange) {
  Tensor w = Tensor::pure({Element::basis(1, 0), Element::basis(1, 0)});
  EXPECT_THROW(tensor_apply_endo_leg(Endomorphism::identity(1), w, 2), IndexOutOfRange);
}

TEST(Eliminate, Basic) {
  Tensor w({1, 1});
  w.add_to({0, 0}, lam());
  EXPECT_EQ(eliminate_lambda(w, Var::lambda(), -total_partial(2)).coeff({0, 0}), -del(1) - del(2));
  Tensor v({1, 1});
  v.add_to({0, 0}, lam() + del(1));
  EXPECT_EQ(eliminate_lambda(v, Var::lambda(), -total_partial(2)).coeff({0, 0}), -del(2));
}

TEST(Eliminate, TripleSquare) {
  Tensor w({1, 1, 1});
  w.add_to({0, 0, 0}, mu() * mu());
  Poly got = eliminate_lambda(w, Var::mu(), -total_partial(3)).coeff({0, 0, 0});
  EXPECT_EQ(got, total_partial(3).pow(2));
}

TEST(Eliminate, UnknownParameter) {
  Tensor w({1});
  EXPECT_THROW(eliminate_lambda(w, Var::d(), Poly(0)), UnknownParameter);
}

TEST(Tensor, PermuteRenamesLegs) {
  Tensor w = Tensor::pure({Element::basis(2, 0, del()), Element::basis(2, 1)});
  Tensor p = w.permute({1, 0});
  EXPECT_EQ(p.coeff({1, 0}), del(2));
  EXPECT_EQ(p.permute({1, 0}), w);
}

TEST(Form, SkewPasses) {
  EXPECT_TRUE(check_form_skew(BilinearForm({{Poly(0), Poly(0)}, {Poly(0), Poly(0)}}), FreeModule({"L", "E"})).passed());
  BilinearForm w({{Poly(0), Poly(1)}, {Poly(-1), Poly(0)}});
  EXPECT_TRUE(check_form_skew(w, FreeModule({"L", "E"})).passed());
}

TEST(Form, OddEntriesAreSkew) {
  // omega(L,E) = L and omega(E,L) = L: -omega(E,L) at -L gives L back
  BilinearForm w({{Poly(0), lam()}, {lam(), Poly(0)}});
  EXPECT_TRUE(check_form_skew(w, FreeModule({"L", "E"})).passed());
}

TEST(Form, SkewFails) {
  BilinearForm w({{Poly(0), Poly(1)}, {Poly(1), Poly(0)}});
  Report r = check_form_skew(w, FreeModule({"L", "E"}));
  EXPECT_FALSE(r.passed());
  bool found = false;
  for (const auto& c : r.checks()) {
    if (c.tuple == std::vector<std::string>{"E", "L"}) {
      ASSERT_EQ(c.residual.size(), 1u);
      EXPECT_EQ(c.residual[0].value, Poly(2));
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Form, Nondegenerate) {
  BilinearForm w({{Poly(0), Poly(1)}, {Poly(-1), Poly(0)}});
  Report r = check_form_nondegenerate(w, FreeModule({"L", "E"}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks().at(0).note, "det = 1");
  EXPECT_FALSE(check_form_nondegenerate(BilinearForm({{Poly(0)}}), FreeModule({"e"})).passed());
  EXPECT_FALSE(check_form_nondegenerate(BilinearForm({{lam()}}), FreeModule({"e"})).passed());
}

TEST(Form, PairingRule) {
  BilinearForm w({{Poly(0), Poly(1)}, {Poly(-1), Poly(0)}});
  // omega(D v, D^2 w)_t = (-t) t^2
  Poly got = w.pair(Element::basis(2, 0, del()), Element::basis(2, 1, del() * del()), lam());
  EXPECT_EQ(got, -lam().pow(3));
}

// --- properties --------------------------------------------------------------

TEST(ModuleProperties, EndoCompositionIsAction) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto rnd = [&] {
      std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2));
      for (auto& row : m) {
        for (auto& e : row) e = fixtures::random_poly(rng, {Var::d()}, 2, 2);
      }
      return Endomorphism(m);
    };
    Endomorphism e = rnd(), f = rnd();
    Element x({fixtures::random_poly(rng, {Var::d()}, 2), fixtures::random_poly(rng, {Var::d()}, 2)});
    ASSERT_EQ(apply_endo(e.compose(f), x), apply_endo(e, apply_endo(f, x)));
  }
}

TEST(ModuleProperties, DistinctLegsCommute) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Tensor w({2, 2});
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) w.add_to({a, b}, fixtures::random_poly(rng, {Var::leg(1), Var::leg(2)}, 2));
    }
    std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2));
    for (auto& row : m) {
      for (auto& e : row) e = fixtures::random_poly(rng, {Var::d()}, 1, 2);
    }
    Endomorphism e(m);
    ASSERT_EQ(tensor_apply_endo_leg(e, tensor_apply_endo_leg(e, w, 0), 1),
              tensor_apply_endo_leg(e, tensor_apply_endo_leg(e, w, 1), 0));
  }
}

TEST(ModuleProperties, EliminationCommutesWithSpectatorLeg) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    Tensor w({2, 2, 2});
    w.add_to({0, 1, 1}, fixtures::random_poly(rng, {Var::lambda(), Var::leg(1), Var::leg(3)}, 2));
    w.add_to({1, 0, 1}, fixtures::random_poly(rng, {Var::lambda(), Var::leg(2)}, 2));
    Endomorphism e({{del(), Poly(1)}, {Poly(0), Poly(2)}});
    Poly combo = -del(1) - del(2);
    ASSERT_EQ(eliminate_lambda(tensor_apply_endo_leg(e, w, 2), Var::lambda(), combo),
              tensor_apply_endo_leg(e, eliminate_lambda(w, Var::lambda(), combo), 2));
  }
}

TEST(ModuleProperties, SkewInvolution) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2));
    for (auto& row : m) {
      for (auto& e : row) e = fixtures::random_poly(rng, {Var::lambda()}, 2, 2);
    }
    if (i % 2 == 0) {
      // force skewness half of the time
      m[1][0] = -m[0][1].compose({{Var::lambda(), -lam()}});
      m[0][0] = Poly(0);
      m[1][1] = lam();
    }
    std::vector<std::vector<Poly>> t(2, std::vector<Poly>(2));
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t b = 0; b < 2; ++b) t[a][b] = -m[b][a].compose({{Var::lambda(), -lam()}});
    }
    FreeModule mod({"x", "y"});
    ASSERT_EQ(check_form_skew(BilinearForm(m), mod).passed(), check_form_skew(BilinearForm(t), mod).passed());
  }
}
