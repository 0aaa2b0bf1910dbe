#include <gtest/gtest.h>

#include <random>

#include "certified.hpp"
#include "fixtures.hpp"
#include "homconf/axioms.hpp"
#include "homconf/errors.hpp"
#include "homconf/io.hpp"
#include "random_algebra.hpp"

using namespace homconf;

namespace {

const char* kRankTwoBracket = R"(# bracket of the rank-two example
[algebra brk]
kind lie
basis L E
[L, L] = (D+2*L)*E
alpha L = 1*L
alpha E = 1*E

[form w]
algebra brk
w(L, E) = 1
w(E, L) = -1

[tasks]
check brk skew jacobi
)";

std::string error_of(const std::string& src) {
  try {
    parse_definition(src);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParsePoly, Examples) {
  EXPECT_EQ(parse_poly("D + 2*L"), del() + 2 * lam());
  EXPECT_TRUE(parse_poly("0").is_zero());
  EXPECT_EQ(parse_poly("(L + D)^2 - L^2 - 2*L*D"), del() * del());
}

TEST(ParsePoly, PrecedenceAndRationals) {
  EXPECT_EQ(parse_poly("-L^2"), -(lam() * lam()));
  EXPECT_EQ(parse_poly("2*L + 3*D^2*M"), 2 * lam() + 3 * del() * del() * mu());
  EXPECT_EQ(parse_poly("-3/4*D1 + D2/2"), Poly(Rational(-3, 4)) * del(1) + Poly(Rational(1, 2)) * del(2));
  EXPECT_EQ(parse_poly("  ( L ) * ( D - 1 ) "), lam() * del() - lam());
}

TEST(ParsePoly, UnicodeAliases) {
  EXPECT_EQ(parse_poly("∂ + 2*λ"), del() + 2 * lam());
  EXPECT_EQ(parse_poly("μ − ∂₁"), mu() - del(1));
}

TEST(ParsePoly, Errors) {
  EXPECT_THROW(parse_poly(""), ParseError);
  EXPECT_THROW(parse_poly("L +"), ParseError);
  EXPECT_THROW(parse_poly("(L"), ParseError);
  EXPECT_THROW(parse_poly("1/0"), ParseError);
  try {
    parse_poly("L + Q", 3, 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 5);
    EXPECT_NE(std::string(e.what()).find("unknown variable Q"), std::string::npos);
  }
}

TEST(ParsePoly, RoundTripRandom) {
  std::mt19937_64 rng(21);
  for (int s = 0; s < 300; ++s) {
    Poly p = fixtures::random_poly(rng, {Var::lambda(), Var::mu(), Var::d(), Var::leg(1), Var::leg(3)}, 3, 5);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
  }
}

TEST(Definition, RankTwoBracket) {
  DefinitionFile f = parse_definition(kRankTwoBracket);
  ASSERT_EQ(f.algebras.size(), 1u);
  const Algebra& a = f.algebra("brk");
  EXPECT_EQ(a.kind, Kind::Lie);
  EXPECT_EQ(a.product.at(0, 0).coeffs[1], del() + 2 * lam());
  EXPECT_TRUE(a.product.at(0, 1).is_zero());
  EXPECT_TRUE(a.alpha.is_identity());
  EXPECT_TRUE(check_skew(a).passed());
  EXPECT_EQ(f.form("w").form.at(1, 0), Poly(-1));
  ASSERT_EQ(f.tasks.size(), 1u);
  EXPECT_EQ(f.tasks[0].verb, "check");
  EXPECT_EQ(f.tasks[0].args, (std::vector<std::string>{"brk", "skew", "jacobi"}));
}

TEST(Definition, InlineAbelianRankOne) {
  DefinitionFile f = parse_definition("[algebra X] rank 1 basis e\n");
  const Algebra& a = f.algebra("X");
  EXPECT_EQ(a.rank(), 1u);
  EXPECT_TRUE(a.product.is_zero());
  EXPECT_TRUE(a.alpha.is_identity());
}

TEST(Definition, UndeclaredLabelNamesLabelAndLine) {
  std::string err = error_of("[algebra g]\nkind lie\nbasis e1 e2\n[e1,e2] = e3\n");
  EXPECT_NE(err.find("e3"), std::string::npos) << err;
  EXPECT_EQ(err.rfind("4:", 0), 0u) << err;
  err = error_of("[algebra g]\nbasis e1 e2\ne1 . e3 = e1\n");
  EXPECT_NE(err.find("e3"), std::string::npos) << err;
}

TEST(Definition, Errors) {
  EXPECT_NE(error_of("[algebra g]\nbasis a\na . a = a\na . a = 2*a\n").find("duplicate product"), std::string::npos);
  EXPECT_NE(error_of("[algebra g]\nrank 2\nbasis a\n").find("rank mismatch"), std::string::npos);
  EXPECT_NE(error_of("[algebra g]\nbasis a a\n").find("duplicate basis label"), std::string::npos);
  EXPECT_NE(error_of("[algebra g]\nbasis a\na . a = Q*a\n").find("unknown variable Q"), std::string::npos);
  EXPECT_NE(error_of("[form w]\nalgebra nope\n").find("undeclared algebra nope"), std::string::npos);
  EXPECT_NE(error_of("[algebra g]\nkind lie\nbasis a\na . a = a\n").find("kind"), std::string::npos);
  EXPECT_NE(error_of("[widget g]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(error_of("a . b = c\n").find("section header"), std::string::npos);
}

TEST(Definition, UnicodeProductLines) {
  DefinitionFile f = parse_definition("[algebra g]\nbasis a b\na · b = λ*b\n");
  EXPECT_EQ(f.algebra("g").product.at(0, 1).coeffs[1], lam());
}

TEST(Definition, LabelsSharingVariableNames) {
  DefinitionFile f = parse_definition("[algebra g]\nkind lie\nbasis L E\n[L, E] = L*L - (D + 1)*E\n");
  const Element& x = f.algebra("g").product.at(0, 1);
  EXPECT_EQ(x.coeffs[0], lam());
  EXPECT_EQ(x.coeffs[1], -del() - 1);
}

TEST(Definition, AllSectionsRoundTrip) {
  DefinitionFile f;
  Algebra a = fixtures::line_action(lam() * lam() - 1);
  a.alpha = Endomorphism({{1, del()}, {0, 1}});
  f.algebras.push_back(a);
  Algebra d = a;
  d.name = "dual";
  d.module = a.module.dual();
  f.algebras.push_back(d);
  f.forms.push_back({"w", "line", BilinearForm({{0, lam() + 1}, {lam() - 1, 0}})});
  Representation reg = regular_representation(fixtures::line_action());
  f.reps.push_back({"line", reg});
  Tensor t({2, 2});
  t.add_to({0, 1}, del(1) - Poly(Rational(3, 2)) * del(2));
  f.tensors.push_back({"r", "line", t});
  f.coalgebras.push_back(dual_coalgebra_from_algebra(a));
  f.coalgebras.back().name = "c";
  LscMatchedPair p = split_lsc(semidirect_lsc(fixtures::line_action(), reg), 2);
  std::mt19937_64 rng(2);
  f.pairs.push_back({"p", Kind::LeftSymmetric, "line", "dual",
                     {fixtures::random_table(rng, 2, 2, 2, 2), p.ra, p.lb, p.rb}});
  f.pairs.push_back({"q", Kind::Lie, "line", "dual",
                     {fixtures::random_table(rng, 2, 2, 2, 2), fixtures::random_table(rng, 2, 2, 2, 1)}});
  f.tasks.push_back({"check", {"line", "left-symmetry"}, 0});
  f.tasks.push_back({"bialgebra", {"line", "dual"}, 0});
  std::string text = print_definition(f);
  DefinitionFile g = parse_definition(text);
  EXPECT_TRUE(same_definition(f, g)) << text;
  EXPECT_EQ(print_definition(g), text);
}

TEST(Definition, RandomTablesRoundTrip) {
  std::mt19937_64 rng(22);
  for (int s = 0; s < 100; ++s) {
    std::size_t n = 1 + s % 3;
    DefinitionFile f;
    Algebra a = fixtures::zero_algebra(n, s % 2 ? Kind::Lie : Kind::LeftSymmetric);
    a.name = "g";
    a.product = fixtures::random_table(rng, n, n, n, 2);
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (auto& row : m) {
      for (auto& c : row) c = fixtures::random_poly(rng, {Var::d()}, 1, 1);
    }
    a.alpha = Endomorphism(m);
    f.algebras.push_back(a);
    DefinitionFile g = parse_definition(print_definition(f));
    EXPECT_TRUE(same_definition(f, g)) << print_definition(f);
  }
}

TEST(Definition, DualLabelsWithStars) {
  DefinitionFile f;
  Algebra a = fixtures::unit_rank_one();
  a.module = a.module.dual().disjoint_sum(FreeModule({"e"}));
  a.product = StructureTable(2);
  a.product.set(0, 1, 0, 2 * lam());
  a.product.set(1, 0, 1, Poly(-1));
  a.alpha = Endomorphism::identity(2);
  f.algebras.push_back(a);
  DefinitionFile g = parse_definition(print_definition(f));
  EXPECT_TRUE(same_definition(f, g)) << print_definition(f);
}
