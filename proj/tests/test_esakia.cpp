#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace rmwb;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->law + " [" + c->witness + "]" : "";
}

Algebra chain_brsa(int n, int f) {
  AlgebraParts p;
  p.name = "C" + std::to_string(n);
  p.profile = Profile::bRSA;
  p.order = chain(n);
  p.f = f;
  return assemble(p);
}

StructuredSpace space(const std::string& name, Flavor fl, Poset order, Bits D, std::optional<int> top) {
  StructuredSpace X;
  X.name = name;
  X.flavor = fl;
  X.order = std::move(order);
  X.D = D;
  X.top = top;
  return X;
}

std::vector<Algebra> all_brsas() {
  std::vector<Algebra> out = corpus::brsas();
  for (auto& B : corpus::bgas()) out.push_back(B);
  for (auto& B : rmwb::small_brsas(5)) out.push_back(B);
  return out;
}

}  // namespace

TEST(DualSpace, ENeg) {
  Algebra B = builtin("E_neg");
  StructuredSpace X = dual_space(B);
  EXPECT_EQ(X.flavor, Flavor::bRS);
  EXPECT_EQ(X.size(), 4);
  std::set<std::string> names(X.order.names().begin(), X.order.names().end());
  EXPECT_EQ(names, (std::set<std::string>{"^a", "^b", "^c", "^f"}));
  EXPECT_EQ(X.D, bit(X.order.index("^c")));
  EXPECT_EQ(X.order.name(*X.top), "^a");
  EXPECT_EQ(dual_points(B)[*X.top], B.order.all());
  EXPECT_TRUE(is_forest(X.order));
  EXPECT_FALSE(X.order.comparable(X.order.index("^c"), X.order.index("^f")));
  EXPECT_EQ(first_failure(validate(X)), "");
}

TEST(DualSpace, SmallCases) {
  StructuredSpace two = dual_space(chain_brsa(2, 1));
  EXPECT_EQ(two.size(), 2);
  EXPECT_EQ(two.D, Bits{0});
  StructuredSpace one = dual_space(chain_brsa(1, 0));
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.D, Bits{0});
}

TEST(DualSpace, PointsAreOracleFilters) {
  for (const auto& B : all_brsas()) {
    EXPECT_EQ(dual_points(B).members, oracle::prime_filters(B, B.profile == Profile::bRSA)) << B.name;
    StructuredSpace X = dual_space(B);
    auto pts = dual_points(B);
    for (int i = 0; i < X.size(); ++i) EXPECT_EQ(has(X.D, i), !has(pts[i], *B.f)) << B.name;
  }
}

TEST(DualAlgebra, Examples) {
  StructuredSpace pt = space("P", Flavor::bRS, chain(1), 0, 0);
  Algebra A = dual_algebra(pt);
  EXPECT_EQ(A.size(), 1);
  EXPECT_EQ(*A.f, A.t());

  Algebra B = builtin("E_neg");
  EXPECT_TRUE(find_isomorphism(B, dual_algebra(dual_space(B))).has_value());

  // Two leaves under a top, both designated. Only four up-sets are nonempty.
  Poset v = poset_from_covers({"l", "r", "T"}, {{"l", "T"}, {"r", "T"}});
  StructuredSpace X = space("V", Flavor::bRS, v, bit(0) | bit(1), 2);
  ASSERT_EQ(first_failure(validate(X)), "");
  Algebra V = dual_algebra(X);
  EXPECT_EQ(V.size(), static_cast<int>(oracle::up_sets(v).size()) - 1);
  EXPECT_EQ(V.size(), 4);
  EXPECT_EQ(V.name_of(*V.f), "{T}");
  for (int a = 0; a < V.size(); ++a) EXPECT_EQ(V.join(a, V.imp(a, *V.f)), V.t());
  EXPECT_EQ(first_failure(validate(V)), "");
}

TEST(DualAlgebra, OperationsAreSetOperations) {
  for (const auto& B : all_brsas()) {
    StructuredSpace X = dual_space(B);
    Algebra A = dual_algebra(X);
    SubsetFamily els = dual_elements(X);
    for (int i = 0; i < A.size(); ++i)
      for (int j = 0; j < A.size(); ++j) {
        Bits u = els[i], w = els[j];
        Bits arrow = 0;
        for (int x = 0; x < X.size(); ++x)
          if ((X.order.up(x) & u & ~w) == 0) arrow |= bit(x);
        ASSERT_EQ(els[A.imp(i, j)], arrow) << B.name;
        ASSERT_EQ(els[A.meet(i, j)], u & w);
        ASSERT_EQ(els[A.join(i, j)], u | w);
      }
    EXPECT_EQ(els[*A.f], X.order.all() & ~X.D);
  }
}

TEST(Sigma, Examples) {
  Algebra one = chain_brsa(1, 0);
  EXPECT_EQ(sigma_iso(one).map, std::vector<Elem>{0});
  Algebra B = builtin("E_neg");
  StructuredSpace X = dual_space(B);
  Morphism s = sigma_iso(B);
  SubsetFamily els = dual_elements(X);
  EXPECT_EQ(els[s.map[*B.f]], X.order.all() & ~X.D);
  std::vector<int> c = counit_iso(X);
  Algebra A = dual_algebra(X);
  SubsetFamily double_pts = dual_points(A);
  int cp = X.order.index("^c");
  Bits want = 0;
  for (int i = 0; i < els.size(); ++i)
    if (has(els[i], cp)) want |= bit(i);
  EXPECT_EQ(double_pts[c[cp]], want);
}

TEST(RoundTrip, AlgebraAndSpaceWithWitnesses) {
  for (const auto& B : all_brsas()) {
    Morphism s = sigma_iso(B);
    Algebra back = dual_algebra(dual_space(B));
    EXPECT_EQ(first_failure(validate_iso(B, back, s.map)), "") << B.name;
    StructuredSpace X = dual_space(B);
    auto c = counit_iso(X);
    StructuredSpace Xb = dual_space(dual_algebra(X));
    EXPECT_EQ(first_failure(validate_space_iso(X, Xb, c)), "") << B.name;
  }
}

TEST(DualHom, IdentitySurjectionAndContravariance) {
  Algebra B = builtin("E_neg");
  auto id = dual_hom(B, B, identity_hom(B));
  EXPECT_EQ(id, identity_map(dual_space(B).size()));

  Algebra C = chain_brsa(2, 1);
  StructuredSpace XB = dual_space(B), XC = dual_space(C);
  auto homs = enumerate_homs(B, C, full_signature(B.profile));
  ASSERT_FALSE(homs.empty());
  for (const auto& h : homs) {
    auto m = dual_hom(B, C, h);
    EXPECT_EQ(first_failure(validate_space_map(XC, XB, m)), "");
    bool onto = true;
    for (int c = 0; c < C.size(); ++c)
      onto = onto && std::find(h.map.begin(), h.map.end(), c) != h.map.end();
    if (!onto) continue;
    for (int x = 0; x < XC.size(); ++x)
      for (int y = 0; y < XC.size(); ++y) EXPECT_EQ(XC.order.leq(x, y), XB.order.leq(m[x], m[y]));
  }

  auto endo = enumerate_homs(B, B, full_signature(B.profile));
  for (const auto& h : endo)
    for (const auto& g : homs)
      EXPECT_EQ(dual_hom(B, C, compose(g, h)), compose_maps(dual_hom(B, B, h), dual_hom(B, C, g)));
}

TEST(DualHom, NaturalityOfSigma) {
  Algebra B = builtin("E_neg");
  auto endo = enumerate_homs(B, B, full_signature(B.profile));
  Morphism s = sigma_iso(B);
  StructuredSpace X = dual_space(B);
  for (const auto& h : endo) {
    Morphism hh = dual_space_map(X, X, dual_hom(B, B, h));
    for (int a = 0; a < B.size(); ++a) EXPECT_EQ(s.map[h.map[a]], hh.map[s.map[a]]);
  }
}

TEST(DualSpaceMap, ValidatedAsAlgebraHom) {
  Algebra B = builtin("E_neg"), C = chain_brsa(2, 1);
  StructuredSpace XB = dual_space(B), XC = dual_space(C);
  for (const auto& h : enumerate_homs(B, C, full_signature(B.profile))) {
    auto m = dual_hom(B, C, h);
    Morphism back = dual_space_map(XC, XB, m);
    Algebra AB = dual_algebra(XB), AC = dual_algebra(XC);
    EXPECT_EQ(first_failure(validate_hom(AB, AC, back.map, full_signature(AB.profile))), "");
  }
}

TEST(Nucleus, Examples) {
  StructuredSpace X = dual_space(chain_brsa(3, 2));
  ASSERT_EQ(X.D, Bits{0});
  auto rel = nucleus_relation(X);
  for (int x = 0; x < X.size(); ++x) EXPECT_EQ(rel[x], X.order.up(x));

  Algebra Bg = with_bounds(builtin("E_neg"));
  ASSERT_EQ(Bg.profile, Profile::bGA);
  StructuredSpace G = dual_space(Bg);
  EXPECT_EQ(G.size(), 3);
  auto le = nucleus_relation(G);
  int c = G.order.index("^c"), f = G.order.index("^f");
  for (int x = 0; x < G.size(); ++x)
    for (int y = 0; y < G.size(); ++y) EXPECT_EQ(has(le[x], y), G.order.leq(x, y) && !(x == c && y == c));
  auto R = accessibility_relation(Bg);
  EXPECT_TRUE(has(R[f], f));
  EXPECT_FALSE(has(R[c], c));
}

TEST(Nucleus, NuclearChecksOnEveryDerivedAlgebra) {
  for (const auto& B : all_brsas()) EXPECT_EQ(first_failure(nuclear_checks(B)), "") << B.name;
}
