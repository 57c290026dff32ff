#include <gtest/gtest.h>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace rmwb;

namespace {

std::string first_failure(const Report& r) {
  const Check* c = r.first_failure();
  return c ? c->law + " [" + c->witness + "]" : "";
}

Algebra bounded(const std::string& name) {
  Algebra A = builtin(name);
  return A.profile == Profile::SugiharaBounded ? A : with_bounds(A);
}

Bits up_of(const Algebra& A, const char* a) { return A.order.up(A.elem(a)); }

RelevantSpace one_point() {
  RelevantSpace X;
  X.name = "P";
  X.order = chain(1);
  X.R = {bit(0)};
  X.prime = {0};
  X.I = bit(0);
  return X;
}

}  // namespace

TEST(Urquhart, Examples) {
  RelevantSpace X2 = urquhart_dual(bounded("S2"));
  ASSERT_EQ(X2.size(), 1);
  EXPECT_EQ(X2.I, bit(0));
  EXPECT_TRUE(X2.r(0, 0, 0));
  EXPECT_EQ(X2.prime[0], 0);
  EXPECT_EQ(X2.order.name(0), "^1");

  Algebra Eb = builtin("E_bot");
  RelevantSpace XE = urquhart_dual(Eb);
  EXPECT_EQ(XE.size(), 5);
  auto iso = find_relevant_isomorphism(reflect_space(dw_dual(Eb)), XE);
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ(first_failure(validate_relevant_iso(reflect_space(dw_dual(Eb)), XE, *iso)), "");

  Algebra S4 = bounded("S4");
  Bits u1 = up_of(S4, "1");
  EXPECT_EQ(filter_prime(S4, u1), u1);
  RelevantSpace X4 = urquhart_dual(S4);
  int p = X4.order.index("^1");
  EXPECT_EQ(X4.prime[p], p);
}

TEST(Urquhart, PointsRelationAndLaws) {
  for (const auto& A : corpus::bounded_sugihara()) {
    RelevantSpace X = urquhart_dual(A);
    EXPECT_EQ(first_failure(validate(X)), "") << A.name;
    auto pts = oracle::prime_filters(A, false);
    ASSERT_EQ(X.size(), static_cast<int>(pts.size())) << A.name;
    SubsetFamily fam = prime_filters(A, false);
    for (int i = 0; i < X.size(); ++i)
      for (int j = 0; j < X.size(); ++j) {
        Bits p = oracle::complex_product(A, fam[i], fam[j]);
        for (int k = 0; k < X.size(); ++k) EXPECT_EQ(X.r(i, j, k), (p & ~fam[k]) == 0) << A.name;
      }
  }
}

TEST(FilterMult, Examples) {
  Algebra S5 = bounded("S5");
  EXPECT_EQ(filter_mult(S5, up_of(S5, "2"), up_of(S5, "1")), up_of(S5, "2"));
  EXPECT_EQ(oracle::complex_product(S5, up_of(S5, "2"), up_of(S5, "1")), up_of(S5, "2"));
  EXPECT_EQ(filter_abs(S5, up_of(S5, "1")), up_of(S5, "0"));
  EXPECT_EQ(filter_abs(S5, up_of(S5, "2")), up_of(S5, "-1"));
  EXPECT_EQ(filter_mult(S5, up_of(S5, "1"), up_of(S5, "0")), up_of(S5, "1"));
  EXPECT_EQ(oracle::complex_product(S5, up_of(S5, "1"), up_of(S5, "0")), up_of(S5, "1"));
}

TEST(FilterMult, CaseFormulaEqualsComplexProduct) {
  for (const auto& A : corpus::bounded_sugihara()) {
    auto pts = oracle::prime_filters(A, true);
    for (Bits x : pts) {
      EXPECT_EQ(filter_mult_cases(A, x, x), x) << A.name;
      for (Bits y : pts) ASSERT_EQ(filter_mult_cases(A, x, y), oracle::complex_product(A, x, y)) << A.name;
    }
  }
}

TEST(FilterPrime, OrderPrimeAndChains) {
  for (const auto& A : corpus::bounded_sugihara()) {
    auto pts = oracle::prime_filters(A, false);
    const Elem t = A.t();
    for (Bits x : pts) {
      Bits p = filter_prime(A, x);
      ASSERT_TRUE(std::find(pts.begin(), pts.end(), p) != pts.end()) << A.name;
      EXPECT_TRUE(is_subset(x, p) || is_subset(p, x)) << A.name;
      EXPECT_TRUE(oracle::in(is_subset(x, p) ? p : x, t)) << A.name;
      EXPECT_EQ(x == p, oracle::in(x, t) && !oracle::in(x, A.inv(t))) << A.name;
      for (Bits y : pts) {
        if (!is_subset(x, y) && !is_subset(y, x)) continue;
        std::vector<Bits> four{x, y, p, filter_prime(A, y)};
        for (Bits a : four)
          for (Bits b : four) EXPECT_TRUE(is_subset(a, b) || is_subset(b, a)) << A.name;
      }
    }
  }
}

TEST(RelevantAlgebra, Examples) {
  RelevantSpace P = one_point();
  ASSERT_EQ(first_failure(validate(P)), "");
  Algebra A = relevant_algebra(P);
  EXPECT_EQ(A.size(), 2);
  EXPECT_TRUE(oracle::isomorphic(A, bounded("S2")));

  Algebra Eb = builtin("E_bot");
  Algebra back = relevant_algebra(urquhart_dual(Eb));
  EXPECT_EQ(first_failure(validate(back)), "");
  EXPECT_TRUE(oracle::isomorphic(Eb, back));

  RelevantSpace X4 = urquhart_dual(bounded("S4"));
  Bits negI = relevant_neg(X4, X4.I);
  for (int x = 0; x < X4.size(); ++x) EXPECT_EQ(has(negI, x), !has(X4.I, X4.prime[x]));
  Algebra A4 = relevant_algebra(X4);
  SubsetFamily ups = up_sets(X4.order);
  EXPECT_EQ(ups[A4.inv(A4.t())], negI);
}

TEST(RelevantAlgebra, RoundTripOnBoundedBuiltins) {
  for (const auto& A : corpus::bounded_sugihara()) {
    Algebra back = relevant_algebra(urquhart_dual(A));
    EXPECT_EQ(first_failure(validate(back)), "") << A.name;
    EXPECT_TRUE(find_isomorphism(A, back).has_value()) << A.name;
  }
}

TEST(RelevantValidate, RejectsBrokenSpaces) {
  RelevantSpace X = urquhart_dual(builtin("E_bot"));
  RelevantSpace noI = X;
  noI.I = 0;
  EXPECT_FALSE(validate(noI).ok());
  RelevantSpace noR = X;
  for (auto& b : noR.R) b = 0;
  EXPECT_FALSE(validate(noR).ok());
  RelevantSpace badPrime = X;
  std::swap(badPrime.prime[0], badPrime.prime[1]);
  if (badPrime.prime != X.prime) {
    EXPECT_FALSE(validate(badPrime).ok());
  }
}
