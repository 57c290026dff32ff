#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

using namespace rmwb;

namespace {

Poset cone_poset() {
  return poset_from_covers({"a", "b", "c", "f", "t"}, {{"a", "b"}, {"b", "c"}, {"b", "f"}, {"c", "t"}, {"f", "t"}});
}

Bits names_to_set(const Poset& p, std::initializer_list<const char*> xs) {
  Bits s = 0;
  for (const char* x : xs) s |= bit(p.index(x));
  return s;
}

// Random posets on n points from random forward edges of a shuffled order.
std::vector<Poset> random_posets(int n, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Poset> out;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  for (int k = 0; k < count; ++k) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::string, std::string>> cov;
    std::bernoulli_distribution edge(0.35);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (edge(rng)) cov.emplace_back(names[perm[i]], names[perm[j]]);
    out.push_back(poset_from_covers(names, cov));
  }
  return out;
}

std::vector<Poset> sweep_posets() {
  std::vector<Poset> ps;
  for (int n = 1; n <= 5; ++n)
    for (auto& p : all_posets(n)) ps.push_back(std::move(p));
  for (auto& p : random_posets(6, 150, 7)) ps.push_back(std::move(p));
  return ps;
}

}  // namespace

TEST(PosetFromCovers, Singleton) {
  Poset p = poset_from_covers({"a"}, {});
  ASSERT_EQ(p.size(), 1);
  EXPECT_TRUE(p.leq(0, 0));
}

TEST(PosetFromCovers, ConeShape) {
  Poset p = cone_poset();
  EXPECT_TRUE(p.leq(p.index("a"), p.index("t")));
  EXPECT_FALSE(p.comparable(p.index("c"), p.index("f")));
  EXPECT_EQ(p.up(p.index("b")), names_to_set(p, {"b", "c", "f", "t"}));
  EXPECT_EQ(p.covers().size(), 5u);
}

TEST(PosetFromCovers, CycleDetected) {
  try {
    poset_from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}});
    FAIL() << "expected CycleDetected";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CycleDetected);
  }
}

TEST(PosetFromCovers, UnknownAndDuplicateNames) {
  try {
    poset_from_covers({"x"}, {{"x", "z"}});
    FAIL() << "expected UnknownName";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownName);
  }
  try {
    poset_from_covers({"x", "x"}, {});
    FAIL() << "expected DuplicateName";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateName);
  }
}

TEST(PosetFromCovers, CarrierLimit) {
  std::vector<std::string> names;
  for (int i = 0; i < 65; ++i) names.push_back("x" + std::to_string(i));
  try {
    poset_from_covers(names, {});
    FAIL() << "expected CarrierTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CarrierTooLarge);
  }
}

TEST(IsForest, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_forest(chain(n)));
  EXPECT_FALSE(is_forest(cone_poset()));
  // Prime-filter inclusion order of the cone: ^c, ^f below ^b below the improper filter.
  Poset dual = poset_from_covers({"^c", "^f", "^b", "^a"}, {{"^c", "^b"}, {"^f", "^b"}, {"^b", "^a"}});
  EXPECT_TRUE(is_forest(dual));
}

TEST(UpSets, Examples) {
  Poset one = chain(1);
  EXPECT_EQ(up_sets(one).members, (std::vector<Bits>{0, 1}));
  Poset two = poset_from_covers({"a", "b"}, {{"a", "b"}});
  EXPECT_EQ(up_sets(two).members, (std::vector<Bits>{0, 2, 3}));
  Poset p = cone_poset();
  std::vector<Bits> want = {0,
                            names_to_set(p, {"t"}),
                            names_to_set(p, {"c", "t"}),
                            names_to_set(p, {"f", "t"}),
                            names_to_set(p, {"c", "f", "t"}),
                            names_to_set(p, {"b", "c", "f", "t"}),
                            p.all()};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(up_sets(p).members, want);
  EXPECT_EQ(up_sets(p).members, oracle::up_sets(p));
}

TEST(UpSets, MatchBruteForceAndClosure) {
  for (const Poset& p : sweep_posets()) {
    auto fam = up_sets(p);
    ASSERT_EQ(fam.members, oracle::up_sets(p));
    for (Bits u : fam)
      for (Bits v : fam) {
        EXPECT_TRUE(fam.find(u | v).has_value());
        EXPECT_TRUE(fam.find(u & v).has_value());
      }
  }
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(up_sets(chain(n)).size(), n + 1);
}

TEST(Poset, OrderAxiomsOnSweep) {
  for (const Poset& p : sweep_posets()) {
    const int n = p.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (a != b) {
          EXPECT_FALSE(p.leq(a, b) && p.leq(b, a));
        }
        for (int c = 0; c < n; ++c) {
          if (p.leq(a, b) && p.leq(b, c)) {
            EXPECT_TRUE(p.leq(a, c));
          }
        }
      }
  }
}

TEST(PrimeFilters, Examples) {
  AlgebraParts two;
  two.name = "2";
  two.profile = Profile::Godel;
  two.order = poset_from_covers({"bot", "top"}, {{"bot", "top"}});
  Algebra C = assemble(two);
  EXPECT_EQ(prime_filters(C, false).members, (std::vector<Bits>{bit(C.elem("top"))}));

  Algebra B = builtin("E_neg");
  const Poset& p = B.order;
  auto fam = prime_filters(B, true);
  std::vector<Bits> want = {p.up(p.index("c")), p.up(p.index("f")), p.up(p.index("b")), p.all()};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(fam.members, want);
  auto proper = prime_filters(B, false);
  EXPECT_EQ(proper.size(), 3);
  EXPECT_FALSE(proper.find(names_to_set(p, {"t"})).has_value());
  EXPECT_EQ(proper.members, oracle::prime_filters(B, false));
}

TEST(PrimeFilters, ChainsArePrincipal) {
  for (int n = 2; n <= 8; ++n) {
    Algebra S = builtin("S" + std::to_string(n));
    auto fam = prime_filters(S, false);
    ASSERT_EQ(fam.size(), n - 1);
    for (int a = 1; a < n; ++a) EXPECT_TRUE(fam.find(S.order.up(a)).has_value());
    EXPECT_EQ(prime_filters(S, true).size(), n);
    EXPECT_EQ(prime_filters(S, true).members, oracle::prime_filters(S, true));
  }
  for (const auto& name : builtin_names()) {
    Algebra A = builtin(name);
    EXPECT_EQ(prime_filters(A, false).members, oracle::prime_filters(A, false)) << name;
  }
}

TEST(HeytingArrow, Examples) {
  Poset p = poset_from_covers({"^c", "^f", "^b", "^a"}, {{"^c", "^b"}, {"^f", "^b"}, {"^b", "^a"}});
  EXPECT_EQ(heyting_arrow_upsets(p, p.all(), p.all()), p.all());
  EXPECT_EQ(heyting_arrow_upsets(p, p.all(), 0), Bits{0});
  Bits u = p.up(p.index("^c"));
  // The top point lies in u, so nothing is disjoint from it.
  EXPECT_EQ(heyting_arrow_upsets(p, u, 0), Bits{0});
  EXPECT_EQ(heyting_arrow_upsets(p, u, p.up(p.index("^b"))), p.all() & ~p.down(p.index("^c")));
  try {
    heyting_arrow_upsets(p, bit(p.index("^c")), 0);
    FAIL() << "expected NotAnUpSet";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnUpSet);
  }
}

TEST(HeytingArrow, LargestUpSetOnSweep) {
  for (const Poset& p : sweep_posets()) {
    auto ups = oracle::up_sets(p);
    for (Bits u : ups)
      for (Bits v : ups) {
        Bits r = heyting_arrow_upsets(p, u, v);
        ASSERT_TRUE(oracle::is_up(p, r));
        ASSERT_EQ(r & u & ~v, Bits{0});
        for (Bits w : ups) {
          if ((w & u & ~v) == 0) {
            ASSERT_EQ(w & ~r, Bits{0});
          }
        }
      }
  }
}
