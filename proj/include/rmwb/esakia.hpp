#pragma once

#include "space.hpp"

namespace rmwb {

// Points of the dual space of a bRSA (generalized prime filters) or a bGA
// (prime filters), in canonical subset order. Point i of dual_space(B) is
// dual_points(B)[i].
inline SubsetFamily dual_points(const Algebra& B) {
  require_profile(B, is_brsa(B.profile), "bRSA or bGA");
  return prime_filters(B, B.profile == Profile::bRSA);
}

inline StructuredSpace dual_space(const Algebra& B) {
  SubsetFamily pts = dual_points(B);
  check_carrier(pts.size());
  std::vector<std::string> names;
  for (Bits x : pts) names.push_back(filter_name(B, x));
  StructuredSpace X;
  X.name = B.name + "_*";
  X.flavor = B.profile == Profile::bRSA ? Flavor::bRS : Flavor::bG;
  X.order = Poset::from_relation(names, [&](int i, int j) { return is_subset(pts[i], pts[j]); });
  for (int i = 0; i < pts.size(); ++i)
    if (!has(pts[i], *B.f)) X.D |= bit(i);
  if (X.flavor == Flavor::bRS) X.top = pts.index_of(B.order.all());
  require_valid(X);
  return X;
}

// Elements of the dual algebra: nonempty up-sets when pointed, all
// up-sets otherwise.
inline SubsetFamily dual_elements(const StructuredSpace& X) {
  if (!is_esakia_flavor(X.flavor)) throw Error(ErrorKind::ProfileMismatch, X.name + " is not a bRS or bG space");
  SubsetFamily u = up_sets(X.order);
  if (is_pointed(X.flavor)) u.members.erase(std::remove(u.members.begin(), u.members.end(), Bits{0}), u.members.end());
  return u;
}

inline Algebra dual_algebra(const StructuredSpace& X) {
  require_valid(X);
  SubsetFamily els = dual_elements(X);
  check_carrier(els.size());
  std::vector<std::string> names;
  for (Bits u : els) names.push_back(set_name(X.order, u));
  AlgebraParts p;
  p.name = X.name + "^*";
  p.profile = is_pointed(X.flavor) ? Profile::bRSA : Profile::bGA;
  p.order = Poset::from_relation(names, [&](int i, int j) { return is_subset(els[i], els[j]); });
  p.arrow = Table::generate(els.size(), [&](int i, int j) {
    return els.index_of(heyting_arrow_upsets(X.order, els[i], els[j]));
  });
  p.unit = els.index_of(X.order.all());
  auto f = els.find(X.order.all() & ~X.D);
  if (!f) throw Error(ErrorKind::Invalid, "complement of D is not an element of the dual algebra");
  p.f = *f;
  if (!is_pointed(X.flavor)) p.bot = els.index_of(0);
  Algebra A = assemble(std::move(p));
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j < A.size(); ++j)
      if (els[A.meet(i, j)] != (els[i] & els[j]) || els[A.join(i, j)] != (els[i] | els[j]))
        throw Error(ErrorKind::Invalid, "lattice operations of the dual algebra are not intersection and union");
  return A;
}

// sigma(a) = set of points containing a, as a map B -> (B_*)^*.
inline Morphism sigma_iso(const Algebra& B) {
  SubsetFamily pts = dual_points(B);
  StructuredSpace X = dual_space(B);
  SubsetFamily els = dual_elements(X);
  Morphism m{B.name, X.name + "^*", {}, full_signature(B.profile)};
  for (int a = 0; a < B.size(); ++a) {
    Bits s = 0;
    for (int i = 0; i < pts.size(); ++i)
      if (has(pts[i], a)) s |= bit(i);
    m.map.push_back(els.index_of(s));
  }
  return m;
}

// x |-> set of up-sets containing x, as a map X -> (X^*)_*.
inline std::vector<int> counit_iso(const StructuredSpace& X) {
  SubsetFamily els = dual_elements(X);
  Algebra A = dual_algebra(X);
  SubsetFamily pts = dual_points(A);
  std::vector<int> m;
  for (int x = 0; x < X.size(); ++x) {
    Bits s = 0;
    for (int i = 0; i < els.size(); ++i)
      if (has(els[i], x)) s |= bit(i);
    auto j = pts.find(s);
    if (!j) throw Error(ErrorKind::Invalid, "counit value is not a point of the double dual");
    m.push_back(*j);
  }
  return m;
}

// h_*: C_* -> B_*, y |-> h^-1[y].
inline std::vector<int> dual_hom(const Algebra& B, const Algebra& C, const Morphism& h) {
  SubsetFamily pb = dual_points(B), pc = dual_points(C);
  std::vector<int> m;
  for (Bits y : pc) {
    Bits pre = 0;
    for (int a = 0; a < B.size(); ++a)
      if (has(y, h.map[a])) pre |= bit(a);
    auto i = pb.find(pre);
    if (!i) throw Error(ErrorKind::Invalid, "preimage of a point is not a point");
    m.push_back(*i);
  }
  return m;
}

// phi^*: Y^* -> X^*, U |-> phi^-1[U].
inline Morphism dual_space_map(const StructuredSpace& X, const StructuredSpace& Y, const std::vector<int>& phi) {
  SubsetFamily ex = dual_elements(X), ey = dual_elements(Y);
  Morphism m{Y.name + "^*", X.name + "^*", {}, full_signature(is_pointed(Y.flavor) ? Profile::bRSA : Profile::bGA)};
  for (Bits u : ey) {
    Bits pre = 0;
    for (int x = 0; x < X.size(); ++x)
      if (has(u, phi[x])) pre |= bit(x);
    auto i = ex.find(pre);
    if (!i) throw Error(ErrorKind::Invalid, "preimage of an up-set is not an element");
    m.map.push_back(*i);
  }
  return m;
}

// x <~ y iff x <= y, except that designated points are not related to
// themselves. Row x holds all y with x <~ y.
inline std::vector<Bits> nucleus_relation(const StructuredSpace& X) {
  std::vector<Bits> rows;
  for (int x = 0; x < X.size(); ++x) rows.push_back(X.order.up(x) & ~(has(X.D, x) ? bit(x) : 0));
  return rows;
}

// N^-1[x] for the nucleus N a = f -> a.
inline Bits nucleus_preimage(const Algebra& B, Bits x) {
  Bits s = 0;
  for (int a = 0; a < B.size(); ++a)
    if (has(x, B.imp(*B.f, a))) s |= bit(a);
  return s;
}

// x R y iff N^-1[x] is contained in y, on the points of dual_space(B).
inline std::vector<Bits> accessibility_relation(const Algebra& B) {
  SubsetFamily pts = dual_points(B);
  std::vector<Bits> rows;
  for (Bits x : pts) {
    Bits pre = nucleus_preimage(B, x), row = 0;
    for (int j = 0; j < pts.size(); ++j)
      if (is_subset(pre, pts[j])) row |= bit(j);
    rows.push_back(row);
  }
  return rows;
}

// Checks the nuclear relation of the dual of B against its algebraic
// description and the nuclear-Esakia conditions.
inline Report nuclear_checks(const Algebra& B) {
  using W = std::optional<std::string>;
  Report r;
  StructuredSpace X = dual_space(B);
  SubsetFamily pts = dual_points(B);
  const Poset& P = X.order;
  auto le = nucleus_relation(X);
  auto R = accessibility_relation(B);
  const int n = X.size();
  auto nm = [&](int x) { return P.name(x); };
  r.law("R from N^-1 equals <~", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (le[x] != R[x]) return nm(x);
    return std::nullopt;
  });
  r.law("image of <~ is the complement of D", [&]() -> W {
    Bits img = 0;
    for (Bits row : le) img |= row;
    if (img != (P.all() & ~X.D)) return set_name(P, img);
    return std::nullopt;
  });
  r.law("x R z iff some y with y R y has x <= y <= z", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        bool some = false;
        for (int y = 0; y < n; ++y) some = some || (has(R[y], y) && P.leq(x, y) && P.leq(y, z));
        if (has(R[x], z) != some) return nm(x) + " " + nm(z);
      }
    return std::nullopt;
  });
  r.law("N^-1[x] is a prime or improper filter", [&]() -> W {
    SubsetFamily gen = prime_filters(B, true);
    for (int x = 0; x < n; ++x)
      if (!gen.find(nucleus_preimage(B, pts[x]))) return nm(x);
    return std::nullopt;
  });
  r.law("x R x iff f in x", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (has(R[x], x) != has(pts[x], *B.f)) return nm(x);
    return std::nullopt;
  });
  r.law("x strictly below y implies x R y", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (P.less(x, y) && !has(R[x], y)) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  return r;
}

}  // namespace rmwb
