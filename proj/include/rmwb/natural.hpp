#pragma once

#include "esakia.hpp"
#include "twist.hpp"

namespace rmwb {

// Values of the three-element alter ego are stored as indices 0, 1, 2 for
// -1, 0, 1.
inline constexpr Elem kMinus = 0, kZero = 1, kPlus = 2;

inline int alter_value(Elem e) { return e - 1; }

// L = ({-1 < 0 < 1}, meet, join, neg); K adds the bounds.
inline Algebra alter_ego_algebra(bool bounded) {
  AlgebraParts p;
  p.name = bounded ? "K" : "L";
  p.profile = bounded ? Profile::Kleene : Profile::ILattice;
  p.order = Poset::from_covers({"-1", "0", "1"}, {{"-1", "0"}, {"0", "1"}});
  p.neg = std::vector<Elem>{kPlus, kZero, kMinus};
  return assemble(std::move(p));
}

// The structured side: -1 < 0 > 1, Q everything except (-1,1) and (1,-1),
// designated {-1,1}, and the constant 0 in the pointed version.
inline StructuredSpace alter_ego_space(bool pointed) {
  StructuredSpace X;
  X.name = pointed ? "L~" : "K~";
  X.flavor = pointed ? Flavor::PointedKleene : Flavor::Kleene;
  X.order = Poset::from_covers({"-1", "0", "1"}, {{"-1", "0"}, {"1", "0"}});
  X.D = bit(kMinus) | bit(kPlus);
  if (pointed) X.top = kZero;
  std::vector<Bits> q(3, full_set(3));
  q[kMinus] &= ~bit(kPlus);
  q[kPlus] &= ~bit(kMinus);
  X.Q = q;
  return X;
}

inline bool alter_leq(Elem a, Elem b) { return a == b || b == kZero; }
inline bool alter_q(Elem a, Elem b) { return !((a == kMinus && b == kPlus) || (a == kPlus && b == kMinus)); }

// Points of dw_dual(A): homomorphisms of the i-lattice (unbounded) or
// Kleene (bounded) reduct into L or K, in lexicographic order of value
// vectors.
inline std::vector<Morphism> dw_points(const Algebra& A) {
  require_profile(A, is_sugihara(A.profile), "Sugihara");
  const bool bounded = A.profile == Profile::SugiharaBounded;
  Algebra L = alter_ego_algebra(bounded);
  return enumerate_homs(A, L, bounded ? kKleeneSig : kILatticeSig);
}

inline StructuredSpace dw_dual(const Algebra& A) {
  const bool bounded = A.profile == Profile::SugiharaBounded;
  auto homs = dw_points(A);
  const int n = static_cast<int>(homs.size());
  check_carrier(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("h" + std::to_string(i));
  StructuredSpace X;
  X.name = A.name + "_+";
  X.flavor = bounded ? Flavor::SugiharaUnpointed : Flavor::SugiharaPointed;
  X.order = Poset::from_relation(names, [&](int i, int j) {
    for (int a = 0; a < A.size(); ++a)
      if (!alter_leq(homs[i].map[a], homs[j].map[a])) return false;
    return true;
  });
  std::vector<Bits> q(n, 0);
  for (int i = 0; i < n; ++i) {
    bool no_zero = true, all_zero = true;
    for (Elem v : homs[i].map) {
      no_zero = no_zero && v != kZero;
      all_zero = all_zero && v == kZero;
    }
    if (no_zero) X.D |= bit(i);
    if (all_zero && !bounded) X.top = i;
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int a = 0; a < A.size() && ok; ++a) ok = alter_q(homs[i].map[a], homs[j].map[a]);
      if (ok) q[i] |= bit(j);
    }
  }
  X.Q = q;
  require_valid(X);
  return X;
}

// h(t) lies in {0, 1} for every point.
inline Report hom_point_checks(const Algebra& A) {
  Report r;
  for (const auto& h : dw_points(A)) {
    Elem v = h.map[A.t()];
    r.add("h(t) in {0,1}", v == kZero || v == kPlus);
  }
  return r;
}

namespace detail {

// Index in A of each element of a negative cone built from A.
inline std::vector<Elem> cone_embedding(const Algebra& A, const Algebra& cone) {
  std::vector<Elem> e;
  for (int k = 0; k < cone.size(); ++k) e.push_back(A.elem(cone.name_of(k)));
  return e;
}

inline Bits preimage_01(const std::vector<Elem>& h, const std::vector<Elem>& domain) {
  Bits s = 0;
  for (int k = 0; k < static_cast<int>(domain.size()); ++k)
    if (h[domain[k]] != kMinus) s |= bit(k);
  return s;
}

}  // namespace detail

// Restriction of a Sugihara homomorphism to negative cones.
inline Morphism cone_hom(const Algebra& A, const Algebra& B, const Morphism& h) {
  Algebra ca = bowtie_down(A), cb = bowtie_down(B);
  Morphism m{ca.name, cb.name, {}, full_signature(ca.profile)};
  for (Elem a : detail::cone_embedding(A, ca)) m.map.push_back(cb.elem(B.name_of(h.map[a])));
  return m;
}

struct StructureMap {
  std::vector<int> map;
  Report report;
};

// xi(h) = h^-1[{0,1}] restricted to the negative cone, as a map
// dw_dual(A) -> dual_space(bowtie_down(A)).
inline StructureMap xi(const Algebra& A) {
  Algebra cone = bowtie_down(A);
  auto emb = detail::cone_embedding(A, cone);
  SubsetFamily pts = dual_points(cone);
  StructuredSpace X = dw_dual(A), Y = dual_space(cone);
  StructureMap out;
  bool total = true;
  for (const auto& h : dw_points(A)) {
    auto i = pts.find(detail::preimage_01(h.map, emb));
    total = total && i.has_value();
    out.map.push_back(i.value_or(-1));
  }
  out.report.add("xi lands in the dual space", total);
  if (total) out.report.merge(validate_space_iso(X, Y, out.map, false), "xi ");
  return out;
}

// I(A): generalized prime filters containing t (proper ones when bounded).
inline SubsetFamily i_filters(const Algebra& A) {
  SubsetFamily fam = prime_filters(A, A.profile != Profile::SugiharaBounded);
  SubsetFamily out{A.size(), {}};
  for (Bits x : fam)
    if (has(x, A.t())) out.members.push_back(x);
  return out;
}

// psi(h) = h^-1[{0,1}] as an order isomorphism dw_dual(A) -> (I(A), subset).
inline StructureMap psi(const Algebra& A) {
  using W = std::optional<std::string>;
  SubsetFamily I = i_filters(A);
  StructureMap out;
  std::vector<Elem> all;
  for (int a = 0; a < A.size(); ++a) all.push_back(a);
  auto homs = dw_points(A);
  bool total = true;
  for (const auto& h : homs) {
    auto i = I.find(detail::preimage_01(h.map, all));
    total = total && i.has_value();
    out.map.push_back(i.value_or(-1));
  }
  out.report.add("psi lands in I(A)", total);
  if (!total) return out;
  out.report.add("psi bijective", is_bijective(out.map, I.size()));
  StructuredSpace X = dw_dual(A);
  out.report.law("psi order isomorphism", [&]() -> W {
    for (int i = 0; i < X.size(); ++i)
      for (int j = 0; j < X.size(); ++j)
        if (X.order.leq(i, j) != is_subset(I[out.map[i]], I[out.map[j]])) return X.order.name(i) + " " + X.order.name(j);
    return std::nullopt;
  });
  Algebra cone = bowtie_down(A);
  auto emb = detail::cone_embedding(A, cone);
  SubsetFamily pts = dual_points(cone);
  auto x = xi(A);
  out.report.law("psi(h) meet cone = xi(h)", [&]() -> W {
    for (int i = 0; i < X.size(); ++i) {
      Bits restricted = 0;
      for (int k = 0; k < cone.size(); ++k)
        if (has(I[out.map[i]], emb[k])) restricted |= bit(k);
      if (x.map[i] < 0 || restricted != pts[x.map[i]]) return X.order.name(i);
    }
    return std::nullopt;
  });
  return out;
}

// C_{U,V}(x) = 1 if x not in V, 0 if x in U and V, -1 if x not in U.
inline std::vector<Elem> c_uv(const StructuredSpace& X, Bits U, Bits V) {
  if ((U | V) != X.order.all()) throw Error(ErrorKind::NotCovering, "U and V do not cover " + X.name);
  std::vector<Elem> m;
  for (int x = 0; x < X.size(); ++x) m.push_back(!has(V, x) ? kPlus : !has(U, x) ? kMinus : kZero);
  return m;
}

inline StructuredSpace alter_target(const StructuredSpace& X) { return alter_ego_space(is_pointed(X.flavor)); }

// The criterion: U, V up-sets, no Q-edge between the complements, and U and
// V meeting only outside D. Pointed spaces also need top in U and V so that
// top goes to 0.
inline bool c_uv_criterion(const StructuredSpace& X, Bits U, Bits V) {
  if (!X.order.is_up_set(U) || !X.order.is_up_set(V)) return false;
  if (X.top && !(has(U, *X.top) && has(V, *X.top))) return false;
  auto q = X.Q ? *X.Q : comparability(X.order);
  Bits nu = X.order.all() & ~U, nv = X.order.all() & ~V;
  for (int x : members(nu))
    if (q[x] & nv) return false;
  return (U & V & X.D) == 0;
}

inline bool is_alter_morphism(const StructuredSpace& X, const std::vector<Elem>& phi) {
  return validate_space_map(X, alter_target(X), phi).ok();
}

struct PlusElement {
  Bits U = 0, V = 0;
  std::vector<Elem> values;
};

// Valid C_{U,V} maps of X in lexicographic order of value vectors.
inline std::vector<PlusElement> plus_elements(const StructuredSpace& X) {
  SubsetFamily ups = up_sets(X.order);
  std::vector<PlusElement> out;
  for (Bits U : ups)
    for (Bits V : ups) {
      if ((U | V) != X.order.all()) continue;
      auto vals = c_uv(X, U, V);
      if (is_alter_morphism(X, vals)) out.push_back({U, V, vals});
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.values < b.values; });
  return out;
}

inline std::string plus_name(const std::vector<Elem>& vals) {
  std::string s = "C[";
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + std::to_string(alter_value(vals[i]));
  return s + "]";
}

// X^+: valid C_{U,V} maps with pointwise lattice operations and negation;
// multiplication and residual transported through the twist of X^*.
inline Algebra plus_algebra(const StructuredSpace& X) {
  if (!is_sugihara_space(X.flavor)) throw Error(ErrorKind::ProfileMismatch, X.name + " is not a Sugihara space");
  require_valid(X);
  auto els = plus_elements(X);
  const int n = static_cast<int>(els.size());
  check_carrier(n);
  Algebra dual = dual_algebra(X);
  SubsetFamily de = dual_elements(X);
  PairCarrier pc = pair_carrier(dual, PairKind::Bowtie);
  auto find_uv = [&](Bits U, Bits V) {
    for (int i = 0; i < n; ++i)
      if (els[i].U == U && els[i].V == V) return i;
    throw Error(ErrorKind::Invalid, "transported value is not a valid C_{U,V}");
  };
  auto find_vals = [&](const std::vector<Elem>& vals) {
    for (int i = 0; i < n; ++i)
      if (els[i].values == vals) return i;
    throw Error(ErrorKind::Invalid, "pointwise value is not a valid C_{U,V}");
  };
  auto pair_of = [&](int i) {
    auto u = de.find(els[i].U), v = de.find(els[i].V);
    if (!u || !v || pc.index_of(*u, *v) < 0) throw Error(ErrorKind::Invalid, "C_{U,V} does not decompose into a twist pair");
    return std::make_pair(static_cast<Elem>(*u), static_cast<Elem>(*v));
  };
  auto encode = [&](std::pair<Elem, Elem> p) { return find_uv(de[p.first], de[p.second]); };
  std::vector<std::string> names;
  for (const auto& e : els) names.push_back(plus_name(e.values));
  AlgebraParts p;
  p.name = X.name + "^+";
  p.profile = is_pointed(X.flavor) ? Profile::Sugihara : Profile::SugiharaBounded;
  p.order = Poset::from_relation(names, [&](int i, int j) {
    for (int x = 0; x < X.size(); ++x)
      if (els[i].values[x] > els[j].values[x]) return false;
    return true;
  });
  p.mult = Table::generate(n, [&](int i, int j) { return encode(bowtie_mult(dual, pair_of(i), pair_of(j))); });
  p.arrow = Table::generate(n, [&](int i, int j) { return encode(bowtie_arrow(dual, pair_of(i), pair_of(j))); });
  std::vector<Elem> neg;
  for (const auto& e : els) {
    std::vector<Elem> v;
    for (Elem a : e.values) v.push_back(2 - a);
    neg.push_back(find_vals(v));
  }
  p.neg = neg;
  p.unit = find_uv(X.order.all(), X.order.all() & ~X.D);
  Algebra A = assemble(std::move(p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Elem> lo, hi;
      for (int x = 0; x < X.size(); ++x) {
        lo.push_back(std::min(els[i].values[x], els[j].values[x]));
        hi.push_back(std::max(els[i].values[x], els[j].values[x]));
      }
      if (els[A.meet(i, j)].values != lo || els[A.join(i, j)].values != hi)
        throw Error(ErrorKind::Invalid, "lattice operations of X^+ are not pointwise");
    }
  return A;
}

// mu(U,V) = C_{U,V}, as a map (X^*)^bt -> X^+.
inline Morphism mu(const StructuredSpace& X) {
  Algebra dual = dual_algebra(X);
  SubsetFamily de = dual_elements(X);
  PairCarrier pc = pair_carrier(dual, PairKind::Bowtie);
  auto els = plus_elements(X);
  Algebra up = bowtie_up(dual);
  Morphism m{up.name, X.name + "^+", {}, full_signature(up.profile)};
  for (auto [a, b] : pc.pairs) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(els.size()); ++i)
      if (els[i].U == de[a] && els[i].V == de[b]) found = i;
    if (found < 0) throw Error(ErrorKind::Invalid, "twist pair is not a valid C_{U,V}");
    m.map.push_back(found);
  }
  return m;
}

// a |-> (h |-> h(a)), as a map A -> (A_+)^+.
inline Morphism eval_algebra(const Algebra& A) {
  StructuredSpace X = dw_dual(A);
  auto homs = dw_points(A);
  auto els = plus_elements(X);
  Morphism m{A.name, X.name + "^+", {}, full_signature(A.profile)};
  for (int a = 0; a < A.size(); ++a) {
    std::vector<Elem> vals;
    for (const auto& h : homs) vals.push_back(h.map[a]);
    int found = -1;
    for (int i = 0; i < static_cast<int>(els.size()); ++i)
      if (els[i].values == vals) found = i;
    if (found < 0) throw Error(ErrorKind::Invalid, "evaluation is not an element of (A_+)^+");
    m.map.push_back(found);
  }
  return m;
}

// x |-> (alpha |-> alpha(x)), as a map X -> (X^+)_+.
inline std::vector<int> eval_space(const StructuredSpace& X) {
  Algebra P = plus_algebra(X);
  auto els = plus_elements(X);
  auto homs = dw_points(P);
  std::vector<int> m;
  for (int x = 0; x < X.size(); ++x) {
    std::vector<Elem> vals;
    for (const auto& e : els) vals.push_back(e.values[x]);
    int found = -1;
    for (int i = 0; i < static_cast<int>(homs.size()); ++i)
      if (homs[i].map == vals) found = i;
    if (found < 0) throw Error(ErrorKind::Invalid, "evaluation is not a point of (X^+)_+");
    m.push_back(found);
  }
  return m;
}

// h_+: B_+ -> A_+, k |-> k o h.
inline std::vector<int> plus_hom(const Algebra& A, const Algebra& B, const Morphism& h) {
  auto pa = dw_points(A), pb = dw_points(B);
  std::vector<int> m;
  for (const auto& k : pb) {
    std::vector<Elem> v;
    for (Elem a : h.map) v.push_back(k.map[a]);
    int found = -1;
    for (int i = 0; i < static_cast<int>(pa.size()); ++i)
      if (pa[i].map == v) found = i;
    if (found < 0) throw Error(ErrorKind::Invalid, "k o h is not a point of A_+");
    m.push_back(found);
  }
  return m;
}

// phi^+: Y^+ -> X^+, alpha |-> alpha o phi.
inline Morphism plus_space_map(const StructuredSpace& X, const StructuredSpace& Y, const std::vector<int>& phi) {
  auto ex = plus_elements(X), ey = plus_elements(Y);
  Morphism m{Y.name + "^+", X.name + "^+", {},
             full_signature(is_pointed(Y.flavor) ? Profile::Sugihara : Profile::SugiharaBounded)};
  for (const auto& e : ey) {
    std::vector<Elem> v;
    for (int x = 0; x < X.size(); ++x) v.push_back(e.values[phi[x]]);
    int found = -1;
    for (int i = 0; i < static_cast<int>(ex.size()); ++i)
      if (ex[i].values == v) found = i;
    if (found < 0) throw Error(ErrorKind::Invalid, "alpha o phi is not an element of X^+");
    m.map.push_back(found);
  }
  return m;
}

struct ConvexPrime {
  SubsetFamily family;
  std::vector<int> to_points;  // index in dw_dual(A) per member of family
  Report report;
};

// Convex, meet-prime subuniverses of the (meet, join, t, neg) reduct of an
// odd Sugihara monoid. Any such C is the interval [min C, neg min C].
inline ConvexPrime convex_prime_subalgebras(const Algebra& A) {
  require_profile(A, is_sugihara(A.profile), "Sugihara");
  const Elem t = A.t();
  if (A.inv(t) != t) throw Error(ErrorKind::NotOdd, A.name + " has neg t != t");
  ConvexPrime out;
  out.family.ground = A.size();
  for (int a = 0; a < A.size(); ++a) {
    if (!A.leq(a, t)) continue;
    Bits C = 0;
    for (int x = 0; x < A.size(); ++x)
      if (A.leq(a, x) && A.leq(x, A.inv(a))) C |= bit(x);
    bool ok = has(C, t);
    for (int x : members(C))
      for (int y : members(C)) ok = ok && has(C, A.meet(x, y)) && has(C, A.join(x, y)) && has(C, A.inv(x));
    for (int x = 0; x < A.size(); ++x)
      for (int y = 0; y < A.size(); ++y)
        if (has(C, A.meet(x, y)) && !has(C, x) && !has(C, y)) ok = false;
    if (ok) out.family.members.push_back(C);
  }
  out.family.canonicalize();
  Algebra cone = bowtie_down(A);
  auto emb = detail::cone_embedding(A, cone);
  SubsetFamily pts = dual_points(cone);
  auto x = xi(A);
  auto inv = inverse_map(x.map);
  bool total = true;
  for (Bits C : out.family) {
    Bits restricted = 0;
    for (int k = 0; k < cone.size(); ++k)
      if (has(C, emb[k])) restricted |= bit(k);
    auto i = pts.find(restricted);
    total = total && i.has_value();
    out.to_points.push_back(i ? inv[*i] : -1);
  }
  out.report.add("C meet cone is a point", total);
  if (!total) return out;
  StructuredSpace X = dw_dual(A);
  out.report.add("bijective onto A_+", is_bijective(out.to_points, X.size()));
  using W = std::optional<std::string>;
  out.report.law("order isomorphism onto A_+", [&]() -> W {
    for (int i = 0; i < out.family.size(); ++i)
      for (int j = 0; j < out.family.size(); ++j)
        if (is_subset(out.family[i], out.family[j]) != X.order.leq(out.to_points[i], out.to_points[j]))
          return set_name(A.order, out.family[i]) + " " + set_name(A.order, out.family[j]);
    return std::nullopt;
  });
  return out;
}

}  // namespace rmwb
