#pragma once

#include "space.hpp"

namespace rmwb {

struct RelevantSpace {
  std::string name;
  Poset order;
  std::vector<Bits> R;  // R[x * n + y] = x.y = all z with Rxyz
  std::vector<int> prime;
  Bits I = 0;

  int size() const { return order.size(); }
  Bits prod(int x, int y) const { return R[static_cast<std::size_t>(x) * size() + y]; }
  bool r(int x, int y, int z) const { return has(prod(x, y), z); }
};

// Lifted product: union of x.y over x in S and y in T.
inline Bits lift(const RelevantSpace& X, Bits S, Bits T) {
  Bits out = 0;
  for_each_bit(S, [&](int x) { for_each_bit(T, [&](int y) { out |= X.prod(x, y); }); });
  return out;
}

inline Bits boxtimes(const RelevantSpace& X, Bits U, Bits V) { return lift(X, U, V); }

inline Bits relevant_arrow(const RelevantSpace& X, Bits U, Bits V) {
  Bits out = 0;
  for (int x = 0; x < X.size(); ++x)
    if (is_subset(lift(X, bit(x), U), V)) out |= bit(x);
  return out;
}

inline Bits relevant_neg(const RelevantSpace& X, Bits U) {
  Bits out = 0;
  for (int x = 0; x < X.size(); ++x)
    if (!has(U, X.prime[x])) out |= bit(x);
  return out;
}

// The five relevant-space conditions and the five Sugihara conditions.
// Topological clauses are vacuous on finite discrete carriers.
inline Report validate(const RelevantSpace& X) {
  using W = std::optional<std::string>;
  Report r;
  const Poset& P = X.order;
  const int n = X.size();
  auto nm = [&](int x) { return P.name(x); };
  auto tri = [&](int x, int y, int z) { return nm(x) + " " + nm(y) + " " + nm(z); };
  r.add("nonempty", n > 0);
  r.law("shape", [&]() -> W {
    if (static_cast<int>(X.R.size()) != n * n) return "R has wrong size";
    if (static_cast<int>(X.prime.size()) != n) return "prime has wrong size";
    for (int v : X.prime)
      if (v < 0 || v >= n) return "prime out of range";
    for (Bits b : X.R)
      if (!is_subset(b, P.all())) return "R out of range";
    if (!is_subset(X.I, P.all())) return "I out of range";
    return std::nullopt;
  });
  if (!r.ok()) return r;
  SubsetFamily ups = up_sets(P);
  r.law("products and residuals of up-sets are up-sets", [&]() -> W {
    for (Bits U : ups)
      for (Bits V : ups) {
        if (!P.is_up_set(boxtimes(X, U, V))) return "boxtimes " + set_name(P, U) + " " + set_name(P, V);
        if (!P.is_up_set(relevant_arrow(X, U, V))) return "arrow " + set_name(P, U) + " " + set_name(P, V);
      }
    return std::nullopt;
  });
  r.law("R is monotone", [&]() -> W {
    for (int x1 = 0; x1 < n; ++x1)
      for (int y1 = 0; y1 < n; ++y1) {
        Bits above = P.up_closure(X.prod(x1, y1));
        for (int x2 : members(P.down(x1)))
          for (int y2 : members(P.down(y1)))
            if (!is_subset(above, X.prod(x2, y2))) return tri(x2, y2, lowest(above & ~X.prod(x2, y2)));
      }
    return std::nullopt;
  });
  r.law("non-triples are separated by up-sets", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          if (X.r(x, y, z)) continue;
          bool sep = false;
          for (Bits U : ups) {
            if (!has(U, x)) continue;
            for (Bits V : ups)
              if (has(V, y) && !has(boxtimes(X, U, V), z)) {
                sep = true;
                break;
              }
            if (sep) break;
          }
          if (!sep) return tri(x, y, z);
        }
    return std::nullopt;
  });
  r.law("prime is antitone", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (P.leq(x, y) && !P.leq(X.prime[y], X.prime[x])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.add("I is an up-set", P.is_up_set(X.I), set_name(P, X.I));
  r.law("y <= z iff Rxyz for some x in I", [&]() -> W {
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        bool some = false;
        for (int x : members(X.I)) some = some || X.r(x, y, z);
        if (P.leq(y, z) != some) return nm(y) + " " + nm(z);
      }
    return std::nullopt;
  });
  r.law("x.y = y.x", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (X.prod(x, y) != X.prod(y, x)) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("x.(y.z) = (x.y).z", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (lift(X, bit(x), X.prod(y, z)) != lift(X, X.prod(x, y), bit(z))) return tri(x, y, z);
    return std::nullopt;
  });
  r.law("x.x = up(x)", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (X.prod(x, x) != P.up(x)) return nm(x);
    return std::nullopt;
  });
  r.law("x'' = x", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (X.prime[X.prime[x]] != x) return nm(x);
    return std::nullopt;
  });
  r.law("z in x.y implies y' in x.z'", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z : members(X.prod(x, y)))
          if (!X.r(x, X.prime[z], X.prime[y])) return tri(x, y, z);
    return std::nullopt;
  });
  return r;
}

inline void require_valid(const RelevantSpace& X) {
  auto r = validate(X);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::Invalid, X.name + " fails " + c->law + (c->witness.empty() ? "" : " at " + c->witness));
}

// Filter arithmetic on a bounded Sugihara monoid. Filters are bitsets over
// the carrier.

// {c : a.b <= c for some a in x, b in y}.
inline Bits complex_product(const Algebra& A, Bits x, Bits y) {
  Bits s = 0;
  for (int a : members(x))
    for (int b : members(y)) s |= A.order.up(A.mul(a, b));
  return s;
}

// Filter generated by x and y.
inline Bits filter_join(const Algebra& A, Bits x, Bits y) {
  Bits s = 0;
  for (int a : members(x))
    for (int b : members(y)) s |= A.order.up(A.meet(a, b));
  return s;
}

// x' = {a : neg a not in x}.
inline Bits filter_prime(const Algebra& A, Bits x) {
  Bits s = 0;
  for (int a = 0; a < A.size(); ++a)
    if (!has(x, A.inv(a))) s |= bit(a);
  return s;
}

// |x|: the larger of x and x'.
inline Bits filter_abs(const Algebra& A, Bits x) {
  Bits p = filter_prime(A, x);
  if (is_subset(x, p)) return p;
  if (is_subset(p, x)) return x;
  throw Error(ErrorKind::Invalid, "x and x' are incomparable at " + set_name(A.order, x));
}

// The case formula for the product of generalized prime filters.
inline Bits filter_mult_cases(const Algebra& A, Bits x, Bits y) {
  const Elem t = A.t();
  const bool comparable = is_subset(x, y) || is_subset(y, x);
  if ((has(x, t) && has(y, t)) || !comparable) return filter_join(A, x, y);
  Bits ax = filter_abs(A, x), ay = filter_abs(A, y);
  if (ax == ay) return x & y;
  if (is_subset(ax, ay)) return y;
  if (is_subset(ay, ax)) return x;
  throw Error(ErrorKind::Invalid, "absolute values of comparable filters are incomparable");
}

// Case formula, checked against the complex product.
inline Bits filter_mult(const Algebra& A, Bits x, Bits y) {
  Bits c = filter_mult_cases(A, x, y), b = complex_product(A, x, y);
  if (c != b)
    throw Error(ErrorKind::Invalid, "case formula disagrees with the complex product at " + set_name(A.order, x) + " " +
                                        set_name(A.order, y));
  return c;
}

inline RelevantSpace urquhart_dual(const Algebra& A) {
  require_profile(A, A.profile == Profile::SugiharaBounded, "bounded Sugihara");
  SubsetFamily pts = prime_filters(A, false);
  const int n = pts.size();
  check_carrier(n);
  std::vector<std::string> names;
  for (Bits x : pts) names.push_back(filter_name(A, x));
  RelevantSpace X;
  X.name = A.name + "_u";
  X.order = Poset::from_relation(names, [&](int i, int j) { return is_subset(pts[i], pts[j]); });
  X.R.assign(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Bits p = complex_product(A, pts[i], pts[j]);
      for (int k = 0; k < n; ++k)
        if (is_subset(p, pts[k])) X.R[static_cast<std::size_t>(i) * n + j] |= bit(k);
    }
  for (int i = 0; i < n; ++i) {
    auto j = pts.find(filter_prime(A, pts[i]));
    if (!j) throw Error(ErrorKind::Invalid, "x' is not a prime filter at " + names[i]);
    X.prime.push_back(*j);
    if (has(pts[i], A.t())) X.I |= bit(i);
  }
  require_valid(X);
  return X;
}

// X^*: all up-sets with the relational product, residual, and negation.
inline Algebra relevant_algebra(const RelevantSpace& X) {
  require_valid(X);
  SubsetFamily els = up_sets(X.order);
  check_carrier(els.size());
  std::vector<std::string> names;
  for (Bits u : els) names.push_back(set_name(X.order, u));
  AlgebraParts p;
  p.name = X.name + "^*";
  p.profile = Profile::SugiharaBounded;
  p.order = Poset::from_relation(names, [&](int i, int j) { return is_subset(els[i], els[j]); });
  p.mult = Table::generate(els.size(), [&](int i, int j) { return els.index_of(boxtimes(X, els[i], els[j])); });
  p.arrow = Table::generate(els.size(), [&](int i, int j) { return els.index_of(relevant_arrow(X, els[i], els[j])); });
  std::vector<Elem> neg;
  for (Bits u : els) neg.push_back(els.index_of(relevant_neg(X, u)));
  p.neg = neg;
  p.unit = els.index_of(X.I);
  return assemble(std::move(p));
}

// Bijection preserving and reflecting order, R, prime, and I.
inline Report validate_relevant_iso(const RelevantSpace& X, const RelevantSpace& Y, const std::vector<int>& phi) {
  using W = std::optional<std::string>;
  Report r;
  r.add("bijective", is_bijective(phi, Y.size()));
  if (!r.ok()) return r;
  const int n = X.size();
  auto nm = [&](int x) { return X.order.name(x); };
  auto image = [&](Bits s) {
    Bits out = 0;
    for_each_bit(s, [&](int x) { out |= bit(phi[x]); });
    return out;
  };
  r.law("order isomorphism", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (X.order.leq(x, y) != Y.order.leq(phi[x], phi[y])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("R corresponds to R", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (image(X.prod(x, y)) != Y.prod(phi[x], phi[y])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("prime corresponds to prime", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (phi[X.prime[x]] != Y.prime[phi[x]]) return nm(x);
    return std::nullopt;
  });
  r.add("I corresponds to I", image(X.I) == Y.I);
  return r;
}

inline std::optional<std::vector<int>> find_relevant_isomorphism(const RelevantSpace& X, const RelevantSpace& Y) {
  if (X.size() != Y.size()) return std::nullopt;
  auto cand = detail::order_candidates(X.order, Y.order);
  if (!cand) return std::nullopt;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y) {
      bool same = has(X.I, x) == has(Y.I, y) && (X.prime[x] == x) == (Y.prime[y] == y) &&
                  count(X.prod(x, x)) == count(Y.prod(y, y));
      if (!same) (*cand)[x] &= ~bit(y);
    }
  return find_bijection(
      X.size(), *cand,
      [&](int i, const std::vector<int>& h) {
        for (int j = 0; j <= i; ++j) {
          if (X.order.leq(i, j) != Y.order.leq(h[i], h[j]) || X.order.leq(j, i) != Y.order.leq(h[j], h[i]))
            return false;
          if (X.prime[i] == j && Y.prime[h[i]] != h[j]) return false;
          if (X.prime[j] == i && Y.prime[h[j]] != h[i]) return false;
          for (int k = 0; k <= i; ++k) {
            int a[3] = {i, j, k};
            int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
            for (auto& p : perm) {
              int x = a[p[0]], y = a[p[1]], z = a[p[2]];
              if (X.r(x, y, z) != Y.r(h[x], h[y], h[z])) return false;
            }
          }
        }
        return true;
      },
      [&](const std::vector<int>& h) { return validate_relevant_iso(X, Y, h).ok(); });
}

// The six conditions on relevant maps.
inline Report validate_relevant_map(const RelevantSpace& X, const RelevantSpace& Y, const std::vector<int>& phi) {
  using W = std::optional<std::string>;
  Report r;
  const int n = X.size(), m = Y.size();
  r.law("total map", [&]() -> W {
    if (static_cast<int>(phi.size()) != n) return "wrong length";
    for (int v : phi)
      if (v < 0 || v >= m) return "value out of range";
    return std::nullopt;
  });
  if (!r.ok()) return r;
  auto nm = [&](int x) { return X.order.name(x); };
  r.law("isotone", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (X.order.leq(x, y) && !Y.order.leq(phi[x], phi[y])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("Rxyz implies R phi(x) phi(y) phi(z)", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z : members(X.prod(x, y)))
          if (!Y.r(phi[x], phi[y], phi[z])) return nm(x) + " " + nm(y) + " " + nm(z);
    return std::nullopt;
  });
  r.law("R x y phi(z) lifts to R u v z", [&]() -> W {
    for (int z = 0; z < n; ++z)
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
          if (!Y.r(x, y, phi[z])) continue;
          bool found = false;
          for (int u = 0; u < n && !found; ++u)
            for (int v = 0; v < n && !found; ++v)
              found = X.r(u, v, z) && Y.order.leq(x, phi[u]) && Y.order.leq(y, phi[v]);
          if (!found) return Y.order.name(x) + " " + Y.order.name(y) + " " + nm(z);
        }
    return std::nullopt;
  });
  r.law("R phi(x) y z lifts to R x u v", [&]() -> W {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < m; ++y)
        for (int z : members(Y.prod(phi[x], y))) {
          bool found = false;
          for (int u = 0; u < n && !found; ++u)
            for (int v : members(X.prod(x, u))) {
              if (Y.order.leq(y, phi[u]) && Y.order.leq(phi[v], z)) {
                found = true;
                break;
              }
            }
          if (!found) return nm(x) + " " + Y.order.name(y) + " " + Y.order.name(z);
        }
    return std::nullopt;
  });
  r.law("phi(x') = phi(x)'", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (phi[X.prime[x]] != Y.prime[phi[x]]) return nm(x);
    return std::nullopt;
  });
  r.law("preimage of I is I", [&]() -> W {
    for (int x = 0; x < n; ++x)
      if (has(X.I, x) != has(Y.I, phi[x])) return nm(x);
    return std::nullopt;
  });
  return r;
}

}  // namespace rmwb
