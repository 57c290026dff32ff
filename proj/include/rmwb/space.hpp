#pragma once

#include <array>

#include "morphism.hpp"

namespace rmwb {

enum class Flavor { bRS, bG, PointedKleene, Kleene, SugiharaPointed, SugiharaUnpointed };

inline const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::bRS: return "bRS";
    case Flavor::bG: return "bG";
    case Flavor::PointedKleene: return "PointedKleene";
    case Flavor::Kleene: return "Kleene";
    case Flavor::SugiharaPointed: return "SugiharaPointed";
    case Flavor::SugiharaUnpointed: return "SugiharaUnpointed";
  }
  return "?";
}

inline std::optional<Flavor> parse_flavor(std::string_view s) {
  for (Flavor f : {Flavor::bRS, Flavor::bG, Flavor::PointedKleene, Flavor::Kleene, Flavor::SugiharaPointed,
                   Flavor::SugiharaUnpointed})
    if (s == flavor_name(f)) return f;
  return std::nullopt;
}

inline bool is_pointed(Flavor f) {
  return f == Flavor::bRS || f == Flavor::PointedKleene || f == Flavor::SugiharaPointed;
}
inline bool is_kleene(Flavor f) { return f != Flavor::bRS && f != Flavor::bG; }
inline bool is_sugihara_space(Flavor f) { return f == Flavor::SugiharaPointed || f == Flavor::SugiharaUnpointed; }
// Flavors whose morphisms are the Esakia-style bRSS/bGS maps.
inline bool is_esakia_flavor(Flavor f) {
  return f == Flavor::bRS || f == Flavor::bG || is_sugihara_space(f);
}

struct StructuredSpace {
  std::string name;
  Flavor flavor = Flavor::bRS;
  Poset order;
  Bits D = 0;
  std::optional<int> top;
  std::optional<std::vector<Bits>> Q;  // row x: all y with x Q y

  int size() const { return order.size(); }
  bool q(int x, int y) const { return has((*Q)[x], y); }
};

inline std::vector<Bits> comparability(const Poset& p) {
  std::vector<Bits> rows;
  for (int x = 0; x < p.size(); ++x) rows.push_back(p.comparable_with(x));
  return rows;
}

// On a finite carrier the topology is discrete: every subset is clopen,
// compactness is automatic, every relation is closed, Priestley
// separation is witnessed by principal up-sets, and the Esakia condition
// holds. Only the order-theoretic content is checked.
inline Report validate(const StructuredSpace& X) {
  using W = std::optional<std::string>;
  Report r;
  const Poset& P = X.order;
  const int n = X.size();
  auto nm = [&](int x) { return P.name(x); };
  r.add("nonempty", n > 0);
  r.add("designated subset in range", is_subset(X.D, P.all()));
  if (!r.ok()) return r;
  if (is_pointed(X.flavor)) {
    r.law("top is the greatest point", [&]() -> W {
      if (!X.top) return "no top";
      if (P.up(*X.top) != bit(*X.top) || !is_subset(P.all(), P.down(*X.top))) return nm(*X.top);
      return std::nullopt;
    });
    if (X.top && X.flavor != Flavor::PointedKleene)
      r.add("top is not designated", !has(X.D, *X.top), nm(*X.top));
  }
  r.law("designated points are minimal", [&]() -> W {
    Bits bad = X.D & ~P.minimal();
    if (bad) return nm(lowest(bad));
    return std::nullopt;
  });
  if (is_esakia_flavor(X.flavor)) r.add("forest", is_forest(P));
  if (is_kleene(X.flavor)) {
    std::vector<Bits> Q = X.Q ? *X.Q : comparability(P);
    r.law("relation shape", [&]() -> W {
      if (static_cast<int>(Q.size()) != n) return "Q has wrong size";
      return std::nullopt;
    });
    if (!r.ok()) return r;
    auto q = [&](int x, int y) { return has(Q[x], y); };
    r.law("x Q x", [&]() -> W {
      for (int x = 0; x < n; ++x)
        if (!q(x, x)) return nm(x);
      return std::nullopt;
    });
    r.law("x Q y and x in D imply x <= y", [&]() -> W {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (q(x, y) && has(X.D, x) && !P.leq(x, y)) return nm(x) + " " + nm(y);
      return std::nullopt;
    });
    r.law("x Q y and y <= z imply z Q x", [&]() -> W {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            if (q(x, y) && P.leq(y, z) && !q(z, x)) return nm(x) + " " + nm(y) + " " + nm(z);
      return std::nullopt;
    });
    if (is_sugihara_space(X.flavor))
      r.law("Q is comparability", [&]() -> W {
        auto C = comparability(P);
        for (int x = 0; x < n; ++x)
          if (C[x] != Q[x]) return nm(x);
        return std::nullopt;
      });
  }
  return r;
}

inline void require_valid(const StructuredSpace& X) {
  auto r = validate(X);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::Invalid, X.name + " fails " + c->law + (c->witness.empty() ? "" : " at " + c->witness));
}

// Morphisms: bRSS/bGS maps for Esakia-style flavors (isotone p-morphisms
// preserving D and its complement), structure-preserving maps for Kleene
// flavors. Continuity is automatic.
inline Report validate_space_map(const StructuredSpace& X, const StructuredSpace& Y, const std::vector<int>& phi) {
  using W = std::optional<std::string>;
  Report r;
  const Poset &P = X.order, &Q = Y.order;
  auto nm = [&](int x) { return P.name(x); };
  r.law("total map", [&]() -> W {
    if (static_cast<int>(phi.size()) != X.size()) return "wrong length";
    for (int v : phi)
      if (v < 0 || v >= Y.size()) return "value out of range";
    return std::nullopt;
  });
  if (!r.ok()) return r;
  r.law("isotone", [&]() -> W {
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        if (P.leq(x, y) && !Q.leq(phi[x], phi[y])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("D into D", [&]() -> W {
    for (int x : members(X.D))
      if (!has(Y.D, phi[x])) return nm(x);
    return std::nullopt;
  });
  if (is_pointed(X.flavor) && is_pointed(Y.flavor))
    r.add("top to top", X.top && Y.top && phi[*X.top] == *Y.top);
  if (is_esakia_flavor(X.flavor) && is_esakia_flavor(Y.flavor)) {
    r.law("p-morphism", [&]() -> W {
      for (int x = 0; x < X.size(); ++x)
        for (int z = 0; z < Y.size(); ++z) {
          if (!Q.leq(phi[x], z)) continue;
          bool found = false;
          for_each_bit(P.up(x), [&](int y) { found = found || phi[y] == z; });
          if (!found) return nm(x) + " -> " + Q.name(z);
        }
      return std::nullopt;
    });
    r.law("complement of D into complement of D", [&]() -> W {
      for (int x : members(P.all() & ~X.D))
        if (has(Y.D, phi[x])) return nm(x);
      return std::nullopt;
    });
  } else {
    auto qx = X.Q ? *X.Q : comparability(P);
    auto qy = Y.Q ? *Y.Q : comparability(Q);
    r.law("preserves Q", [&]() -> W {
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
          if (has(qx[x], y) && !has(qy[phi[x]], phi[y])) return nm(x) + " " + nm(y);
      return std::nullopt;
    });
  }
  return r;
}

// Bijection that preserves and reflects order, D, top, and (when both
// carry it) Q.
inline Report validate_space_iso(const StructuredSpace& X, const StructuredSpace& Y, const std::vector<int>& phi,
                                 bool compare_q = true) {
  using W = std::optional<std::string>;
  Report r;
  r.add("bijective", is_bijective(phi, Y.size()));
  if (!r.ok()) return r;
  auto nm = [&](int x) { return X.order.name(x); };
  r.law("order isomorphism", [&]() -> W {
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        if (X.order.leq(x, y) != Y.order.leq(phi[x], phi[y])) return nm(x) + " " + nm(y);
    return std::nullopt;
  });
  r.law("D corresponds to D", [&]() -> W {
    for (int x = 0; x < X.size(); ++x)
      if (has(X.D, x) != has(Y.D, phi[x])) return nm(x);
    return std::nullopt;
  });
  r.law("top corresponds to top", [&]() -> W {
    if (X.top.has_value() != Y.top.has_value()) return "only one side is pointed";
    if (X.top && phi[*X.top] != *Y.top) return nm(*X.top);
    return std::nullopt;
  });
  if (compare_q && is_kleene(X.flavor) && is_kleene(Y.flavor)) {
    auto qx = X.Q ? *X.Q : comparability(X.order);
    auto qy = Y.Q ? *Y.Q : comparability(Y.order);
    r.law("Q corresponds to Q", [&]() -> W {
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
          if (has(qx[x], y) != has(qy[phi[x]], phi[y])) return nm(x) + " " + nm(y);
      return std::nullopt;
    });
  }
  return r;
}

// Backtracking search for a bijection 0..n-1 -> 0..n-1. `consistent(i, h)`
// checks the newest assignment h[i] against h[0..i-1]; `accept(h)` is the
// final check on a complete map.
template <class Consistent, class Accept>
std::optional<std::vector<int>> find_bijection(int n, const std::vector<Bits>& cand, Consistent&& consistent,
                                               Accept&& accept) {
  std::vector<int> h(n, -1);
  Bits used = 0;
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return accept(h);
    for (int v = 0; v < n; ++v) {
      if (!has(cand[i], v) || has(used, v)) continue;
      h[i] = v;
      if (!consistent(i, h)) continue;
      used |= bit(v);
      if (rec(i + 1)) return true;
      used &= ~bit(v);
    }
    h[i] = -1;
    return false;
  };
  if (rec(0)) return h;
  return std::nullopt;
}

inline std::optional<std::vector<int>> find_space_isomorphism(const StructuredSpace& X, const StructuredSpace& Y) {
  if (X.size() != Y.size()) return std::nullopt;
  auto cand = detail::order_candidates(X.order, Y.order);
  if (!cand) return std::nullopt;
  for (int x = 0; x < X.size(); ++x) {
    (*cand)[x] &= has(X.D, x) ? Y.D : ~Y.D;
    if (X.top && x == *X.top) (*cand)[x] &= Y.top ? bit(*Y.top) : 0;
  }
  return find_bijection(
      X.size(), *cand,
      [&](int i, const std::vector<int>& h) {
        for (int j = 0; j < i; ++j)
          if (X.order.leq(i, j) != Y.order.leq(h[i], h[j]) || X.order.leq(j, i) != Y.order.leq(h[j], h[i]))
            return false;
        return true;
      },
      [&](const std::vector<int>& h) { return validate_space_iso(X, Y, h).ok(); });
}

inline std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

inline std::vector<int> compose_maps(const std::vector<int>& g, const std::vector<int>& h) {
  std::vector<int> m;
  for (int v : h) m.push_back(g[v]);
  return m;
}

}  // namespace rmwb
