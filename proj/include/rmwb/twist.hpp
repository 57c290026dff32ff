#pragma once

#include "morphism.hpp"

namespace rmwb {

// Sugihara monoid -> its negative cone with f = neg t.
inline Algebra bowtie_down(const Algebra& A) {
  require_profile(A, is_sugihara(A.profile), "Sugihara");
  Algebra C = negative_cone(A, A.name + "_neg");
  for (int a = 0; a < C.size(); ++a)
    for (int b = 0; b < C.size(); ++b)
      if (C.mul(a, b) != C.meet(a, b))
        throw Error(ErrorKind::ConeNotBrouwerian, C.name_of(a) + "." + C.name_of(b) + " is not the meet");
  const bool bounded = A.profile == Profile::SugiharaBounded;
  C.profile = bounded ? Profile::bGA : Profile::bRSA;
  C.f = *C.order.find(A.name_of(A.inv(A.t())));
  if (bounded) {
    C.bot = *C.order.find(A.name_of(*A.bot));
    C.top = C.t();
  }
  return C;
}

enum class PairKind { Sigma, Bowtie };

struct PairCarrier {
  PairKind kind = PairKind::Sigma;
  std::vector<std::pair<Elem, Elem>> pairs;  // sorted lexicographically

  int index_of(Elem a, Elem b) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b));
    if (it == pairs.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - pairs.begin());
  }
};

inline PairCarrier pair_carrier(const Algebra& B, PairKind kind) {
  require_profile(B, is_brsa(B.profile), "bRSA or bGA");
  const Elem t = B.t(), f = *B.f;
  PairCarrier pc{kind, {}};
  for (int a = 0; a < B.size(); ++a)
    for (int b = 0; b < B.size(); ++b) {
      if (B.join(a, b) != t) continue;
      bool ok = kind == PairKind::Sigma ? B.imp(f, b) == b : B.leq(B.meet(a, b), f);
      if (ok) pc.pairs.emplace_back(a, b);
    }
  return pc;
}

inline std::string pair_name(const Algebra& B, Elem a, Elem b) {
  return "(" + B.name_of(a) + "," + B.name_of(b) + ")";
}

namespace detail {

using Pair = std::pair<Elem, Elem>;

// Builds the algebra on a pair carrier from operation formulas. Meet and
// join are the coordinatewise formulas; they are checked against the
// order-theoretic meet and join.
template <class Mul, class Imp, class Neg>
Algebra pair_algebra(const Algebra& B, const PairCarrier& pc, std::string name, Profile profile, Mul mul, Imp imp,
                     Neg ng, Pair unit) {
  const int n = static_cast<int>(pc.pairs.size());
  check_carrier(n);
  std::vector<std::string> names;
  for (auto [a, b] : pc.pairs) names.push_back(pair_name(B, a, b));
  auto at = [&](Pair p, const char* what) {
    int i = pc.index_of(p.first, p.second);
    if (i < 0) throw Error(ErrorKind::Invalid, std::string(what) + " leaves the carrier at " + pair_name(B, p.first, p.second));
    return i;
  };
  AlgebraParts parts;
  parts.name = std::move(name);
  parts.profile = profile;
  parts.order = Poset::from_relation(names, [&](int x, int y) {
    auto [a, b] = pc.pairs[x];
    auto [c, d] = pc.pairs[y];
    return B.leq(a, c) && B.leq(d, b);
  });
  const auto& P = pc.pairs;
  parts.mult = Table::generate(n, [&](int x, int y) { return at(mul(P[x], P[y]), "multiplication"); });
  parts.arrow = Table::generate(n, [&](int x, int y) { return at(imp(P[x], P[y]), "residual"); });
  std::vector<Elem> neg(n);
  for (int x = 0; x < n; ++x) neg[x] = at(ng(P[x]), "involution");
  parts.neg = neg;
  parts.unit = at(unit, "unit");
  Algebra A = assemble(std::move(parts));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = P[x];
      auto [c, d] = P[y];
      if (at({B.meet(a, c), B.join(b, d)}, "meet") != A.meet(x, y) ||
          at({B.join(a, c), B.meet(b, d)}, "join") != A.join(x, y))
        throw Error(ErrorKind::Invalid, "coordinatewise lattice operations disagree with the order");
    }
  if (is_bounded(B.profile)) {
    A.profile = Profile::SugiharaBounded;
    A.bot = *A.order.bottom();
    A.top = *A.order.top();
  }
  return A;
}

}  // namespace detail

// The twist representation over pairs (a,b) with a v b = t and Nb = b.
inline Algebra sigma_monoid(const Algebra& B) {
  PairCarrier pc = pair_carrier(B, PairKind::Sigma);
  const Elem t = B.t(), f = *B.f;
  auto N = [&](Elem a) { return B.imp(f, a); };
  auto& A = B;
  auto mul = [&](detail::Pair p, detail::Pair q) -> detail::Pair {
    auto [a, b] = p;
    auto [c, d] = q;
    Elem k = A.meet(A.imp(a, d), A.imp(c, b));
    return {A.imp(k, A.meet(a, c)), N(k)};
  };
  auto imp = [&](detail::Pair p, detail::Pair q) -> detail::Pair {
    auto [a, b] = p;
    auto [c, d] = q;
    Elem k = A.meet(A.imp(a, c), A.imp(d, b));
    return {k, N(A.imp(k, A.meet(a, d)))};
  };
  auto ng = [&](detail::Pair p) { return imp(p, {f, t}); };
  return detail::pair_algebra(B, pc, "S(" + B.name + ")", Profile::Sugihara, mul, imp, ng, {t, t});
}

// Explicit product on bowtie pairs: (a,b)(c,d) = (s, s2) with
//   s  = ((a^f)->d) -> [((c^f)->b) -> (a^c)]
//   s2 = ((a^f)->d) ^ ((c^f)->b) ^ (s->f).
// This is delta^-1(delta p . delta q) written out.
inline std::pair<Elem, Elem> bowtie_mult(const Algebra& A, std::pair<Elem, Elem> p, std::pair<Elem, Elem> q) {
  const Elem f = *A.f;
  auto [a, b] = p;
  auto [c, d] = q;
  Elem l = A.imp(A.meet(a, f), d);
  Elem r = A.imp(A.meet(c, f), b);
  Elem s = A.imp(l, A.imp(r, A.meet(a, c)));
  return {s, A.meet(A.meet(l, r), A.imp(s, f))};
}

// The same product with the second conjunct read as ((c^f)->d) and the
// outer connective of s as a meet. Not closed on the carrier in general;
// kept so tests can exhibit the difference.
inline std::pair<Elem, Elem> bowtie_mult_literal(const Algebra& A, std::pair<Elem, Elem> p,
                                                 std::pair<Elem, Elem> q) {
  const Elem f = *A.f;
  auto [a, b] = p;
  auto [c, d] = q;
  (void)b;
  Elem l = A.imp(A.meet(a, f), d);
  Elem r = A.imp(A.meet(c, f), d);
  Elem s = A.meet(l, A.imp(r, A.meet(a, c)));
  return {s, A.meet(A.meet(l, r), A.imp(s, f))};
}

inline std::pair<Elem, Elem> bowtie_arrow(const Algebra& A, std::pair<Elem, Elem> p, std::pair<Elem, Elem> q) {
  const Elem f = *A.f;
  auto [a, b] = p;
  auto [c, d] = q;
  Elem w = A.meet(A.imp(a, c), A.imp(A.meet(f, d), b));
  Elem v = A.meet(A.imp(A.meet(f, A.meet(A.imp(a, c), A.imp(d, b))), A.meet(a, A.imp(f, d))), A.imp(w, f));
  return {w, v};
}

// The representation over pairs (a,b) with a v b = t and a ^ b <= f and
// the coordinate-swap involution.
inline Algebra bowtie_up(const Algebra& B) {
  PairCarrier pc = pair_carrier(B, PairKind::Bowtie);
  const Elem t = B.t(), f = *B.f;
  auto mul = [&](detail::Pair p, detail::Pair q) { return bowtie_mult(B, p, q); };
  auto imp = [&](detail::Pair p, detail::Pair q) { return bowtie_arrow(B, p, q); };
  auto ng = [](detail::Pair p) { return detail::Pair{p.second, p.first}; };
  Algebra R = detail::pair_algebra(B, pc, B.name + "^bt", Profile::Sugihara, mul, imp, ng, {t, f});
  if (is_bounded(B.profile)) {
    int lo = pc.index_of(*B.bot, t);
    if (lo < 0 || *R.bot != lo) throw Error(ErrorKind::Invalid, "(bot,t) is not the least pair");
  }
  return R;
}

// delta: bowtie_up(B) -> sigma_monoid(B), (a,b) |-> (a, f->b).
struct Delta {
  Morphism forward;
  Morphism inverse;
  Report report;
};

inline Delta delta(const Algebra& B) {
  Algebra up = bowtie_up(B), sg = sigma_monoid(B);
  PairCarrier pu = pair_carrier(B, PairKind::Bowtie), ps = pair_carrier(B, PairKind::Sigma);
  const Elem t = B.t(), f = *B.f;
  Delta d;
  d.forward = {up.name, sg.name, {}, full_signature(up.profile)};
  d.inverse = {sg.name, up.name, {}, full_signature(sg.profile)};
  using W = std::optional<std::string>;
  d.report.law("delta lands in the sigma carrier", [&]() -> W {
    for (auto [a, b] : pu.pairs) {
      int j = ps.index_of(a, B.imp(f, b));
      if (j < 0) return pair_name(B, a, b);
      d.forward.map.push_back(j);
    }
    return std::nullopt;
  });
  d.report.law("inverse formula lands in the bowtie carrier", [&]() -> W {
    for (auto [a, b] : ps.pairs) {
      int j = pu.index_of(a, B.meet(b, B.imp(a, f)));
      if (j < 0) return pair_name(B, a, b);
      d.inverse.map.push_back(j);
    }
    return std::nullopt;
  });
  if (!d.report.ok()) return d;
  d.report.law("(a->f) ^ (f->b) = b on bowtie pairs", [&]() -> W {
    for (auto [a, b] : pu.pairs)
      if (B.meet(B.imp(a, f), B.imp(f, b)) != b) return pair_name(B, a, b);
    return std::nullopt;
  });
  d.report.law("inverse formula inverts delta", [&]() -> W {
    for (int i = 0; i < up.size(); ++i)
      if (d.inverse.map[d.forward.map[i]] != i) return up.name_of(i);
    for (int j = 0; j < sg.size(); ++j)
      if (d.forward.map[d.inverse.map[j]] != j) return sg.name_of(j);
    return std::nullopt;
  });
  d.report.merge(validate_iso(up, sg, d.forward.map), "delta ");
  d.report.law("neg delta(p) = delta(~p)", [&]() -> W {
    for (int i = 0; i < up.size(); ++i)
      if (sg.inv(d.forward.map[i]) != d.forward.map[up.inv(i)]) return up.name_of(i);
    return std::nullopt;
  });
  (void)t;
  return d;
}

enum class LiftDirection { Up, Sigma };

// (a,b) |-> (h a, h b) between the lifted algebras of source and target.
inline Morphism lift_hom(const Algebra& A, const Algebra& B, const Morphism& h, LiftDirection dir) {
  PairKind kind = dir == LiftDirection::Up ? PairKind::Bowtie : PairKind::Sigma;
  PairCarrier pa = pair_carrier(A, kind), pb = pair_carrier(B, kind);
  Algebra LA = dir == LiftDirection::Up ? bowtie_up(A) : sigma_monoid(A);
  Algebra LB = dir == LiftDirection::Up ? bowtie_up(B) : sigma_monoid(B);
  Morphism out{LA.name, LB.name, {}, full_signature(LA.profile)};
  for (auto [a, b] : pa.pairs) {
    int j = pb.index_of(h.map[a], h.map[b]);
    if (j < 0) throw Error(ErrorKind::Invalid, "lifted map leaves the target carrier");
    out.map.push_back(j);
  }
  return out;
}

}  // namespace rmwb
