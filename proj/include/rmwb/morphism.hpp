#pragma once

#include "algebra.hpp"

namespace rmwb {

// Operations and constants a map claims to preserve.
enum Op : unsigned {
  kMeet = 1u << 0,
  kJoin = 1u << 1,
  kMult = 1u << 2,
  kArrow = 1u << 3,
  kNeg = 1u << 4,
  kUnit = 1u << 5,
  kConstF = 1u << 6,
  kBot = 1u << 7,
  kTop = 1u << 8,
};
using Signature = unsigned;

inline constexpr Signature kLatticeSig = kMeet | kJoin;
inline constexpr Signature kILatticeSig = kLatticeSig | kNeg;
inline constexpr Signature kKleeneSig = kILatticeSig | kBot | kTop;

inline Signature full_signature(Profile p) {
  switch (p) {
    case Profile::ILattice: return kILatticeSig;
    case Profile::Kleene: return kKleeneSig;
    case Profile::CRL: return kLatticeSig | kMult | kArrow | kUnit;
    case Profile::Brouwerian:
    case Profile::RelStone: return kLatticeSig | kArrow | kUnit;
    case Profile::Godel: return kLatticeSig | kArrow | kUnit | kBot;
    case Profile::bRSA: return kLatticeSig | kArrow | kUnit | kConstF;
    case Profile::bGA: return kLatticeSig | kArrow | kUnit | kConstF | kBot;
    case Profile::Sugihara: return kLatticeSig | kMult | kArrow | kUnit | kNeg;
    case Profile::SugiharaBounded: return kLatticeSig | kMult | kArrow | kUnit | kNeg | kBot | kTop;
  }
  return kLatticeSig;
}

struct Morphism {
  std::string source, target;
  std::vector<Elem> map;
  Signature signature = 0;

  Elem operator()(Elem a) const { return map[a]; }
  bool operator==(const Morphism& o) const { return map == o.map; }
};

namespace detail {

struct BinOp {
  const Table* a;
  const Table* b;
};

inline std::vector<BinOp> binops(const Algebra& A, const Algebra& B, Signature sig) {
  std::vector<BinOp> ops;
  if (sig & kMeet) ops.push_back({&A.meet, &B.meet});
  if (sig & kJoin) ops.push_back({&A.join, &B.join});
  if (sig & kMult) {
    if (!A.mult || !B.mult) throw Error(ErrorKind::ProfileMismatch, "signature needs multiplication");
    ops.push_back({&*A.mult, &*B.mult});
  }
  if (sig & kArrow) {
    if (!A.arrow || !B.arrow) throw Error(ErrorKind::ProfileMismatch, "signature needs arrow");
    ops.push_back({&*A.arrow, &*B.arrow});
  }
  return ops;
}

inline std::vector<std::pair<Elem, Elem>> constants(const Algebra& A, const Algebra& B, Signature sig) {
  std::vector<std::pair<Elem, Elem>> cs;
  auto need = [&](Op o, const std::optional<Elem>& a, const std::optional<Elem>& b, const char* what) {
    if (!(sig & o)) return;
    if (!a || !b) throw Error(ErrorKind::ProfileMismatch, std::string("signature needs constant ") + what);
    cs.emplace_back(*a, *b);
  };
  need(kUnit, A.unit, B.unit, "t");
  need(kConstF, A.f, B.f, "f");
  need(kBot, A.bot, B.bot, "bot");
  need(kTop, A.top, B.top, "top");
  return cs;
}

}  // namespace detail

inline Report validate_hom(const Algebra& A, const Algebra& B, const std::vector<Elem>& h, Signature sig) {
  using W = std::optional<std::string>;
  Report r;
  r.law("total map", [&]() -> W {
    if (static_cast<int>(h.size()) != A.size()) return "map has wrong length";
    for (Elem e : h)
      if (e < 0 || e >= B.size()) return "value out of range";
    return std::nullopt;
  });
  if (!r.ok()) return r;
  const char* names[] = {"meet", "join", "mult", "arrow"};
  Op bits[] = {kMeet, kJoin, kMult, kArrow};
  auto ops = detail::binops(A, B, sig);
  std::size_t k = 0;
  for (int i = 0; i < 4; ++i) {
    if (!(sig & bits[i])) continue;
    auto op = ops[k++];
    r.law(std::string("preserves ") + names[i], [&]() -> W {
      for (int a = 0; a < A.size(); ++a)
        for (int b = 0; b < A.size(); ++b)
          if (h[(*op.a)(a, b)] != (*op.b)(h[a], h[b])) return "a=" + A.name_of(a) + " b=" + A.name_of(b);
      return std::nullopt;
    });
  }
  if (sig & kNeg)
    r.law("preserves negation", [&]() -> W {
      for (int a = 0; a < A.size(); ++a)
        if (h[A.inv(a)] != B.inv(h[a])) return "a=" + A.name_of(a);
      return std::nullopt;
    });
  auto cs = detail::constants(A, B, sig);
  r.law("preserves constants", [&]() -> W {
    for (auto [a, b] : cs)
      if (h[a] != b) return "constant " + A.name_of(a);
    return std::nullopt;
  });
  return r;
}

inline bool is_bijective(const std::vector<Elem>& h, int target_size) {
  if (static_cast<int>(h.size()) != target_size) return false;
  Bits seen = 0;
  for (Elem e : h) {
    if (e < 0 || e >= target_size || has(seen, e)) return false;
    seen |= bit(e);
  }
  return true;
}

// Isomorphism in the full signature of A's profile; bijectivity plus
// lattice preservation also makes it an order isomorphism.
inline Report validate_iso(const Algebra& A, const Algebra& B, const std::vector<Elem>& h) {
  Report r;
  r.add("same profile", A.profile == B.profile, std::string(profile_name(A.profile)) + " vs " + profile_name(B.profile));
  r.add("bijective", is_bijective(h, B.size()));
  if (!r.ok()) return r;
  r.merge(validate_hom(A, B, h, full_signature(A.profile)));
  return r;
}

namespace detail {

// Backtracking over maps A -> B with constraint propagation: once a and b
// are mapped, op(a,b) is forced. Variables are branched in index order and
// values tried ascending, so results come out lexicographically sorted.
class HomSearch {
 public:
  HomSearch(const Algebra& A, const Algebra& B, Signature sig, bool injective, std::vector<Bits> cand)
      : A_(A), B_(B), ops_(binops(A, B, sig)), neg_(sig & kNeg), injective_(injective), cand_(std::move(cand)) {
    if (neg_ && (!A.neg || !B.neg)) throw Error(ErrorKind::ProfileMismatch, "signature needs negation");
    consts_ = constants(A, B, sig);
  }

  template <class Emit>
  void run(Emit&& emit) {
    State s;
    s.h.assign(A_.size(), -1);
    for (auto [a, b] : consts_)
      if (!assign(s, a, b)) return;
    if (!propagate(s)) return;
    dfs(s, emit);
  }

 private:
  struct State {
    std::vector<Elem> h;
    Bits used = 0;
    Bits assigned = 0;
    std::vector<Elem> queue;
  };

  bool assign(State& s, Elem a, Elem b) {
    if (s.h[a] >= 0) return s.h[a] == b;
    if (!has(cand_[a], b)) return false;
    if (injective_ && has(s.used, b)) return false;
    s.h[a] = b;
    s.used |= bit(b);
    s.assigned |= bit(a);
    s.queue.push_back(a);
    return true;
  }

  bool propagate(State& s) {
    while (!s.queue.empty()) {
      Elem a = s.queue.back();
      s.queue.pop_back();
      if (neg_ && !assign(s, A_.inv(a), B_.inv(s.h[a]))) return false;
      bool ok = true;
      for_each_bit(s.assigned, [&](int b) {
        if (!ok) return;
        for (const auto& op : ops_) {
          if (!assign(s, (*op.a)(a, b), (*op.b)(s.h[a], s.h[b])) ||
              !assign(s, (*op.a)(b, a), (*op.b)(s.h[b], s.h[a]))) {
            ok = false;
            return;
          }
        }
      });
      if (!ok) return false;
    }
    return true;
  }

  template <class Emit>
  bool dfs(State& s, Emit& emit) {
    int next = -1;
    for (int a = 0; a < A_.size(); ++a)
      if (s.h[a] < 0) {
        next = a;
        break;
      }
    if (next < 0) return emit(s.h);
    for (int b = 0; b < B_.size(); ++b) {
      State child = s;
      if (!assign(child, next, b) || !propagate(child)) continue;
      if (!dfs(child, emit)) return false;
    }
    return true;
  }

  const Algebra& A_;
  const Algebra& B_;
  std::vector<BinOp> ops_;
  bool neg_;
  bool injective_;
  std::vector<Bits> cand_;
  std::vector<std::pair<Elem, Elem>> consts_;
};

}  // namespace detail

inline std::vector<Morphism> enumerate_homs(const Algebra& A, const Algebra& B, Signature sig) {
  std::vector<Morphism> out;
  if (A.size() == 0) return out;
  detail::HomSearch search(A, B, sig, false, std::vector<Bits>(A.size(), B.order.all()));
  search.run([&](const std::vector<Elem>& h) {
    out.push_back({A.name, B.name, h, sig});
    return true;
  });
  for (const auto& m : out)
    if (!validate_hom(A, B, m.map, sig).ok()) throw Error(ErrorKind::Invalid, "hom search produced a non-hom");
  return out;
}

namespace detail {

// Per-element order invariants that any order isomorphism must preserve.
inline std::array<int, 4> order_signature(const Poset& p, int x) {
  int up_covers = 0, down_covers = 0;
  for (auto [a, b] : p.covers()) {
    if (a == x) ++up_covers;
    if (b == x) ++down_covers;
  }
  return {count(p.up(x)), count(p.down(x)), up_covers, down_covers};
}

inline std::vector<std::array<int, 4>> order_signatures(const Poset& p) {
  std::vector<std::array<int, 4>> out;
  for (int x = 0; x < p.size(); ++x) out.push_back(order_signature(p, x));
  return out;
}

// Candidate targets per element of P, restricted by the invariants above;
// empty optional if the invariant multisets already differ.
inline std::optional<std::vector<Bits>> order_candidates(const Poset& P, const Poset& Q) {
  if (P.size() != Q.size()) return std::nullopt;
  auto sp = order_signatures(P), sq = order_signatures(Q);
  auto a = sp, b = sq;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return std::nullopt;
  std::vector<Bits> cand(P.size(), 0);
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < Q.size(); ++y)
      if (sp[x] == sq[y]) cand[x] |= bit(y);
  return cand;
}

}  // namespace detail

inline std::optional<Morphism> find_isomorphism(const Algebra& A, const Algebra& B) {
  if (A.profile != B.profile || A.size() != B.size() || A.size() == 0) return std::nullopt;
  auto cand = detail::order_candidates(A.order, B.order);
  if (!cand) return std::nullopt;
  const Signature sig = full_signature(A.profile);
  std::optional<Morphism> found;
  detail::HomSearch search(A, B, sig, true, *cand);
  search.run([&](const std::vector<Elem>& h) {
    if (validate_iso(A, B, h).ok()) {
      found = Morphism{A.name, B.name, h, sig};
      return false;
    }
    return true;
  });
  return found;
}

inline Morphism identity_hom(const Algebra& A) {
  Morphism m{A.name, A.name, {}, full_signature(A.profile)};
  for (int a = 0; a < A.size(); ++a) m.map.push_back(a);
  return m;
}

inline Morphism compose(const Morphism& g, const Morphism& h) {
  Morphism m{h.source, g.target, {}, g.signature & h.signature};
  for (Elem e : h.map) m.map.push_back(g.map[e]);
  return m;
}

inline std::vector<Elem> inverse_map(const std::vector<Elem>& h) {
  std::vector<Elem> inv(h.size(), -1);
  for (int i = 0; i < static_cast<int>(h.size()); ++i) inv[h[i]] = i;
  return inv;
}

}  // namespace rmwb
