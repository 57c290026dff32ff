#pragma once

#include <array>
#include <map>

#include "order.hpp"

namespace rmwb {

// Square operation table over a carrier of size n.
class Table {
 public:
  Table() = default;
  explicit Table(int n, Elem fill = 0) : n_(n), v_(static_cast<std::size_t>(n) * n, fill) {}

  template <class F>
  static Table generate(int n, F&& f) {
    Table t(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t.at(a, b) = f(a, b);
    return t;
  }

  int size() const { return n_; }
  Elem operator()(Elem a, Elem b) const { return v_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem& at(Elem a, Elem b) { return v_[static_cast<std::size_t>(a) * n_ + b]; }
  bool operator==(const Table&) const = default;

 private:
  int n_ = 0;
  std::vector<Elem> v_;
};

enum class Profile {
  ILattice,
  Kleene,
  CRL,
  Brouwerian,
  RelStone,
  Godel,
  bRSA,
  bGA,
  Sugihara,
  SugiharaBounded,
};

inline constexpr std::array<Profile, 10> kAllProfiles = {
    Profile::ILattice, Profile::Kleene,  Profile::CRL,  Profile::Brouwerian,
    Profile::RelStone, Profile::Godel,   Profile::bRSA, Profile::bGA,
    Profile::Sugihara, Profile::SugiharaBounded};

inline const char* profile_name(Profile p) {
  switch (p) {
    case Profile::ILattice: return "ILattice";
    case Profile::Kleene: return "Kleene";
    case Profile::CRL: return "CRL";
    case Profile::Brouwerian: return "Brouwerian";
    case Profile::RelStone: return "RelStone";
    case Profile::Godel: return "Godel";
    case Profile::bRSA: return "bRSA";
    case Profile::bGA: return "bGA";
    case Profile::Sugihara: return "Sugihara";
    case Profile::SugiharaBounded: return "SugiharaBounded";
  }
  return "?";
}

inline std::optional<Profile> parse_profile(std::string_view s) {
  for (Profile p : kAllProfiles)
    if (s == profile_name(p)) return p;
  return std::nullopt;
}

inline bool is_bounded(Profile p) {
  return p == Profile::Kleene || p == Profile::Godel || p == Profile::bGA ||
         p == Profile::SugiharaBounded;
}
inline bool is_residuated(Profile p) { return p != Profile::ILattice && p != Profile::Kleene; }
inline bool is_brouwerian(Profile p) {
  return p == Profile::Brouwerian || p == Profile::RelStone || p == Profile::Godel ||
         p == Profile::bRSA || p == Profile::bGA;
}
inline bool is_semilinear_heyting(Profile p) {
  return p == Profile::RelStone || p == Profile::Godel || p == Profile::bRSA || p == Profile::bGA;
}
inline bool is_brsa(Profile p) { return p == Profile::bRSA || p == Profile::bGA; }
inline bool is_sugihara(Profile p) { return p == Profile::Sugihara || p == Profile::SugiharaBounded; }
inline bool has_involution(Profile p) {
  return p == Profile::ILattice || p == Profile::Kleene || is_sugihara(p);
}

inline Profile bounded_profile(Profile p) {
  switch (p) {
    case Profile::ILattice: return Profile::Kleene;
    case Profile::RelStone: return Profile::Godel;
    case Profile::bRSA: return Profile::bGA;
    case Profile::Sugihara: return Profile::SugiharaBounded;
    default: return p;
  }
}
inline Profile unbounded_profile(Profile p) {
  switch (p) {
    case Profile::Kleene: return Profile::ILattice;
    case Profile::Godel: return Profile::RelStone;
    case Profile::bGA: return Profile::bRSA;
    case Profile::SugiharaBounded: return Profile::Sugihara;
    default: return p;
  }
}

struct Algebra {
  std::string name;
  Profile profile = Profile::CRL;
  Poset order;
  Table meet, join;
  std::optional<Table> mult, arrow;
  std::optional<Elem> unit;
  std::optional<std::vector<Elem>> neg;
  std::optional<Elem> f, bot, top;

  int size() const { return order.size(); }
  const std::string& name_of(Elem a) const { return order.name(a); }
  Elem elem(std::string_view nm) const { return order.index(nm); }
  bool leq(Elem a, Elem b) const { return order.leq(a, b); }

  Elem mul(Elem a, Elem b) const { return mult ? (*mult)(a, b) : meet(a, b); }
  Elem imp(Elem a, Elem b) const { return (*arrow)(a, b); }
  Elem inv(Elem a) const { return (*neg)[a]; }
  Elem t() const { return *unit; }
};

// Residual of `mult` over `order`: a->b = max{c : a.c <= b}.
inline Table residual_table(const Poset& order, const Table& mult) {
  const int n = order.size();
  Table r(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Bits ok = 0;
      for (int c = 0; c < n; ++c)
        if (order.leq(mult(a, c), b)) ok |= bit(c);
      auto g = order.greatest_of(ok);
      if (!g)
        throw Error(ErrorKind::NotResiduated,
                    "no greatest c with " + order.name(a) + ".c <= " + order.name(b));
      r.at(a, b) = *g;
    }
  return r;
}

struct AlgebraParts {
  std::string name;
  Profile profile = Profile::CRL;
  Poset order;
  std::optional<Table> mult, arrow;
  std::optional<Elem> unit;
  std::optional<std::vector<Elem>> neg;
  std::optional<Elem> f, bot, top;
};

// Completes the parts into an algebra: lattice tables from the order,
// mult = meet and t = top for Brouwerian-type profiles when omitted,
// bounds from the order for bounded profiles, and the arrow table by
// residuation when omitted.
inline Algebra assemble(AlgebraParts p) {
  Algebra A;
  A.name = std::move(p.name);
  A.profile = p.profile;
  A.order = std::move(p.order);
  const int n = A.order.size();
  A.meet = Table(n);
  A.join = Table(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto m = A.order.meet(a, b);
      auto j = A.order.join(a, b);
      if (!m || !j)
        throw Error(ErrorKind::NotALattice,
                    "no " + std::string(!m ? "meet" : "join") + " of " + A.order.name(a) + "," +
                        A.order.name(b));
      A.meet.at(a, b) = *m;
      A.join.at(a, b) = *j;
    }
  A.mult = std::move(p.mult);
  A.arrow = std::move(p.arrow);
  A.unit = p.unit;
  A.neg = std::move(p.neg);
  A.f = p.f;
  A.bot = p.bot;
  A.top = p.top;
  if (is_brouwerian(A.profile)) {
    if (!A.mult) A.mult = A.meet;
    if (!A.unit && n > 0) A.unit = A.order.top();
  }
  if (is_bounded(A.profile) && n > 0) {
    if (!A.bot) A.bot = A.order.bottom();
    if (!A.top) A.top = A.order.top();
  }
  if (is_residuated(A.profile) && A.mult && !A.arrow) A.arrow = residual_table(A.order, *A.mult);
  return A;
}

inline Algebra with_bounds(Algebra A) {
  A.profile = bounded_profile(A.profile);
  A.bot = *A.order.bottom();
  A.top = *A.order.top();
  return A;
}

inline Algebra without_bounds(Algebra A) {
  A.profile = unbounded_profile(A.profile);
  A.bot.reset();
  A.top.reset();
  return A;
}

namespace detail {

inline std::string tuple_str(const Algebra& A, std::initializer_list<std::pair<const char*, Elem>> xs) {
  std::string s;
  for (auto [k, v] : xs) {
    if (!s.empty()) s += ' ';
    s += std::string(k) + "=" + A.name_of(v);
  }
  return s;
}

}  // namespace detail

// Sweeps every axiom of A's profile. Failures carry a witness tuple.
inline Report validate(const Algebra& A) {
  using detail::tuple_str;
  using W = std::optional<std::string>;
  Report r;
  const int n = A.size();
  const Profile p = A.profile;

  r.law("signature", [&]() -> W {
    if (n == 0) return "empty carrier";
    if (A.meet.size() != n || A.join.size() != n) return "lattice table shape";
    if (is_residuated(p) && (!A.mult || !A.arrow || !A.unit)) return "missing mult/arrow/unit";
    if (A.mult && A.mult->size() != n) return "mult table shape";
    if (A.arrow && A.arrow->size() != n) return "arrow table shape";
    if (has_involution(p) && (!A.neg || static_cast<int>(A.neg->size()) != n)) return "missing negation";
    if (is_brsa(p) && !A.f) return "missing constant f";
    if (is_bounded(p) && (!A.bot || !A.top)) return "missing bounds";
    auto in = [&](Elem e) { return e >= 0 && e < n; };
    auto tab_ok = [&](const std::optional<Table>& t) {
      if (!t) return true;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!in((*t)(a, b))) return false;
      return true;
    };
    if (!tab_ok(A.meet) || !tab_ok(A.join) || !tab_ok(A.mult) || !tab_ok(A.arrow)) return "table entry out of range";
    if (A.neg)
      for (Elem e : *A.neg)
        if (!in(e)) return "negation entry out of range";
    for (auto c : {A.unit, A.f, A.bot, A.top})
      if (c && !in(*c)) return "constant out of range";
    return std::nullopt;
  });
  if (!r.ok()) return r;

  r.law("lattice", [&]() -> W {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (A.order.meet(a, b) != std::optional<int>(A.meet(a, b))) return "meet " + tuple_str(A, {{"a", a}, {"b", b}});
        if (A.order.join(a, b) != std::optional<int>(A.join(a, b))) return "join " + tuple_str(A, {{"a", a}, {"b", b}});
      }
    return std::nullopt;
  });

  if (p != Profile::CRL)
    r.law("distributivity", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c)))
              return tuple_str(A, {{"a", a}, {"b", b}, {"c", c}});
      return std::nullopt;
    });

  if (is_bounded(p))
    r.law("bounds", [&]() -> W {
      for (int a = 0; a < n; ++a) {
        if (!A.leq(*A.bot, a)) return "bot above " + A.name_of(a);
        if (!A.leq(a, *A.top)) return "top below " + A.name_of(a);
      }
      return std::nullopt;
    });

  if (has_involution(p))
    r.law("double negation", [&]() -> W {
      for (int a = 0; a < n; ++a)
        if (A.inv(A.inv(a)) != a) return tuple_str(A, {{"x", a}});
      return std::nullopt;
    });

  if (p == Profile::ILattice || p == Profile::Kleene) {
    r.law("De Morgan", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (A.inv(A.meet(a, b)) != A.join(A.inv(a), A.inv(b))) return tuple_str(A, {{"a", a}, {"b", b}});
      return std::nullopt;
    });
    r.law("normality", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!A.leq(A.meet(a, A.inv(a)), A.join(b, A.inv(b)))) return tuple_str(A, {{"a", a}, {"b", b}});
      return std::nullopt;
    });
  }

  if (is_residuated(p)) {
    const Elem t = A.t();
    r.law("commutativity", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (A.mul(a, b) != A.mul(b, a)) return tuple_str(A, {{"a", a}, {"b", b}});
      return std::nullopt;
    });
    r.law("associativity", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (A.mul(A.mul(a, b), c) != A.mul(a, A.mul(b, c))) return tuple_str(A, {{"a", a}, {"b", b}, {"c", c}});
      return std::nullopt;
    });
    r.law("unit", [&]() -> W {
      for (int a = 0; a < n; ++a)
        if (A.mul(t, a) != a) return tuple_str(A, {{"a", a}});
      return std::nullopt;
    });
    r.law("residuation", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (A.leq(A.mul(a, b), c) != A.leq(a, A.imp(b, c))) return tuple_str(A, {{"a", a}, {"b", b}, {"c", c}});
      return std::nullopt;
    });
  }

  if (is_brouwerian(p))
    r.law("multiplication is meet", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (A.mul(a, b) != A.meet(a, b)) return tuple_str(A, {{"a", a}, {"b", b}});
      return std::nullopt;
    });

  if (is_semilinear_heyting(p))
    r.law("prelinearity", [&]() -> W {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!A.leq(A.t(), A.join(A.imp(a, b), A.imp(b, a)))) return tuple_str(A, {{"a", a}, {"b", b}});
      return std::nullopt;
    });

  if (is_brsa(p))
    r.law("boolean constant", [&]() -> W {
      for (int a = 0; a < n; ++a)
        if (A.join(a, A.imp(a, *A.f)) != A.t()) return tuple_str(A, {{"a", a}});
      return std::nullopt;
    });

  if (is_sugihara(p)) {
    const Elem t = A.t();
    r.law("idempotence", [&]() -> W {
      for (int a = 0; a < n; ++a)
        if (A.mul(a, a) != a) return tuple_str(A, {{"a", a}});
      return std::nullopt;
    });
    r.law("contraposition", [&]() -> W {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (A.imp(A.inv(x), y) != A.imp(A.inv(y), x)) return tuple_str(A, {{"x", x}, {"y", y}});
      return std::nullopt;
    });
    r.law("reduct normality", [&]() -> W {
      const Elem nt = A.inv(t);
      if (!A.leq(nt, t)) return "neg t above t";
      for (int a = 0; a < n; ++a) {
        if (!A.leq(A.meet(a, A.inv(a)), nt)) return tuple_str(A, {{"a", a}});
        if (!A.leq(t, A.join(a, A.inv(a)))) return tuple_str(A, {{"b", a}});
      }
      return std::nullopt;
    });
  }
  return r;
}

inline bool is_valid(const Algebra& A) { return validate(A).ok(); }

inline void require_valid(const Algebra& A) {
  auto r = validate(A);
  if (const Check* c = r.first_failure())
    throw Error(ErrorKind::Invalid, A.name + " fails " + c->law + (c->witness.empty() ? "" : " at " + c->witness));
}

inline void require_profile(const Algebra& A, bool ok, const char* wanted) {
  if (!ok) throw Error(ErrorKind::ProfileMismatch, A.name + " is " + profile_name(A.profile) + ", wanted " + wanted);
}

// Smallest subset containing `gens` and closed under every operation and
// constant present on A.
inline Bits subuniverse(const Algebra& A, Bits gens) {
  Bits s = gens;
  for (auto c : {A.unit, A.f, A.bot, A.top})
    if (c) s |= bit(*c);
  for (bool grew = true; grew;) {
    grew = false;
    Bits add = 0;
    for_each_bit(s, [&](int a) {
      if (A.neg) add |= bit(A.inv(a));
      for_each_bit(s, [&](int b) {
        add |= bit(A.meet(a, b)) | bit(A.join(a, b));
        if (A.mult) add |= bit(A.mul(a, b));
        if (A.arrow) add |= bit(A.imp(a, b));
      });
    });
    if (!is_subset(add, s)) {
      s |= add;
      grew = true;
    }
  }
  return s;
}

// Restriction of A to a subset closed under its operations. Elements keep
// their names and relative order.
inline Algebra restrict_to(const Algebra& A, Bits s, std::string name = {}) {
  if (subuniverse(A, s) != s) throw Error(ErrorKind::Invalid, "subset not closed under the operations");
  std::vector<int> keep = members(s);
  std::vector<int> pos(A.size(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) pos[keep[i]] = i;
  const int m = static_cast<int>(keep.size());
  auto sub = [&](const std::optional<Table>& t) -> std::optional<Table> {
    if (!t) return std::nullopt;
    return Table::generate(m, [&](int a, int b) { return pos[(*t)(keep[a], keep[b])]; });
  };
  auto c = [&](std::optional<Elem> e) -> std::optional<Elem> {
    if (!e) return std::nullopt;
    return pos[*e];
  };
  AlgebraParts p;
  p.name = name.empty() ? A.name : name;
  p.profile = A.profile;
  p.order = A.order.induced(s);
  p.mult = sub(A.mult);
  p.arrow = sub(A.arrow);
  p.unit = c(A.unit);
  if (A.neg) {
    std::vector<Elem> ng(m);
    for (int i = 0; i < m; ++i) ng[i] = pos[A.inv(keep[i])];
    p.neg = ng;
  }
  p.f = c(A.f);
  p.bot = c(A.bot);
  p.top = c(A.top);
  return assemble(std::move(p));
}

inline Algebra direct_product(const Algebra& A, const Algebra& B, std::string name = {}) {
  if (A.profile != B.profile) throw Error(ErrorKind::ProfileMismatch, "direct product of different profiles");
  const int na = A.size(), nb = B.size();
  check_carrier(na * nb);
  const int n = na * nb;
  auto enc = [&](int a, int b) { return a * nb + b; };
  std::vector<std::string> names;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) names.push_back("(" + A.name_of(a) + "," + B.name_of(b) + ")");
  AlgebraParts p;
  p.name = name.empty() ? A.name + "x" + B.name : name;
  p.profile = A.profile;
  p.order = Poset::from_relation(names, [&](int x, int y) {
    return A.leq(x / nb, y / nb) && B.leq(x % nb, y % nb);
  });
  auto both = [&](const std::optional<Table>& ta, const std::optional<Table>& tb) -> std::optional<Table> {
    if (!ta || !tb) return std::nullopt;
    return Table::generate(n, [&](int x, int y) { return enc((*ta)(x / nb, y / nb), (*tb)(x % nb, y % nb)); });
  };
  p.mult = both(A.mult, B.mult);
  p.arrow = both(A.arrow, B.arrow);
  auto c = [&](std::optional<Elem> a, std::optional<Elem> b) -> std::optional<Elem> {
    if (!a || !b) return std::nullopt;
    return enc(*a, *b);
  };
  p.unit = c(A.unit, B.unit);
  p.f = c(A.f, B.f);
  p.bot = c(A.bot, B.bot);
  p.top = c(A.top, B.top);
  if (A.neg && B.neg) {
    std::vector<Elem> ng(n);
    for (int x = 0; x < n; ++x) ng[x] = enc(A.inv(x / nb), B.inv(x % nb));
    p.neg = ng;
  }
  return assemble(std::move(p));
}

// Elements below the unit, with the residual truncated by meet with t.
inline Algebra negative_cone(const Algebra& A, std::string name = {}) {
  require_profile(A, is_residuated(A.profile), "a residuated profile");
  const Elem t = A.t();
  Bits cone = A.order.down(t);
  std::vector<int> keep = members(cone);
  std::vector<int> pos(A.size(), -1);
  const int m = static_cast<int>(keep.size());
  for (int i = 0; i < m; ++i) pos[keep[i]] = i;
  AlgebraParts p;
  p.name = name.empty() ? A.name + "_neg" : name;
  p.profile = Profile::CRL;
  p.order = A.order.induced(cone);
  p.mult = Table::generate(m, [&](int a, int b) { return pos[A.mul(keep[a], keep[b])]; });
  p.arrow = Table::generate(m, [&](int a, int b) { return pos[A.meet(A.imp(keep[a], keep[b]), t)]; });
  p.unit = pos[t];
  if (A.bot) p.bot = pos[*A.bot];
  return assemble(std::move(p));
}

struct NucleusResult {
  std::vector<Elem> table;
  Report report;
};

// N(a) = f -> a on a Brouwerian algebra, checked as a nucleus and for the
// three conditions that make (B, f) a bRSA.
inline NucleusResult nucleus_from_constant(const Algebra& B, Elem f) {
  require_profile(B, is_brouwerian(B.profile), "Brouwerian");
  using W = std::optional<std::string>;
  const int n = B.size();
  const Elem t = B.t();
  NucleusResult out;
  out.table.resize(n);
  for (int a = 0; a < n; ++a) out.table[a] = B.imp(f, a);
  const auto& N = out.table;
  auto nm = [&](Elem a) { return B.name_of(a); };
  Report& r = out.report;
  r.law("nucleus: inflationary", [&]() -> W {
    for (int a = 0; a < n; ++a)
      if (!B.leq(a, N[a])) return "a=" + nm(a);
    return std::nullopt;
  });
  r.law("nucleus: idempotent", [&]() -> W {
    for (int a = 0; a < n; ++a)
      if (N[N[a]] != N[a]) return "a=" + nm(a);
    return std::nullopt;
  });
  r.law("nucleus: monotone", [&]() -> W {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (B.leq(a, b) && !B.leq(N[a], N[b])) return "a=" + nm(a) + " b=" + nm(b);
    return std::nullopt;
  });
  r.law("nucleus: Na.Nb <= N(a.b)", [&]() -> W {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!B.leq(B.mul(N[a], N[b]), N[B.mul(a, b)])) return "a=" + nm(a) + " b=" + nm(b);
    return std::nullopt;
  });
  r.law("N(Na -> a) = t", [&]() -> W {
    for (int a = 0; a < n; ++a)
      if (N[B.imp(N[a], a)] != t) return "a=" + nm(a);
    return std::nullopt;
  });
  r.law("Na = t iff f <= a", [&]() -> W {
    for (int a = 0; a < n; ++a)
      if ((N[a] == t) != B.leq(f, a)) return "a=" + nm(a);
    return std::nullopt;
  });
  r.law("a v (a -> f) = t", [&]() -> W {
    for (int a = 0; a < n; ++a)
      if (B.join(a, B.imp(a, f)) != t) return "a=" + nm(a);
    return std::nullopt;
  });
  return out;
}

// Whether the principal filter of f is a Boolean lattice. The three
// equivalent forms are computed separately and must agree.
inline bool boolean_filter_check(const Algebra& B, Elem f) {
  require_profile(B, is_brouwerian(B.profile), "Brouwerian");
  const int n = B.size();
  const Elem t = B.t();
  Bits F = B.order.up(f);
  bool on_filter = true, everywhere = true, complemented = true;
  for (int a = 0; a < n; ++a) {
    bool law = B.join(a, B.imp(a, f)) == t;
    everywhere = everywhere && law;
    if (has(F, a)) {
      on_filter = on_filter && law;
      // a -> f lies in the filter and must be the complement of a there.
      Elem c = B.imp(a, f);
      bool comp = has(F, c) && B.meet(a, c) == f && B.join(a, c) == t;
      bool some = false;
      for_each_bit(F, [&](int d) { some = some || (B.meet(a, d) == f && B.join(a, d) == t); });
      if (comp != some) throw Error(ErrorKind::Invalid, "complement in the filter is not a -> f");
      complemented = complemented && some;
    }
  }
  if (on_filter != everywhere || everywhere != complemented)
    throw Error(ErrorKind::Invalid, "the characterizations of a Boolean filter disagree");
  return complemented;
}

// Prime filters of the lattice reduct. In a finite lattice every filter
// is principal, so the candidates are the up-sets of non-bottom join-prime
// elements. `generalized` adds the full carrier.
inline SubsetFamily prime_filters(const Algebra& L, bool generalized) {
  SubsetFamily fam{L.size(), {}};
  const Elem bot = *L.order.bottom();
  for (int a = 0; a < L.size(); ++a) {
    if (a == bot) continue;
    bool prime = true;
    for (int x = 0; x < L.size() && prime; ++x)
      for (int y = 0; y < L.size() && prime; ++y)
        if (L.leq(a, L.join(x, y)) && !L.leq(a, x) && !L.leq(a, y)) prime = false;
    if (prime) fam.members.push_back(L.order.up(a));
  }
  if (generalized) fam.members.push_back(L.order.all());
  fam.canonicalize();
  return fam;
}

// Name for a principal filter: "^" followed by its least element.
inline std::string filter_name(const Algebra& A, Bits x) {
  auto g = A.order.least_of(x);
  return g ? "^" + A.name_of(*g) : set_name(A.order, x);
}

}  // namespace rmwb
