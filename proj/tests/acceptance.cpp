// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <iostream>

#include "corpus.hpp"
#include "oracle.hpp"

using namespace rmwb;

namespace {

using Failure = std::optional<std::string>;

std::string why(const Report& r, const std::string& where) {
  const Check* c = r.first_failure();
  return where + ": " + c->law + (c->witness.empty() ? "" : " [" + c->witness + "]");
}

std::set<std::string> carrier(const Algebra& A) { return {A.order.names().begin(), A.order.names().end()}; }

// Covers computed from a leq predicate by brute force.
std::set<std::pair<std::string, std::string>> covers_of(const Poset& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < p.size(); ++c)
        if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) cover = false;
      if (cover) out.insert({p.name(a), p.name(b)});
    }
  return out;
}

Failure criterion1() {
  Algebra E = builtin("E");
  if (E.profile != Profile::Sugihara) return "E is not profiled Sugihara";
  if (!validate(E).ok()) return why(validate(E), "E");
  const std::set<std::string> want{"(-2,-2)", "(-1,-1)", "(-1,1)", "(0,-1)", "(0,1)", "(1,-1)", "(1,1)", "(2,2)"};
  if (carrier(E) != want) return "E carrier differs";
  // The Hasse diagram is the componentwise order of S5 x S4 on these pairs.
  auto split = [](const std::string& s) {
    auto comma = s.find(',');
    return std::pair<int, int>{std::stoi(s.substr(1, comma - 1)), std::stoi(s.substr(comma + 1))};
  };
  std::vector<std::string> names(want.begin(), want.end());
  Poset prod = Poset::from_relation(names, [&](int i, int j) {
    auto [a, b] = split(names[i]);
    auto [c, d] = split(names[j]);
    return a <= c && b <= d;
  });
  if (covers_of(E.order) != covers_of(prod)) return "E Hasse diagram differs from the product order";
  for (int n = 2; n <= 8; ++n) {
    Algebra S = builtin("S" + std::to_string(n));
    if (!validate(S).ok()) return why(validate(S), S.name);
    for (int a = 0; a < S.size(); ++a)
      for (int b = 0; b < S.size(); ++b) {
        int va = std::stoi(S.name_of(a)), vb = std::stoi(S.name_of(b));
        // Chain formulas: product by absolute value with meet on ties, and
        // the residual as the greatest c with a.c <= b.
        int want_mul = std::abs(va) > std::abs(vb) ? va : std::abs(vb) > std::abs(va) ? vb : std::min(va, vb);
        if (std::stoi(S.name_of(S.mul(a, b))) != want_mul) return S.name + " product at " + S.name_of(a) + "," + S.name_of(b);
        int r = oracle::residual(S, a, b);
        if (r < 0 || S.imp(a, b) != r) return S.name + " residual at " + S.name_of(a) + "," + S.name_of(b);
      }
  }
  return std::nullopt;
}

Failure criterion2() {
  Algebra E = builtin("E");
  Algebra C = bowtie_down(E);
  Elem f = *C.f;
  const std::map<std::string, std::string> N{
      {"(0,1)", "(0,1)"}, {"(0,-1)", "(0,1)"}, {"(-1,-1)", "(-1,1)"}, {"(-1,1)", "(-1,1)"}, {"(-2,-2)", "(-2,-2)"}};
  for (auto& [a, na] : N)
    if (C.name_of(C.imp(f, C.elem(a))) != na) return "N" + a + " is " + C.name_of(C.imp(f, C.elem(a)));
  Algebra B = builtin("E_neg");
  if (!oracle::isomorphic(B, C)) return "the cone of E is not isomorphic to E_neg";
  const std::set<std::string> sigma{"(a,t)", "(b,t)", "(c,t)", "(f,t)", "(t,t)", "(t,a)", "(t,c)", "(f,c)"};
  const std::set<std::string> up{"(a,t)", "(t,a)", "(b,t)", "(t,b)", "(t,f)", "(f,t)", "(f,c)", "(c,f)"};
  if (carrier(sigma_monoid(B)) != sigma) return "sigma carrier differs";
  if (carrier(bowtie_up(B)) != up) return "bowtie carrier differs";
  std::vector<std::string> diff;
  std::set_symmetric_difference(sigma.begin(), sigma.end(), up.begin(), up.end(), std::back_inserter(diff));
  int only_sigma = 0;
  for (auto& d : diff) only_sigma += sigma.count(d);
  if (diff.size() != 6 || only_sigma != 3) return "symmetric difference has size " + std::to_string(diff.size());
  return std::nullopt;
}

Failure criterion3() {
  StructuredSpace X = dual_space(bowtie_down(builtin("E")));
  if (X.size() != 4) return "dual has " + std::to_string(X.size()) + " points";
  if (members(X.D).size() != 1) return "D has size " + std::to_string(members(X.D).size());
  std::vector<int> maxima, minima;
  for (int x = 0; x < X.size(); ++x) {
    if (X.order.up(x) == bit(x)) maxima.push_back(x);
    if (X.order.down(x) == bit(x)) minima.push_back(x);
  }
  if (maxima.size() != 1 || minima.size() != 2) return "not one top over two leaves";
  if (X.order.comparable(minima[0], minima[1])) return "leaves are comparable";
  auto cov = covers_of(X.order);
  int middle = -1;
  for (auto& [a, b] : cov)
    if (X.order.index(b) == maxima[0]) middle = middle < 0 ? X.order.index(a) : -2;
  if (middle < 0) return "top does not cover exactly one node";
  for (int leaf : minima)
    if (!cov.count({X.order.name(leaf), X.order.name(middle)})) return "middle node does not cover both leaves";
  return std::nullopt;
}

Failure criterion4() {
  StructuredSpace X = dw_dual(builtin("E"));
  if (X.size() != 4 || members(X.D).size() != 1) return "dw_dual(E) has the wrong size or D";
  StructuredSpace Xb = dw_dual(builtin("E_bot"));
  if (Xb.size() != 3) return "dw_dual(E_bot) has " + std::to_string(Xb.size()) + " points";
  for (const auto& h : dw_points(builtin("E_bot")))
    if (std::all_of(h.map.begin(), h.map.end(), [](Elem v) { return v == kZero; })) return "constant map present";
  return std::nullopt;
}

Failure criterion5() {
  Algebra Eb = builtin("E_bot");
  RelevantSpace R = reflect_space(dw_dual(Eb));
  if (R.size() != 5) return "reflected space has " + std::to_string(R.size()) + " points";
  RelevantSpace U = urquhart_dual(Eb);
  auto iso = find_relevant_isomorphism(R, U);
  if (!iso) return "no isomorphism to the Urquhart dual";
  Report r = validate_relevant_iso(R, U, *iso);
  if (!r.ok()) return why(r, "witness");
  return std::nullopt;
}

Failure criterion6() {
  for (const auto& A : corpus::sugihara()) {
    Algebra B = bowtie_down(A);
    Algebra back = bowtie_up(B);
    auto w = find_isomorphism(A, back);
    if (!w) return A.name + ": (A_bt)^bt not isomorphic";
    if (Report r = validate_iso(A, back, w->map); !r.ok()) return why(r, A.name + " twist");
    Algebra down = bowtie_down(bowtie_up(B));
    auto wb = find_isomorphism(B, down);
    if (!wb) return B.name + ": (B^bt)_bt not isomorphic";
    if (Report r = validate_iso(B, down, wb->map); !r.ok()) return why(r, B.name + " twist");
    if (Report r = validate_iso(B, dual_algebra(dual_space(B)), sigma_iso(B).map); !r.ok()) return why(r, B.name + " sigma");
    StructuredSpace X = dual_space(B);
    if (Report r = validate_space_iso(X, dual_space(dual_algebra(X)), counit_iso(X)); !r.ok())
      return why(r, B.name + " counit");
    StructuredSpace DW = dw_dual(A);
    if (Report r = validate_iso(A, plus_algebra(DW), eval_algebra(A).map); !r.ok()) return why(r, A.name + " eval");
    if (Report r = validate_space_iso(DW, dw_dual(plus_algebra(DW)), eval_space(DW)); !r.ok())
      return why(r, A.name + " space eval");
  }
  for (const auto& A : corpus::bounded_sugihara()) {
    StructuredSpace X = dw_dual(A);
    RelevantSpace Y = reflect_space(X);
    for (const RelevantSpace& Z : {Y, urquhart_dual(A)})
      if (Report r = theta(Z).report; !r.ok()) return why(r, Z.name + " theta");
    StructuredSpace back = project_space(Y);
    if (back.order.names() != X.order.names() || back.D != X.D) return X.name + ": (X^bt)_bt differs from X";
    if (Report r = validate_space_iso(X, back, identity_map(X.size())); !r.ok()) return why(r, X.name + " identity");
  }
  return std::nullopt;
}

Failure criterion7() {
  for (const auto& A : corpus::bounded_sugihara()) {
    auto pts = oracle::prime_filters(A, true);
    if (A.name == "S8" && pts.size() != 8) return "S8 has " + std::to_string(pts.size()) + " filters";
    for (Bits x : pts)
      for (Bits y : pts)
        if (filter_mult_cases(A, x, y) != oracle::complex_product(A, x, y))
          return A.name + " at " + set_name(A.order, x) + " " + set_name(A.order, y);
  }
  return std::nullopt;
}

Failure criterion8() {
  auto bgas = corpus::bgas();
  if (bgas.empty()) return "no bGAs";
  for (const auto& B : bgas) {
    Report r = nuclear_checks(B);
    if (!r.ok()) return why(r, B.name);
    int seen = 0;
    for (const auto& c : r.checks())
      seen += c.law == "R from N^-1 equals <~" || c.law == "image of <~ is the complement of D";
    if (seen != 2) return B.name + ": nuclear laws missing from the report";
  }
  return std::nullopt;
}

Failure criterion9() {
  for (const auto& B : corpus::brsas()) {
    Delta d = delta(B);
    if (!d.report.ok()) return why(d.report, B.name + " delta");
    bool inv = false;
    for (const auto& c : d.report.checks()) inv = inv || c.law == "neg delta(p) = delta(~p)";
    if (!inv) return B.name + ": involution law not checked";
  }
  for (const auto& A : corpus::sugihara()) {
    StructuredSpace X = dw_dual(A);
    if (Report r = validate_iso(bowtie_up(dual_algebra(X)), plus_algebra(X), mu(X).map); !r.ok()) return why(r, A.name + " mu");
    if (Report r = xi(A).report; !r.ok()) return why(r, A.name + " xi");
    if (Report r = psi(A).report; !r.ok()) return why(r, A.name + " psi");
  }
  for (const auto& A : corpus::bounded_sugihara())
    if (Report r = gamma(A).report; !r.ok()) return why(r, A.name + " gamma");
  return std::nullopt;
}

Failure criterion10() {
  // Isomorphism classes of bRSAs on at most four elements, frozen.
  constexpr int kFrozen = 10;
  auto models = small_brsas(4);
  if (static_cast<int>(models.size()) != kFrozen) return "tool found " + std::to_string(models.size());
  if (int n = oracle::count_brsas(4); n != kFrozen) return "independent count is " + std::to_string(n);
  for (const auto& B : models) {
    if (Report r = validate(B); !r.ok()) return why(r, B.name);
    Algebra back = bowtie_down(bowtie_up(B));
    auto w = find_isomorphism(B, back);
    if (!w) return B.name + ": twist round trip not isomorphic";
    if (Report r = validate_iso(B, back, w->map); !r.ok()) return why(r, B.name + " twist");
    if (Report r = delta(B).report; !r.ok()) return why(r, B.name + " delta");
  }
  return std::nullopt;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Failure (*)()>> criteria{
      {"builtin E and S2..S8 validate with their formulas", criterion1},
      {"cone of E, its nucleus, and both pair lists", criterion2},
      {"Esakia dual of the cone of E", criterion3},
      {"natural duals of E and E_bot", criterion4},
      {"reflection of the E_bot dual matches its Urquhart dual", criterion5},
      {"round trips with witnesses on all builtins", criterion6},
      {"filter product case formula equals the complex product", criterion7},
      {"nuclear relation on every derived bGA", criterion8},
      {"delta, mu, xi, psi and Gamma are isomorphisms", criterion9},
      {"small-model sweep of bRSAs up to four elements", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = criteria[i].second();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (f ? "FAIL" : "PASS") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (f) std::cout << ": " << *f;
    std::cout << " (" << ms << " ms)\n";
    failures += f.has_value();
  }
  return failures == 0 ? 0 : 1;
}
