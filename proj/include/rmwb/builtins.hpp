#pragma once

#include <cstdlib>

#include "algebra.hpp"

namespace rmwb {

namespace detail {

// Carrier of S_n as integers in ascending order.
inline std::vector<int> sugihara_values(int n) {
  std::vector<int> v;
  int m = n / 2;
  for (int k = -m; k <= m; ++k)
    if (n % 2 == 1 || k != 0) v.push_back(k);
  return v;
}

inline int sugihara_mult(int x, int y) {
  if (std::abs(x) > std::abs(y)) return x;
  if (std::abs(x) < std::abs(y)) return y;
  return std::min(x, y);
}

inline int sugihara_arrow(int x, int y) { return x <= y ? std::max(-x, y) : std::min(-x, y); }

}  // namespace detail

// The n-element Sugihara chain. Odd n has unit 0, even n has unit 1.
inline Algebra sugihara_chain(int n) {
  if (n < 1) throw Error(ErrorKind::UnknownBuiltin, "S_n needs n >= 1");
  check_carrier(n);
  std::vector<int> v = detail::sugihara_values(n);
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < v.size(); ++i) {
    names.push_back(std::to_string(v[i]));
    if (i) covers.emplace_back(names[i - 1], names[i]);
  }
  auto pos = [&](int k) { return static_cast<Elem>(std::find(v.begin(), v.end(), k) - v.begin()); };
  AlgebraParts p;
  p.name = "S" + std::to_string(n);
  p.profile = Profile::Sugihara;
  p.order = Poset::from_covers(names, covers);
  p.mult = Table::generate(n, [&](int a, int b) { return pos(detail::sugihara_mult(v[a], v[b])); });
  p.arrow = Table::generate(n, [&](int a, int b) { return pos(detail::sugihara_arrow(v[a], v[b])); });
  p.unit = pos(n % 2 ? 0 : 1);
  std::vector<Elem> neg;
  for (int k : v) neg.push_back(pos(-k));
  p.neg = neg;
  return assemble(std::move(p));
}

// The eight-element nonlinear Sugihara monoid inside S_5 x S_4, computed
// coordinatewise from the chain formulas.
inline Algebra builtin_E() {
  const std::vector<std::pair<int, int>> pts = {{-2, -2}, {-1, -1}, {-1, 1}, {0, -1},
                                                {0, 1},   {1, -1},  {1, 1},  {2, 2}};
  const int n = static_cast<int>(pts.size());
  std::vector<std::string> names;
  for (auto [x, y] : pts) names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  auto pos = [&](std::pair<int, int> q) {
    auto it = std::find(pts.begin(), pts.end(), q);
    if (it == pts.end()) throw Error(ErrorKind::Invalid, "E is not closed");
    return static_cast<Elem>(it - pts.begin());
  };
  AlgebraParts p;
  p.name = "E";
  p.profile = Profile::Sugihara;
  p.order = Poset::from_relation(names, [&](int a, int b) {
    return pts[a].first <= pts[b].first && pts[a].second <= pts[b].second;
  });
  p.mult = Table::generate(n, [&](int a, int b) {
    return pos({detail::sugihara_mult(pts[a].first, pts[b].first), detail::sugihara_mult(pts[a].second, pts[b].second)});
  });
  p.arrow = Table::generate(n, [&](int a, int b) {
    return pos({detail::sugihara_arrow(pts[a].first, pts[b].first), detail::sugihara_arrow(pts[a].second, pts[b].second)});
  });
  p.unit = pos({0, 1});
  std::vector<Elem> neg;
  for (auto [x, y] : pts) neg.push_back(pos({-x, -y}));
  p.neg = neg;
  return assemble(std::move(p));
}

// The negative cone of E as a bRS-algebra on letters a < b < {c, f} < t.
inline Algebra builtin_E_neg() {
  AlgebraParts p;
  p.name = "E_neg";
  p.profile = Profile::bRSA;
  p.order = Poset::from_covers({"a", "b", "c", "f", "t"}, {{"a", "b"}, {"b", "c"}, {"b", "f"}, {"c", "t"}, {"f", "t"}});
  p.f = p.order.index("f");
  return assemble(std::move(p));
}

inline std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (int n = 2; n <= 8; ++n) out.push_back("S" + std::to_string(n));
  out.insert(out.end(), {"E", "E_bot", "E_neg"});
  return out;
}

inline Algebra builtin(std::string_view name) {
  std::string s(name);
  if (s.size() >= 2 && s[0] == 'S') {
    std::string digits = s.substr(s[1] == '_' ? 2 : 1);
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int n = std::stoi(digits);
      if (n >= 2 && n <= 8) return sugihara_chain(n);
    }
  }
  if (s == "E") return builtin_E();
  if (s == "E_bot") {
    Algebra e = with_bounds(builtin_E());
    e.name = "E_bot";
    return e;
  }
  if (s == "E_neg") return builtin_E_neg();
  throw Error(ErrorKind::UnknownBuiltin, s);
}

}  // namespace rmwb
