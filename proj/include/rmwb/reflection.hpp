#pragma once

#include "natural.hpp"
#include "relevant.hpp"

namespace rmwb {

// Carrier bookkeeping for X u -D^c: the first |X| points are X in order,
// then one negative copy per non-designated point, in order.
struct Reflected {
  RelevantSpace space;
  std::vector<int> minus;   // the involution -, on all points
  std::vector<int> source;  // point of X each point comes from
};

inline Reflected reflect(const StructuredSpace& X) {
  if (X.flavor != Flavor::SugiharaUnpointed)
    throw Error(ErrorKind::ProfileMismatch, X.name + " is not an unpointed Sugihara space");
  require_valid(X);
  const Poset& P = X.order;
  const int n = X.size();
  std::vector<int> copy_of(n, -1);
  std::vector<std::string> names = P.names();
  std::vector<int> source;
  for (int x = 0; x < n; ++x) source.push_back(x);
  for (int x = 0; x < n; ++x) {
    if (has(X.D, x)) continue;
    copy_of[x] = static_cast<int>(names.size());
    std::string nm = "-" + P.name(x);
    while (std::find(names.begin(), names.end(), nm) != names.end()) nm = "-" + nm;
    names.push_back(nm);
    source.push_back(x);
  }
  const int m = static_cast<int>(names.size());
  check_carrier(m);
  auto in_x = [&](int p) { return p < n; };
  Reflected out;
  out.source = source;
  out.minus.resize(m);
  for (int p = 0; p < m; ++p) out.minus[p] = in_x(p) ? (has(X.D, p) ? p : copy_of[p]) : source[p];
  Poset order = Poset::from_relation(names, [&](int p, int q) {
    int x = source[p], y = source[q];
    if (in_x(p) && in_x(q)) return P.leq(x, y);
    if (!in_x(p) && !in_x(q)) return P.leq(y, x);
    if (!in_x(p)) return P.comparable(x, y);
    return false;
  });
  // |p| is the X-point p comes from.
  auto partial = [&](int p, int q) -> std::optional<int> {
    bool comparable = order.comparable(p, q);
    if ((in_x(p) && in_x(q)) || !comparable) return order.join(p, q);
    int ap = source[p], aq = source[q];
    if (ap == aq) return order.meet(p, q);
    if (order.less(ap, aq)) return q;
    if (order.less(aq, ap)) return p;
    return std::nullopt;
  };
  RelevantSpace& Y = out.space;
  Y.name = X.name + "^bt";
  Y.R.assign(static_cast<std::size_t>(m) * m, 0);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      if (auto s = partial(p, q)) Y.R[static_cast<std::size_t>(p) * m + q] = order.up(*s);
  Y.order = std::move(order);
  Y.prime = out.minus;
  Y.I = full_set(n);
  return out;
}

inline RelevantSpace reflect_space(const StructuredSpace& X) {
  RelevantSpace Y = reflect(X).space;
  require_valid(Y);
  return Y;
}

// Y_bt: the unit set I with fixed points of ' designated. Point i of the
// result is the i-th member of I.
inline StructuredSpace project_space(const RelevantSpace& Y) {
  require_valid(Y);
  StructuredSpace X;
  X.name = Y.name + "_bt";
  X.flavor = Flavor::SugiharaUnpointed;
  X.order = Y.order.induced(Y.I);
  auto pts = members(Y.I);
  for (int i = 0; i < static_cast<int>(pts.size()); ++i)
    if (Y.prime[pts[i]] == pts[i]) X.D |= bit(i);
  X.Q = comparability(X.order);
  require_valid(X);
  return X;
}

// Gamma: urquhart_dual(A) -> (project_space(urquhart_dual(A)))^bt,
// x |-> x on I and x |-> -(x') off I.
inline StructureMap gamma(const Algebra& A) {
  RelevantSpace U = urquhart_dual(A);
  StructuredSpace P = project_space(U);
  Reflected R = reflect(P);
  auto pts = members(U.I);
  auto pos = [&](int x) { return static_cast<int>(std::find(pts.begin(), pts.end(), x) - pts.begin()); };
  StructureMap out;
  for (int x = 0; x < U.size(); ++x)
    out.map.push_back(has(U.I, x) ? pos(x) : R.minus[pos(U.prime[x])]);
  out.report.merge(validate_relevant_iso(U, R.space, out.map), "gamma ");
  using W = std::optional<std::string>;
  out.report.law("gamma(x') = -gamma(x)", [&]() -> W {
    for (int x = 0; x < U.size(); ++x)
      if (out.map[U.prime[x]] != R.minus[out.map[x]]) return U.order.name(x);
    return std::nullopt;
  });
  return out;
}

// theta: (Y_bt)^bt -> Y, x |-> x on I and -x |-> x'.
inline StructureMap theta(const RelevantSpace& Y) {
  StructuredSpace P = project_space(Y);
  Reflected R = reflect(P);
  auto pts = members(Y.I);
  StructureMap out;
  for (int p = 0; p < R.space.size(); ++p) {
    int y = pts[R.source[p]];
    out.map.push_back(p < P.size() ? y : Y.prime[y]);
  }
  out.report.merge(validate_relevant_iso(R.space, Y, out.map), "theta ");
  return out;
}

// phi^bt: x |-> phi(x) on X, -x |-> -phi(x) on the copy.
inline std::vector<int> reflect_hom(const StructuredSpace& X, const StructuredSpace& Y, const std::vector<int>& phi) {
  Reflected RX = reflect(X), RY = reflect(Y);
  std::vector<int> m;
  for (int p = 0; p < RX.space.size(); ++p) {
    int v = phi[RX.source[p]];
    m.push_back(p < X.size() ? v : RY.minus[v]);
  }
  return m;
}

// phi_bt: restriction to the unit sets.
inline std::vector<int> project_hom(const RelevantSpace& X, const RelevantSpace& Y, const std::vector<int>& phi) {
  auto px = members(X.I), py = members(Y.I);
  std::vector<int> m;
  for (int x : px) {
    auto it = std::find(py.begin(), py.end(), phi[x]);
    if (it == py.end()) throw Error(ErrorKind::Invalid, "map does not send I into I");
    m.push_back(static_cast<int>(it - py.begin()));
  }
  return m;
}

}  // namespace rmwb
