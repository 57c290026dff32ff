#pragma once

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "core.hpp"

namespace rmwb {

// Finite partial order on dense indices 0..n-1. Row x of `up_` is the
// set of y with x <= y.
class Poset {
 public:
  Poset() = default;

  static Poset from_covers(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
    Poset p = skeleton(std::move(names));
    const int n = p.size();
    std::vector<Bits> succ(n, 0);
    for (const auto& [lo, hi] : covers) succ[p.index(lo)] |= bit(p.index(hi));
    // Reflexive-transitive closure, Warshall style on bit rows.
    for (int x = 0; x < n; ++x) p.up_[x] = succ[x] | bit(x);
    for (int k = 0; k < n; ++k)
      for (int x = 0; x < n; ++x)
        if (has(p.up_[x], k)) p.up_[x] |= p.up_[k];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y && p.leq(x, y) && p.leq(y, x))
          throw Error(ErrorKind::CycleDetected, p.names_[x] + " and " + p.names_[y]);
    p.finish();
    return p;
  }

  // Builds from an explicit relation; it must already be a partial order.
  template <class Leq>
  static Poset from_relation(std::vector<std::string> names, Leq&& leq) {
    Poset p = skeleton(std::move(names));
    const int n = p.size();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (leq(x, y)) p.up_[x] |= bit(y);
    for (int x = 0; x < n; ++x) {
      if (!p.leq(x, x)) throw Error(ErrorKind::Invalid, "relation not reflexive at " + p.names_[x]);
      for (int y = 0; y < n; ++y) {
        if (x != y && p.leq(x, y) && p.leq(y, x))
          throw Error(ErrorKind::CycleDetected, p.names_[x] + " and " + p.names_[y]);
        if (p.leq(x, y) && !is_subset(p.up_[y], p.up_[x]))
          throw Error(ErrorKind::Invalid, "relation not transitive through " + p.names_[y]);
      }
    }
    p.finish();
    return p;
  }

  int size() const { return static_cast<int>(names_.size()); }
  Bits all() const { return full_set(size()); }
  bool leq(int x, int y) const { return has(up_[x], y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  Bits up(int x) const { return up_[x]; }
  Bits down(int x) const { return down_[x]; }
  Bits comparable_with(int x) const { return up_[x] | down_[x]; }

  const std::string& name(int x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<int> find(std::string_view nm) const {
    auto it = index_.find(std::string(nm));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index(std::string_view nm) const {
    auto i = find(nm);
    if (!i) throw Error(ErrorKind::UnknownName, std::string(nm));
    return *i;
  }

  Bits up_closure(Bits s) const {
    Bits r = 0;
    for_each_bit(s, [&](int x) { r |= up_[x]; });
    return r;
  }
  Bits down_closure(Bits s) const {
    Bits r = 0;
    for_each_bit(s, [&](int x) { r |= down_[x]; });
    return r;
  }
  bool is_up_set(Bits s) const { return up_closure(s) == s; }
  bool is_down_set(Bits s) const { return down_closure(s) == s; }

  Bits minimal() const {
    Bits r = 0;
    for (int x = 0; x < size(); ++x)
      if (down_[x] == bit(x)) r |= bit(x);
    return r;
  }
  Bits maximal() const {
    Bits r = 0;
    for (int x = 0; x < size(); ++x)
      if (up_[x] == bit(x)) r |= bit(x);
    return r;
  }

  // Least / greatest member of s, if s has one.
  std::optional<int> least_of(Bits s) const {
    std::optional<int> r;
    for_each_bit(s, [&](int x) {
      if (!r && is_subset(s, up_[x])) r = x;
    });
    return r;
  }
  std::optional<int> greatest_of(Bits s) const {
    std::optional<int> r;
    for_each_bit(s, [&](int x) {
      if (!r && is_subset(s, down_[x])) r = x;
    });
    return r;
  }
  std::optional<int> bottom() const { return least_of(all()); }
  std::optional<int> top() const { return greatest_of(all()); }

  std::optional<int> join(int x, int y) const { return least_of(up_[x] & up_[y]); }
  std::optional<int> meet(int x, int y) const { return greatest_of(down_[x] & down_[y]); }

  // Cover pairs (lower, upper) in index order.
  std::vector<std::pair<int, int>> covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (less(x, y) && (up_[x] & down_[y]) == (bit(x) | bit(y))) out.emplace_back(x, y);
    return out;
  }

  // Upper covers of x as a set.
  Bits upper_covers(int x) const {
    Bits r = 0;
    for (auto [a, b] : covers())
      if (a == x) r |= bit(b);
    return r;
  }

  // The subposet on s, renumbered in index order.
  Poset induced(Bits s) const {
    std::vector<int> keep = members(s);
    std::vector<std::string> nm;
    for (int x : keep) nm.push_back(names_[x]);
    return from_relation(std::move(nm), [&](int i, int j) { return leq(keep[i], keep[j]); });
  }

  bool operator==(const Poset& o) const { return names_ == o.names_ && up_ == o.up_; }

 private:
  static Poset skeleton(std::vector<std::string> names) {
    check_carrier(static_cast<int>(names.size()));
    Poset p;
    p.names_ = std::move(names);
    for (int i = 0; i < p.size(); ++i)
      if (!p.index_.emplace(p.names_[i], i).second)
        throw Error(ErrorKind::DuplicateName, p.names_[i]);
    p.up_.assign(p.size(), 0);
    return p;
  }

  void finish() {
    down_.assign(size(), 0);
    for (int x = 0; x < size(); ++x)
      for_each_bit(up_[x], [&](int y) { down_[y] |= bit(x); });
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

inline Poset poset_from_covers(std::vector<std::string> names,
                               const std::vector<std::pair<std::string, std::string>>& covers) {
  return Poset::from_covers(std::move(names), covers);
}

inline Poset chain(int n, const std::string& prefix = "c") {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 0; i < n; ++i) {
    names.push_back(prefix + std::to_string(i));
    if (i) cov.emplace_back(names[i - 1], names[i]);
  }
  return Poset::from_covers(names, cov);
}

// A family of subsets of a ground carrier, sorted ascending as 64-bit
// words (so the highest-indexed element is the most significant).
struct SubsetFamily {
  int ground = 0;
  std::vector<Bits> members;

  int size() const { return static_cast<int>(members.size()); }
  Bits operator[](int i) const { return members[i]; }
  auto begin() const { return members.begin(); }
  auto end() const { return members.end(); }

  std::optional<int> find(Bits s) const {
    auto it = std::lower_bound(members.begin(), members.end(), s);
    if (it == members.end() || *it != s) return std::nullopt;
    return static_cast<int>(it - members.begin());
  }
  int index_of(Bits s) const {
    auto i = find(s);
    if (!i) throw Error(ErrorKind::Invalid, "subset not in family");
    return *i;
  }

  void canonicalize() {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
};

inline bool is_forest(const Poset& p) {
  for (int x = 0; x < p.size(); ++x) {
    Bits u = p.up(x);
    bool chain_ok = true;
    for_each_bit(u, [&](int a) {
      if (!is_subset(u, p.comparable_with(a))) chain_ok = false;
    });
    if (!chain_ok) return false;
  }
  return true;
}

// All up-sets. Elements are decided in order of increasing |up(x)|, so
// every strict upper bound of x is settled before x; x may join only if
// all of them did. Each up-set is produced exactly once.
inline SubsetFamily up_sets(const Poset& p) {
  const int n = p.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return count(p.up(a)) < count(p.up(b)); });
  SubsetFamily fam{n, {}};
  std::function<void(int, Bits)> rec = [&](int k, Bits u) {
    if (k == n) {
      fam.members.push_back(u);
      return;
    }
    int x = order[k];
    rec(k + 1, u);
    if (is_subset(p.up(x) & ~bit(x), u)) rec(k + 1, u | bit(x));
  };
  rec(0, 0);
  fam.canonicalize();
  return fam;
}

inline Bits heyting_arrow_upsets(const Poset& p, Bits u, Bits v) {
  if (!p.is_up_set(u) || !p.is_up_set(v)) throw Error(ErrorKind::NotAnUpSet, "heyting arrow operand");
  Bits r = 0;
  for (int x = 0; x < p.size(); ++x)
    if (is_subset(p.up(x) & u, v)) r |= bit(x);
  return r;
}

inline std::string set_name(const Poset& p, Bits s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](int x) {
    if (!first) out += ',';
    out += p.name(x);
    first = false;
  });
  return out + "}";
}

}  // namespace rmwb
