#pragma once

#include "morphism.hpp"

namespace rmwb {

// All partial orders on {0..n-1}, by brute force over strict relations.
inline std::vector<Poset> all_posets(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) slots.emplace_back(a, b);
  if (slots.size() >= 31) throw Error(ErrorKind::CarrierTooLarge, "poset sweep is limited to 6 points");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<Poset> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Bits> up(n);
    for (int i = 0; i < n; ++i) up[i] = bit(i);
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1u) up[slots[k].first] |= bit(slots[k].second);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b : members(up[a])) {
        if (b != a && has(up[b], a)) ok = false;
        if (!is_subset(up[b], up[a])) ok = false;
      }
    if (ok) out.push_back(Poset::from_relation(names, [&](int a, int b) { return has(up[a], b); }));
  }
  return out;
}

// Validated bRSAs with at most max_n elements, one per isomorphism class,
// ordered by size and then by discovery.
inline std::vector<Algebra> small_brsas(int max_n) {
  std::vector<Algebra> out;
  for (int n = 1; n <= max_n; ++n)
    for (const Poset& p : all_posets(n)) {
      if (!p.top() || !p.bottom()) continue;
      for (int f = 0; f < n; ++f) {
        AlgebraParts parts;
        parts.name = "B" + std::to_string(out.size());
        parts.profile = Profile::bRSA;
        parts.order = p;
        parts.f = f;
        Algebra A;
        try {
          A = assemble(std::move(parts));
        } catch (const Error&) {
          continue;
        }
        if (!is_valid(A)) continue;
        bool fresh = true;
        for (const auto& B : out)
          if (find_isomorphism(A, B)) {
            fresh = false;
            break;
          }
        if (fresh) out.push_back(std::move(A));
      }
    }
  return out;
}

}  // namespace rmwb
