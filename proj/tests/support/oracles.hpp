#pragma once

// Independent brute-force reference implementations used only by tests.
// Deliberately naive: the production code must agree with these on every
// input small enough to afford them.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "latkit/congruence.hpp"
#include "latkit/lattice.hpp"

namespace oracles {

// Every partition of {0..n-1} as a block-id vector in restricted-growth form
// (ids assigned by first occurrence). Bell(8) = 4140, so n <= 8 is cheap.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> ids(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.push_back(ids);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      ids[static_cast<size_t>(i)] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  rec(rec, 0, -1);
  return out;
}

// All congruences of lat by filtering every partition through the
// substitution property, checked pair-by-pair from the definition.
inline std::vector<latkit::Congruence> congruences_by_filter(const latkit::FiniteLattice& lat) {
  const int n = lat.size();
  std::vector<latkit::Congruence> out;
  for (const auto& ids : all_partitions(n)) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = x + 1; y < n && ok; ++y) {
        if (ids[static_cast<size_t>(x)] != ids[static_cast<size_t>(y)]) continue;
        for (int t = 0; t < n; ++t) {
          if (ids[static_cast<size_t>(lat.meet(x, t))] !=
                  ids[static_cast<size_t>(lat.meet(y, t))] ||
              ids[static_cast<size_t>(lat.join(x, t))] !=
                  ids[static_cast<size_t>(lat.join(y, t))]) {
            ok = false;
            break;
          }
        }
      }
    if (ok) out.push_back(latkit::Congruence(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// leq as an n*n boolean matrix, row-major: m[i*n+j] means i <= j.
inline bool is_transitive(const std::vector<char>& m, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!m[static_cast<size_t>(i) * n + j]) continue;
      for (int k = 0; k < n; ++k)
        if (m[static_cast<size_t>(j) * n + k] && !m[static_cast<size_t>(i) * n + k]) return false;
    }
  return true;
}

// Every pair must have a greatest common lower bound and a least common
// upper bound (checked from the definition, no meet tables involved).
inline bool is_lattice_order(const std::vector<char>& m, int n) {
  auto leq = [&](int i, int j) { return m[static_cast<size_t>(i) * n + j] != 0; };
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      int glb = -1, lub = -1;
      for (int c = 0; c < n; ++c) {
        if (leq(c, x) && leq(c, y)) {
          bool greatest = true;
          for (int d = 0; d < n; ++d)
            if (leq(d, x) && leq(d, y) && !leq(d, c)) {
              greatest = false;
              break;
            }
          if (greatest) glb = c;
        }
        if (leq(x, c) && leq(y, c)) {
          bool least = true;
          for (int d = 0; d < n; ++d)
            if (leq(x, d) && leq(y, d) && !leq(c, d)) {
              least = false;
              break;
            }
          if (least) lub = c;
        }
      }
      if (glb < 0 || lub < 0) return false;
    }
  return true;
}

// Canonical form: the minimum over all relabelings of the strict-less bit
// matrix packed row-major into a word. n <= 7 keeps the word in 49 bits.
inline uint64_t canonical(const std::vector<char>& m, int n) {
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  uint64_t best = ~0ull;
  do {
    uint64_t packed = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && m[static_cast<size_t>(perm[static_cast<size_t>(i)]) * n +
                        perm[static_cast<size_t>(j)]])
          packed |= 1ull << (i * n + j);
    best = std::min(best, packed);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

// Number of isomorphism classes of n-element lattices, counted the slow way:
// enumerate every transitive reflexive antisymmetric relation refining the
// index order (every poset admits such a labeling), keep the lattice orders,
// dedupe by canonical form under all relabelings. Usable through n = 6.
inline long count_lattices_by_enumeration(int n) {
  if (n == 1) return 1;
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<uint64_t> classes;
  for (uint64_t bits = 0; bits < (1ull << pairs); ++bits) {
    std::vector<char> m(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
    for (int s = 0; s < pairs; ++s)
      if ((bits >> s) & 1) {
        const auto [i, j] = slots[static_cast<size_t>(s)];
        m[static_cast<size_t>(i) * n + j] = 1;
      }
    if (!detail::is_transitive(m, n)) continue;
    if (!detail::is_lattice_order(m, n)) continue;
    classes.insert(detail::canonical(m, n));
  }
  return static_cast<long>(classes.size());
}

}  // namespace oracles
