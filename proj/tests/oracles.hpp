#pragma once

// Deliberately slow reference implementations. Nothing here calls into the
// library's algorithms beyond reading the order and operation tables.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "latcon/congruence.hpp"
#include "latcon/lattice.hpp"

namespace oracle {

using latcon::Elem;
using latcon::FiniteLattice;
using Relation = std::vector<std::vector<bool>>;

// Block label per element, blocks numbered by least member.
inline std::vector<std::size_t> labels_of(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != n) continue;
    for (std::size_t y = x; y < n; ++y)
      if (r[x][y]) label[y] = next;
    ++next;
  }
  return label;
}

// Grow {(a,b)} by reflexivity, symmetry, transitivity and substitution,
// rescanning every pair until a full pass adds nothing.
inline std::vector<std::size_t> naive_closure(const FiniteLattice& l, Elem a, Elem b) {
  const std::size_t n = l.size();
  Relation r(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) r[x][x] = true;
  r[a][b] = r[b][a] = true;
  bool changed = true;
  auto add = [&](std::size_t x, std::size_t y) {
    if (!r[x][y]) {
      r[x][y] = r[y][x] = true;
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!r[x][y]) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (r[y][z]) add(x, z);
          add(l.meet(x, z), l.meet(y, z));
          add(l.join(x, z), l.join(y, z));
        }
      }
  }
  return labels_of(r);
}

inline bool substitution_holds(const FiniteLattice& l, const std::vector<std::size_t>& label) {
  const std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (label[x] != label[y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (label[l.meet(x, z)] != label[l.meet(y, z)]) return false;
        if (label[l.join(x, z)] != label[l.join(y, z)]) return false;
      }
    }
  return true;
}

// Every partition (restricted growth strings) that has the substitution
// property, canonically labelled.
inline std::vector<std::vector<std::size_t>> all_congruences(const FiniteLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> rgs(n, 0);
  auto visit = [&](auto&& self, std::size_t i, std::size_t maxlabel) -> void {
    if (i == n) {
      if (substitution_holds(l, rgs)) out.push_back(rgs);
      return;
    }
    for (std::size_t v = 0; v <= maxlabel + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxlabel, v));
    }
  };
  if (n == 0) return out;
  rgs[0] = 0;
  visit(visit, 1, 0);
  return out;
}

// Smallest partition among `all` identifying a and b.
inline std::vector<std::size_t> smallest_containing(
    const std::vector<std::vector<std::size_t>>& all, Elem a, Elem b) {
  const std::vector<std::size_t>* best = nullptr;
  std::size_t best_blocks = 0;
  for (const auto& c : all) {
    if (c[a] != c[b]) continue;
    const std::size_t blocks = *std::max_element(c.begin(), c.end()) + 1;
    if (!best || blocks > best_blocks) {
      best = &c;
      best_blocks = blocks;
    }
  }
  return *best;
}

// ----- lattice counting by brute force over labelled posets -----

// Full order on n = k + 2 points: 0 is index 0, 1 is index n - 1.
using Order = std::vector<std::vector<bool>>;

inline bool has_all_joins_and_meets(const Order& le) {
  const std::size_t n = le.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> ub, lb;
      for (std::size_t z = 0; z < n; ++z) {
        if (le[x][z] && le[y][z]) ub.push_back(z);
        if (le[z][x] && le[z][y]) lb.push_back(z);
      }
      auto has_least = [&](const std::vector<std::size_t>& s, bool up) {
        for (std::size_t c : s) {
          bool ok = true;
          for (std::size_t d : s) ok = ok && (up ? le[c][d] : le[d][c]);
          if (ok) return true;
        }
        return false;
      };
      if (!has_least(ub, true) || !has_least(lb, false)) return false;
    }
  return true;
}

inline std::string canonical(const Order& le) {
  const std::size_t n = le.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  // Only inner points move; bounds are fixed.
  do {
    std::string s;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) s += le[perm[x]][perm[y]] ? '1' : '0';
    if (best.empty() || s < best) best = s;
  } while (n > 2 && std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

// Number of isomorphism classes of lattices with n elements, found by
// trying every relation on the inner points.
inline std::size_t count_lattices(std::size_t n) {
  if (n <= 2) return 1;
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) pairs.emplace_back(i, j);
  std::set<std::string> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) lt[pairs[b].first][pairs[b].second] = true;
    bool order = true;
    for (std::size_t i = 0; i < k && order; ++i)
      for (std::size_t j = 0; j < k && order; ++j) {
        if (lt[i][j] && lt[j][i]) order = false;
        for (std::size_t m = 0; m < k && order; ++m)
          if (lt[i][j] && lt[j][m] && !lt[i][m]) order = false;
      }
    if (!order) continue;
    Order le(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) {
      le[0][x] = true;
      le[x][n - 1] = true;
      le[x][x] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (lt[i][j]) le[i + 1][j + 1] = true;
    if (has_all_joins_and_meets(le)) classes.insert(canonical(le));
  }
  return classes.size();
}

// Order-isomorphism by trying every bijection. Small lattices only.
inline bool isomorphic_by_permutation(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = a.leq(x, y) == b.leq(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// N5 equations written out directly.
inline bool n5_equations(const FiniteLattice& l, const latcon::N5Witness& w) {
  const std::vector<Elem> all{w.bottom, w.side, w.low, w.high, w.top};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) return false;
  return l.lt(w.low, w.high) && l.meet(w.side, w.high) == w.bottom &&
         l.meet(w.side, w.low) == w.bottom && l.join(w.side, w.low) == w.top &&
         l.join(w.side, w.high) == w.top;
}

}  // namespace oracle
