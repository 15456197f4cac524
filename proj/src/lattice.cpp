#include "latcon/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace latcon {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DuplicateElement: return "DuplicateElement";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::NotTransitiveReduction: return "NotTransitiveReduction";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NoBoundElement: return "NoBoundElement";
    case Errc::ConLTooLarge: return "ConLTooLarge";
    case Errc::NotGraded: return "NotGraded";
    case Errc::EdgesCross: return "EdgesCross";
    case Errc::DuplicateXpos: return "DuplicateXpos";
    case Errc::NotAnSpsDiagram: return "NotAnSpsDiagram";
    case Errc::NotACorner: return "NotACorner";
    case Errc::NoCorners: return "NoCorners";
    case Errc::NotACoveringPair: return "NotACoveringPair";
    case Errc::InternalContradiction: return "InternalContradiction";
    case Errc::InvalidChain: return "InvalidChain";
    case Errc::UnknownFixture: return "UnknownFixture";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

FiniteLattice FiniteLattice::from_covers(std::vector<std::string> elements,
                                         const std::vector<Cover>& covers) {
  FiniteLattice l;
  l.ids_ = std::move(elements);
  for (Elem i = 0; i < l.ids_.size(); ++i) {
    if (!l.index_.emplace(l.ids_[i], i).second) {
      throw Error(Errc::DuplicateElement, l.ids_[i]);
    }
  }
  const std::size_t n = l.ids_.size();
  if (n == 0) throw Error(Errc::NoBoundElement, "empty element list");

  std::set<std::pair<Elem, Elem>> seen;
  for (const auto& [lo, hi] : covers) {
    auto a = l.find(lo);
    auto b = l.find(hi);
    if (!a) throw Error(Errc::UnknownElement, lo);
    if (!b) throw Error(Errc::UnknownElement, hi);
    if (*a == *b) throw Error(Errc::CycleDetected, lo + " < " + hi);
    if (!seen.emplace(*a, *b).second) {
      throw Error(Errc::NotTransitiveReduction, "repeated cover " + lo + " " + hi);
    }
    l.primes_.push_back({*a, *b});
  }
  l.build_tables();
  return l;
}

void FiniteLattice::build_tables() {
  const std::size_t n = ids_.size();
  upper_.assign(n, {});
  lower_.assign(n, {});
  cover_.assign(n * n, 0);
  for (auto p : primes_) {
    upper_[p.lo].push_back(p.hi);
    lower_[p.hi].push_back(p.lo);
    cover_[p.lo * n + p.hi] = 1;
  }
  for (auto& v : upper_) std::sort(v.begin(), v.end());
  for (auto& v : lower_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; elements left over sit on a cycle.
  std::vector<std::size_t> indeg(n, 0);
  for (auto p : primes_) ++indeg[p.hi];
  std::vector<Elem> topo;
  topo.reserve(n);
  for (Elem x = 0; x < n; ++x)
    if (indeg[x] == 0) topo.push_back(x);
  for (std::size_t head = 0; head < topo.size(); ++head) {
    for (Elem y : upper_[topo[head]])
      if (--indeg[y] == 0) topo.push_back(y);
  }
  if (topo.size() != n) {
    for (Elem x = 0; x < n; ++x)
      if (indeg[x] != 0) throw Error(Errc::CycleDetected, "through " + ids_[x]);
  }

  leq_.assign(n * n, 0);
  height_.assign(n, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Elem x = *it;
    leq_[x * n + x] = 1;
    for (Elem y : upper_[x])
      for (Elem z = 0; z < n; ++z)
        if (leq_[y * n + z]) leq_[x * n + z] = 1;
  }
  for (Elem x : topo)
    for (Elem y : upper_[x]) height_[y] = std::max(height_[y], height_[x] + 1);

  for (auto p : primes_) {
    for (Elem z = 0; z < n; ++z) {
      if (z != p.lo && z != p.hi && leq(p.lo, z) && leq(z, p.hi)) {
        throw Error(Errc::NotTransitiveReduction,
                    ids_[p.lo] + " < " + ids_[z] + " < " + ids_[p.hi]);
      }
    }
  }

  auto find_bound = [&](bool least) -> std::optional<Elem> {
    for (Elem x = 0; x < n; ++x) {
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y) ok = least ? leq(x, y) : leq(y, x);
      if (ok) return x;
    }
    return std::nullopt;
  };
  auto lo = find_bound(true);
  auto hi = find_bound(false);
  if (!lo) throw Error(Errc::NoBoundElement, "no least element");
  if (!hi) throw Error(Errc::NoBoundElement, "no greatest element");
  bottom_ = *lo;
  top_ = *hi;

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      // Bounds exist, so start from them and climb toward the best candidate.
      Elem glb = bottom_, lub = top_;
      for (Elem z = 0; z < n; ++z) {
        if (leq(z, x) && leq(z, y) && leq(glb, z)) glb = z;
        if (leq(x, z) && leq(y, z) && leq(z, lub)) lub = z;
      }
      for (Elem z = 0; z < n; ++z) {
        if ((leq(z, x) && leq(z, y) && !leq(z, glb)) || (leq(x, z) && leq(y, z) && !leq(lub, z))) {
          throw Error(Errc::NotALattice, ids_[x] + " " + ids_[y]);
        }
      }
      meet_[x * n + y] = meet_[y * n + x] = glb;
      join_[x * n + y] = join_[y * n + x] = lub;
    }
  }
}

Elem FiniteLattice::elem(std::string_view id) const {
  auto e = find(id);
  if (!e) throw Error(Errc::UnknownElement, std::string(id));
  return *e;
}

std::optional<Elem> FiniteLattice::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PrimeInterval FiniteLattice::prime(std::string_view lo, std::string_view hi) const {
  Elem a = elem(lo), b = elem(hi);
  if (!covers(a, b)) {
    throw Error(Errc::NotACoveringPair,
                "[" + std::string(lo) + ", " + std::string(hi) + "]");
  }
  return {a, b};
}

Interval FiniteLattice::interval(std::string_view lo, std::string_view hi) const {
  Elem a = elem(lo), b = elem(hi);
  if (!leq(a, b)) {
    throw Error(Errc::InvalidChain, "[" + std::string(lo) + ", " +
                                        std::string(hi) + "] is not an interval");
  }
  return {a, b};
}

std::size_t FiniteLattice::length(Interval i) const {
  if (!leq(i.lo, i.hi)) return 0;
  std::vector<Elem> inside;
  for (Elem x = 0; x < size(); ++x)
    if (leq(i.lo, x) && leq(x, i.hi)) inside.push_back(x);
  std::sort(inside.begin(), inside.end(),
            [&](Elem a, Elem b) { return height_[a] < height_[b]; });
  std::vector<std::size_t> best(size(), 0);
  for (Elem x : inside)
    for (Elem y : upper_[x])
      if (leq(y, i.hi)) best[y] = std::max(best[y], best[x] + 1);
  return best[i.hi];
}

FiniteLattice FiniteLattice::dual() const {
  std::vector<Cover> reversed;
  reversed.reserve(primes_.size());
  for (auto p : primes_) reversed.emplace_back(ids_[p.hi], ids_[p.lo]);
  return from_covers(ids_, reversed);
}

bool FiniteLattice::operator==(const FiniteLattice& other) const {
  return ids_ == other.ids_ && leq_ == other.leq_ && primes_ == other.primes_;
}

std::string format_interval(const FiniteLattice& lattice, Interval i) {
  return "[" + lattice.id(i.lo) + ", " + lattice.id(i.hi) + "]";
}

bool is_n5(const FiniteLattice& l, const N5Witness& w) {
  std::set<Elem> distinct{w.bottom, w.side, w.low, w.high, w.top};
  if (distinct.size() != 5) return false;
  return l.lt(w.low, w.high) && l.meet(w.side, w.low) == w.bottom &&
         l.meet(w.side, w.high) == w.bottom && l.join(w.side, w.low) == w.top &&
         l.join(w.side, w.high) == w.top;
}

bool is_m3(const FiniteLattice& l, const M3Witness& w) {
  std::set<Elem> distinct{w.bottom, w.x, w.y, w.z, w.top};
  if (distinct.size() != 5) return false;
  const Elem a[3] = {w.x, w.y, w.z};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (l.meet(a[i], a[j]) != w.bottom || l.join(a[i], a[j]) != w.top) {
        return false;
      }
    }
  }
  return true;
}

std::optional<M3Witness> find_m3(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x + 1; y < n; ++y) {
      if (l.comparable(x, y)) continue;
      const Elem o = l.meet(x, y), i = l.join(x, y);
      for (Elem z = y + 1; z < n; ++z) {
        if (l.comparable(x, z) || l.comparable(y, z)) continue;
        if (l.meet(x, z) == o && l.meet(y, z) == o && l.join(x, z) == i &&
            l.join(y, z) == i) {
          return M3Witness{o, x, y, z, i};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<N5Witness> find_n5(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem s = 0; s < n; ++s) {
    for (Elem t = 0; t < n; ++t) {
      if (!l.lt(s, t)) continue;
      for (Elem u = 0; u < n; ++u) {
        if (l.comparable(u, s) || l.comparable(u, t)) continue;
        if (l.meet(s, u) == l.meet(t, u) && l.join(s, u) == l.join(t, u)) {
          return N5Witness{l.meet(s, u), u, s, t, l.join(s, u)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace latcon
