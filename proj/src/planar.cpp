#include "latcon/planar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace latcon {

namespace {

struct Point {
  long x, y;
};

int orientation(Point a, Point b, Point c) {
  const long long v = static_cast<long long>(b.x - a.x) * (c.y - a.y) -
                      static_cast<long long>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_meet(Point p1, Point p2, Point p3, Point p4) {
  const int o1 = orientation(p1, p2, p3), o2 = orientation(p1, p2, p4);
  const int o3 = orientation(p3, p4, p1), o4 = orientation(p3, p4, p2);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && on_segment(p1, p2, p3)) || (o2 == 0 && on_segment(p1, p2, p4)) ||
         (o3 == 0 && on_segment(p3, p4, p1)) || (o4 == 0 && on_segment(p3, p4, p2));
}

}  // namespace

PlanarDiagram PlanarDiagram::build(FiniteLattice lattice, std::vector<long> rank,
                                   std::vector<long> xpos) {
  const std::size_t n = lattice.size();
  if (rank.size() != n || xpos.size() != n) {
    throw Error(Errc::NotGraded, "embedding does not cover every element");
  }
  for (Elem x = 0; x < n; ++x) {
    if (rank[x] < 0) throw Error(Errc::NotGraded, "negative rank at " + lattice.id(x));
  }
  for (auto p : lattice.prime_intervals()) {
    if (rank[p.hi] != rank[p.lo] + 1) {
      throw Error(Errc::NotGraded, "cover " + format_interval(lattice, p) +
                                       " does not raise rank by one");
    }
  }
  std::set<std::pair<long, long>> slots;
  for (Elem x = 0; x < n; ++x) {
    if (!slots.emplace(rank[x], xpos[x]).second) {
      throw Error(Errc::DuplicateXpos, lattice.id(x));
    }
  }

  const auto& edges = lattice.prime_intervals();
  auto point = [&](Elem x) { return Point{xpos[x], rank[x]}; };
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto e = edges[i], f = edges[j];
      if (e.lo == f.lo || e.lo == f.hi || e.hi == f.lo || e.hi == f.hi) continue;
      if (segments_meet(point(e.lo), point(e.hi), point(f.lo), point(f.hi))) {
        throw Error(Errc::EdgesCross,
                    format_interval(lattice, e) + " and " + format_interval(lattice, f));
      }
    }
  }

  PlanarDiagram d(std::move(lattice));
  d.rank_ = std::move(rank);
  d.xpos_ = std::move(xpos);
  d.lower_.resize(n);
  d.upper_.resize(n);
  auto by_x = [&](Elem a, Elem b) { return d.xpos_[a] < d.xpos_[b]; };
  for (Elem x = 0; x < n; ++x) {
    d.lower_[x] = d.lattice_.lower_covers(x);
    d.upper_[x] = d.lattice_.upper_covers(x);
    std::sort(d.lower_[x].begin(), d.lower_[x].end(), by_x);
    std::sort(d.upper_[x].begin(), d.upper_[x].end(), by_x);
  }
  d.sps_ = is_slim(d.lattice_) && is_semimodular(d.lattice_);
  return d;
}

bool is_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return false;
  return true;
}

bool is_slim(const FiniteLattice& l) { return !find_m3(l).has_value(); }

Boundaries boundaries(const PlanarDiagram& d) {
  const auto& l = d.lattice();
  Boundaries b;
  for (Elem x = l.bottom();; x = d.upper_covers(x).front()) {
    b.left.push_back(x);
    if (x == l.top()) break;
  }
  for (Elem x = l.bottom();; x = d.upper_covers(x).back()) {
    b.right.push_back(x);
    if (x == l.top()) break;
  }
  return b;
}

std::vector<Corner> corners(const PlanarDiagram& d) {
  if (!d.sps()) throw Error(Errc::NotAnSpsDiagram, "corners need an SPS diagram");
  const auto& l = d.lattice();
  const Boundaries b = boundaries(d);
  std::vector<Corner> out;
  auto scan = [&](const std::vector<Elem>& chain, Side side) {
    for (Elem c : chain) {
      if (c == l.bottom() || c == l.top()) continue;
      if (d.upper_covers(c).size() != 1 || d.lower_covers(c).size() != 1) continue;
      const Elem up = d.upper_covers(c).front();
      const Elem down = d.lower_covers(c).front();
      if (d.lower_covers(up).size() == 2 && d.upper_covers(down).size() == 2) {
        out.push_back({c, side, up, down});
      }
    }
  };
  scan(b.left, Side::Left);
  scan(b.right, Side::Right);
  return out;
}

bool is_rectangular(const PlanarDiagram& d) {
  const auto cs = corners(d);
  const auto left = std::count_if(cs.begin(), cs.end(),
                                  [](const Corner& c) { return c.side == Side::Left; });
  if (left != 1 || cs.size() != 2) return false;
  const auto& l = d.lattice();
  const Elem cl = cs[0].element, cr = cs[1].element;
  return l.meet(cl, cr) == l.bottom() && l.join(cl, cr) == l.top();
}

PlanarDiagram remove_corner(const PlanarDiagram& d, Elem c) {
  const auto cs = corners(d);
  if (std::none_of(cs.begin(), cs.end(), [&](const Corner& k) { return k.element == c; })) {
    throw Error(Errc::NotACorner, d.lattice().id(c));
  }
  const auto& l = d.lattice();
  std::vector<std::string> ids;
  std::vector<long> rank, xpos;
  for (Elem x = 0; x < l.size(); ++x) {
    if (x == c) continue;
    ids.push_back(l.id(x));
    rank.push_back(d.rank(x));
    xpos.push_back(d.xpos(x));
  }
  auto direct = [&](Elem x, Elem y) {
    if (!l.lt(x, y)) return false;
    for (Elem z = 0; z < l.size(); ++z)
      if (z != c && l.lt(x, z) && l.lt(z, y)) return false;
    return true;
  };
  std::vector<FiniteLattice::Cover> covers;
  std::set<std::pair<Elem, Elem>> kept;
  for (auto p : l.prime_intervals()) {
    if (p.lo == c || p.hi == c) continue;
    covers.emplace_back(l.id(p.lo), l.id(p.hi));
    kept.emplace(p.lo, p.hi);
  }
  // Pairs that become coverings once c is gone.
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      if (x != c && y != c && !kept.count({x, y}) && direct(x, y))
        covers.emplace_back(l.id(x), l.id(y));
  return PlanarDiagram::build(FiniteLattice::from_covers(std::move(ids), covers),
                              std::move(rank), std::move(xpos));
}

std::optional<PlanarDiagram> find_embedding(const FiniteLattice& l) {
  for (auto p : l.prime_intervals())
    if (l.height(p.hi) != l.height(p.lo) + 1) return std::nullopt;

  std::map<std::size_t, std::vector<Elem>> levels;
  for (Elem x = 0; x < l.size(); ++x) levels[l.height(x)].push_back(x);
  std::vector<std::vector<Elem>> order;
  for (auto& [h, elems] : levels) order.push_back(elems);

  std::vector<long> pos(l.size(), 0);
  auto level_ok = [&](std::size_t r) {
    std::vector<PrimeInterval> edges;
    for (Elem hi : order[r])
      for (Elem lo : l.lower_covers(hi)) edges.push_back({lo, hi});
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto e = edges[i], f = edges[j];
        if (e.lo == f.lo || e.hi == f.hi) continue;
        if ((pos[e.lo] < pos[f.lo]) != (pos[e.hi] < pos[f.hi])) return false;
      }
    }
    return true;
  };
  // Depth-first over per-level permutations.
  auto search = [&](auto&& self, std::size_t r) -> bool {
    if (r == order.size()) return true;
    std::vector<Elem> perm = order[r];
    do {
      for (std::size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<long>(i);
      if ((r == 0 || level_ok(r)) && self(self, r + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  if (!search(search, 0)) return std::nullopt;

  std::vector<long> rank(l.size());
  for (Elem x = 0; x < l.size(); ++x) rank[x] = static_cast<long>(l.height(x));
  return PlanarDiagram::build(l, std::move(rank), std::move(pos));
}

}  // namespace latcon
