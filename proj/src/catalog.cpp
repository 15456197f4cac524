#include "latcon/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <set>

namespace latcon {

namespace {

struct Drawn {
  std::string id;
  long rank;
  long x;
};

Fixture make(std::string name, const std::vector<Drawn>& drawn,
             const std::vector<FiniteLattice::Cover>& covers, bool with_diagram = true) {
  std::vector<std::string> ids;
  std::vector<long> rank, xpos;
  for (const auto& d : drawn) {
    ids.push_back(d.id);
    rank.push_back(d.rank);
    xpos.push_back(d.x);
  }
  FiniteLattice l = FiniteLattice::from_covers(ids, covers);
  std::optional<PlanarDiagram> diagram;
  if (with_diagram) diagram = PlanarDiagram::build(l, rank, xpos);
  return {std::move(name), std::move(l), std::move(diagram)};
}

// Rank r holds r+1 elements, element i covering elements i-1 and i of the
// rank below; the top covers all five elements of rank 4.
Fixture make_fan5() {
  const char* rows[] = {"0", "a", "b", "c", "d"};
  auto id = [&](int r, int i) {
    return r == 0 ? std::string("0") : rows[r] + std::to_string(i + 1);
  };
  std::vector<Drawn> drawn;
  std::vector<FiniteLattice::Cover> covers;
  for (int r = 0; r <= 4; ++r)
    for (int i = 0; i <= r; ++i) drawn.push_back({id(r, i), r, 2L * i - r});
  drawn.push_back({"1", 5, 0});
  for (int r = 0; r < 4; ++r) {
    for (int i = 0; i <= r; ++i) {
      covers.emplace_back(id(r, i), id(r + 1, i));
      covers.emplace_back(id(r, i), id(r + 1, i + 1));
    }
  }
  for (int i = 0; i < 5; ++i) covers.emplace_back(id(4, i), "1");
  return make("FAN5", drawn, covers);
}

Fixture make_grid3x3() {
  std::vector<Drawn> drawn;
  std::vector<FiniteLattice::Cover> covers;
  auto id = [](int i, int j) { return std::to_string(i) + std::to_string(j); };
  for (int r = 0; r <= 4; ++r)
    for (int i = 2; i >= 0; --i)
      if (int j = r - i; j >= 0 && j <= 2) drawn.push_back({id(i, j), r, j - i});
  for (int i = 0; i <= 2; ++i) {
    for (int j = 0; j <= 2; ++j) {
      if (i < 2) covers.emplace_back(id(i, j), id(i + 1, j));
      if (j < 2) covers.emplace_back(id(i, j), id(i, j + 1));
    }
  }
  return make("GRID3x3", drawn, covers);
}

Fixture build_fixture(std::string_view name) {
  if (name == "C2") return make("C2", {{"0", 0, 0}, {"1", 1, 0}}, {{"0", "1"}});
  if (name == "C3") {
    return make("C3", {{"0", 0, 0}, {"m", 1, 0}, {"1", 2, 0}}, {{"0", "m"}, {"m", "1"}});
  }
  if (name == "C2x2") {
    return make("C2x2", {{"0", 0, 0}, {"a", 1, -1}, {"b", 1, 1}, {"1", 2, 0}},
                {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  }
  if (name == "N5") {
    // Not graded, so it has no diagram.
    return make("N5", {{"o", 0, 0}, {"a", 0, 0}, {"b", 0, 0}, {"c", 0, 0}, {"i", 0, 0}},
                {{"o", "a"}, {"a", "b"}, {"b", "i"}, {"o", "c"}, {"c", "i"}}, false);
  }
  if (name == "M3") {
    return make("M3",
                {{"o", 0, 0}, {"x", 1, -1}, {"y", 1, 0}, {"z", 1, 1}, {"i", 2, 0}},
                {{"o", "x"}, {"o", "y"}, {"o", "z"}, {"x", "i"}, {"y", "i"}, {"z", "i"}});
  }
  if (name == "S7") {
    return make("S7",
                {{"0", 0, 0},
                 {"a", 1, -1},
                 {"b", 1, 1},
                 {"e1", 2, -2},
                 {"e2", 2, 0},
                 {"e3", 2, 2},
                 {"1", 3, 0}},
                {{"0", "a"},
                 {"0", "b"},
                 {"a", "e1"},
                 {"a", "e2"},
                 {"b", "e2"},
                 {"b", "e3"},
                 {"e1", "1"},
                 {"e2", "1"},
                 {"e3", "1"}});
  }
  if (name == "FAN5") return make_fan5();
  if (name == "GRID3x3") return make_grid3x3();
  throw Error(Errc::UnknownFixture, std::string(name));
}

// Strict orders on k points that extend the natural order of the labels,
// as bit masks over the pairs i < j.
std::vector<std::vector<std::vector<bool>>> natural_orders(std::size_t k) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<std::vector<std::vector<bool>>> out;
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask >> b & 1) lt[pairs[b].first][pairs[b].second] = true;
    bool transitive = true;
    for (std::size_t i = 0; i < k && transitive; ++i)
      for (std::size_t j = i + 1; j < k && transitive; ++j)
        if (lt[i][j])
          for (std::size_t m = j + 1; m < k && transitive; ++m)
            if (lt[j][m] && !lt[i][m]) transitive = false;
    if (transitive) out.push_back(std::move(lt));
  }
  return out;
}

// Lexicographically least relation string over relabellings of the inner
// points; bottom and top are fixed by any isomorphism.
std::vector<bool> canonical_form(const std::vector<std::vector<bool>>& lt) {
  const std::size_t k = lt.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<bool> best;
  do {
    std::vector<bool> code;
    code.reserve(k * k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) code.push_back(lt[perm[i]][perm[j]]);
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"C2", "C3",  "C2x2", "N5",
                                              "M3", "S7", "FAN5", "GRID3x3"};
  return names;
}

Fixture fixture(std::string_view name) { return build_fixture(name); }

std::vector<FiniteLattice> enumerate_lattices(std::size_t n, std::size_t bound) {
  if (n < 1 || n > bound) {
    throw Error(Errc::BoundExceeded,
                "n = " + std::to_string(n) + " outside 1.." + std::to_string(bound));
  }
  if (n > 28) throw Error(Errc::BoundExceeded, "element names run out past 28");
  if (n == 1) return {FiniteLattice::from_covers({"0"}, {})};

  const std::size_t k = n - 2;
  std::vector<std::string> ids{"0"};
  for (std::size_t i = 0; i < k; ++i) ids.push_back(std::string(1, char('a' + i)));
  ids.push_back("1");

  std::vector<FiniteLattice> out;
  std::set<std::vector<bool>> seen;
  for (const auto& lt : natural_orders(k)) {
    // Inner point i is element i + 1.
    std::vector<FiniteLattice::Cover> covers;
    for (std::size_t i = 0; i < k; ++i) {
      bool minimal = true, maximal = true;
      for (std::size_t j = 0; j < k; ++j) {
        if (lt[j][i]) minimal = false;
        if (lt[i][j]) maximal = false;
      }
      if (minimal) covers.emplace_back("0", ids[i + 1]);
      for (std::size_t j = 0; j < k; ++j) {
        if (!lt[i][j]) continue;
        bool direct = true;
        for (std::size_t m = 0; m < k && direct; ++m)
          if (lt[i][m] && lt[m][j]) direct = false;
        if (direct) covers.emplace_back(ids[i + 1], ids[j + 1]);
      }
      if (maximal) covers.emplace_back(ids[i + 1], "1");
    }
    if (k == 0) covers.emplace_back("0", "1");
    std::sort(covers.begin(), covers.end(), [&](const auto& x, const auto& y) {
      auto pos = [&](const std::string& s) {
        return std::find(ids.begin(), ids.end(), s) - ids.begin();
      };
      return std::pair(pos(x.first), pos(x.second)) < std::pair(pos(y.first), pos(y.second));
    });
    std::optional<FiniteLattice> lattice;
    try {
      lattice = FiniteLattice::from_covers(ids, covers);
    } catch (const Error& e) {
      if (e.code() != Errc::NotALattice) throw;
      continue;
    }
    if (seen.insert(canonical_form(lt)).second) out.push_back(std::move(*lattice));
  }
  return out;
}

std::vector<FiniteLattice> lattices_up_to(std::size_t max_n, std::size_t bound) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = enumerate_lattices(n, bound);
    std::move(batch.begin(), batch.end(), std::back_inserter(out));
  }
  return out;
}

bool is_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.prime_intervals().size() != b.prime_intervals().size()) {
    return false;
  }
  auto signature = [](const FiniteLattice& l, Elem x) {
    std::size_t below = 0;
    for (Elem y = 0; y < l.size(); ++y) below += l.leq(y, x);
    return std::array<std::size_t, 4>{l.height(x), l.upper_covers(x).size(),
                                      l.lower_covers(x).size(), below};
  };
  std::vector<std::array<std::size_t, 4>> sa(n), sb(n);
  for (Elem x = 0; x < n; ++x) {
    sa[x] = signature(a, x);
    sb[x] = signature(b, x);
  }
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }

  std::vector<Elem> image(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Elem x) -> bool {
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      bool ok = true;
      for (Elem z = 0; z < x && ok; ++z)
        ok = a.leq(x, z) == b.leq(y, image[z]) && a.leq(z, x) == b.leq(image[z], y);
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (self(self, x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<CorpusEntry> sps_corpus(std::size_t max_n, std::size_t bound) {
  if (max_n > bound) {
    throw Error(Errc::BoundExceeded,
                "max_n = " + std::to_string(max_n) + " above " + std::to_string(bound));
  }
  std::vector<CorpusEntry> out;
  for (const auto& name : fixture_names()) {
    Fixture f = fixture(name);
    if (f.diagram && f.diagram->sps()) out.push_back({f.name, std::move(*f.diagram)});
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto batch = enumerate_lattices(n, bound);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const FiniteLattice& l = batch[i];
      if (!is_slim(l) || !is_semimodular(l)) continue;
      auto d = find_embedding(l);
      if (!d) continue;
      const bool known = std::any_of(out.begin(), out.end(), [&](const CorpusEntry& e) {
        return is_isomorphic(e.diagram.lattice(), l);
      });
      if (!known) out.push_back({"L" + std::to_string(n) + "." + std::to_string(i), *d});
    }
  }
  return out;
}

}  // namespace latcon
