#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latcon/catalog.hpp"
#include "latcon/error.hpp"
#include "latcon/planar.hpp"
#include "oracles.hpp"

using namespace latcon;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::SyntaxError;
}

std::vector<std::string> names(const FiniteLattice& l, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(l.id(x));
  return out;
}

// a∧b ≺ a ⇒ b ≺ a∨b, checked straight from the tables.
bool semimodular_by_definition(const FiniteLattice& l) {
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b)
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return false;
  return true;
}

}  // namespace

TEST_CASE("fixture diagrams") {
  CHECK(is_sps(*fixture("S7").diagram));
  CHECK(is_sps(*fixture("GRID3x3").diagram));
  CHECK(is_sps(*fixture("FAN5").diagram));
  CHECK(is_sps(*fixture("C2x2").diagram));
  CHECK_FALSE(is_sps(*fixture("M3").diagram));  // planar but not slim
  CHECK_FALSE(fixture("N5").diagram);
}

TEST_CASE("N5 is not semimodular and has no graded drawing") {
  const auto l = fixture("N5").lattice;
  CHECK_FALSE(is_semimodular(l));
  CHECK(is_slim(l));
  CHECK(code_of([&] {
          build_diagram(l, {0, 1, 2, 1, 3}, {0, -1, -1, 1, 0});
        }) == Errc::NotGraded);
  CHECK_FALSE(find_embedding(l));
}

TEST_CASE("semimodularity and slimness against definitions") {
  for (const auto& l : lattices_up_to(7)) {
    CHECK(is_semimodular(l) == semimodular_by_definition(l));
    CHECK(is_slim(l) == !find_m3(l).has_value());
  }
}

TEST_CASE("diagram validation") {
  const auto l = fixture("C2x2").lattice;  // 0, a, b, 1
  CHECK(code_of([&] { build_diagram(l, {0, 1, 1, 2}, {0, 1, 1, 0}); }) == Errc::DuplicateXpos);
  CHECK(code_of([&] { build_diagram(l, {0, 1, 2, 2}, {0, -1, 1, 0}); }) == Errc::NotGraded);
  const auto ok = build_diagram(l, {0, 1, 1, 2}, {0, 1, -1, 0});
  CHECK(names(l, ok.lower_covers(l.elem("1"))) == std::vector<std::string>{"b", "a"});

  // Crossing edges in S7: swap e1 and e3.
  const auto s7 = fixture("S7").lattice;  // 0 a b e1 e2 e3 1
  CHECK(code_of([&] {
          build_diagram(s7, {0, 1, 1, 2, 2, 2, 3}, {0, -1, 1, 2, 0, -2, 0});
        }) == Errc::EdgesCross);
}

TEST_CASE("S7 boundaries and covers") {
  const auto d = *fixture("S7").diagram;
  const auto& l = d.lattice();
  const auto b = boundaries(d);
  CHECK(names(l, b.left) == std::vector<std::string>{"0", "a", "e1", "1"});
  CHECK(names(l, b.right) == std::vector<std::string>{"0", "b", "e3", "1"});
  CHECK(names(l, d.lower_covers(l.elem("1"))) == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("GRID3x3 corners") {
  const auto d = *fixture("GRID3x3").diagram;
  const auto& l = d.lattice();
  const auto cs = corners(d);
  REQUIRE(cs.size() == 2);
  CHECK(l.id(cs[0].element) == "20");
  CHECK(cs[0].side == Side::Left);
  CHECK(l.id(cs[1].element) == "02");
  CHECK(cs[1].side == Side::Right);
  CHECK(l.id(cs[0].upper) == "21");
  CHECK(l.id(cs[0].lower) == "10");
  CHECK(is_rectangular(d));
}

TEST_CASE("S7 and FAN5 are not rectangular") {
  CHECK_FALSE(is_rectangular(*fixture("S7").diagram));
  CHECK_FALSE(is_rectangular(*fixture("FAN5").diagram));
  CHECK(is_rectangular(*fixture("C2x2").diagram));
}

TEST_CASE("corner removal") {
  const auto d = *fixture("GRID3x3").diagram;
  const auto& l = d.lattice();
  const auto smaller = remove_corner(d, l.elem("20"));
  CHECK(smaller.lattice().size() == 8);
  CHECK_FALSE(smaller.lattice().find("20"));
  CHECK(is_sps(smaller));
  const auto& s = smaller.lattice();
  CHECK(names(s, smaller.lower_covers(s.elem("21"))) == std::vector<std::string>{"11"});
  CHECK(names(s, smaller.upper_covers(s.elem("10"))) == std::vector<std::string>{"11"});
  CHECK(code_of([&] { remove_corner(d, l.elem("11")); }) == Errc::NotACorner);
}

TEST_CASE("corners require an SPS diagram") {
  CHECK(code_of([] { corners(*fixture("M3").diagram); }) == Errc::NotAnSpsDiagram);
}

TEST_CASE("FAN5 hinge covers five elements") {
  const auto d = *fixture("FAN5").diagram;
  CHECK(d.lower_covers(d.lattice().top()).size() == 5);
}

TEST_CASE("M3-free semimodular lattices embed exactly when join-irreducibles have width two") {
  // A semimodular lattice has a planar slim drawing iff its join-irreducible
  // elements contain no three-element antichain.
  auto width_at_most_two = [](const FiniteLattice& l) {
    std::vector<Elem> j;
    for (Elem x = 0; x < l.size(); ++x)
      if (l.lower_covers(x).size() == 1) j.push_back(x);
    for (Elem a : j)
      for (Elem b : j)
        for (Elem c : j)
          if (a < b && b < c && !l.comparable(a, b) && !l.comparable(a, c) &&
              !l.comparable(b, c))
            return false;
    return true;
  };
  std::size_t found = 0, expected = 0;
  for (const auto& l : lattices_up_to(8)) {
    if (!semimodular_by_definition(l) || find_m3(l)) continue;
    const bool slim = width_at_most_two(l);
    expected += slim;
    const auto d = find_embedding(l);
    CHECK(d.has_value() == slim);
    if (!d) continue;
    CHECK(is_sps(*d));
    for (Elem x = 0; x < l.size(); ++x) CHECK(d->rank(x) == static_cast<long>(l.height(x)));
    ++found;
  }
  CHECK(found == expected);
}

TEST_CASE("the cube is M3-free but has no planar drawing") {
  const auto cube = FiniteLattice::from_covers(
      {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "ab"}, {"a", "ac"}, {"b", "ab"}, {"b", "bc"},
       {"c", "ac"}, {"c", "bc"}, {"ab", "1"}, {"ac", "1"}, {"bc", "1"}});
  CHECK(is_semimodular(cube));
  CHECK_FALSE(find_m3(cube));
  CHECK_FALSE(find_embedding(cube));
}
