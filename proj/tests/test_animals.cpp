#include <doctest.h>

#include <set>
#include <utility>

#include "dyck/animals.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/path.hpp"

using namespace dyck;

namespace {
using Cell = std::pair<int, int>;  // (y, x), so std::set order is row-major
using Shape = std::set<Cell>;

SiteSet sites_of(std::initializer_list<std::pair<int, int>> xy) {
  std::vector<Site> v;
  for (auto [x, y] : xy) v.push_back({x, y});
  return normalize(v);
}

SiteSet to_sites(const Shape& s) {
  std::vector<Site> v;
  for (auto [y, x] : s) v.push_back({x, y});
  return normalize(v);
}

// Every directed animal of the given size, by growing from each neighbour
// and deduplicating.
std::set<Shape> brute_animals(int size, bool half) {
  std::set<Shape> layer{{{0, 0}}};
  for (int k = 1; k < size; ++k) {
    std::set<Shape> next;
    for (const Shape& s : layer)
      for (auto [y, x] : s)
        for (Cell c : {Cell{y, x + 1}, Cell{y + 1, x}, Cell{y - 1, x + 1}}) {
          if (half && c.first < 0) continue;
          if (s.count(c)) continue;
          Shape t = s;
          t.insert(c);
          next.insert(t);
        }
    layer = std::move(next);
  }
  return layer;
}

bool brute_acute(const Shape& s, bool two_sided) {
  for (auto [y, x] : s) {
    if (y == 0 || (!two_sided && y < 0)) continue;
    int left = 0;
    for (auto [y2, x2] : s)
      if ((y2 == y - 1 || y2 == y + 1) && 2 * x2 + y2 < 2 * x + y) ++left;
    if (left < 2) return false;
  }
  return true;
}

const SiteSet kWorkedExample = sites_of({{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2},
                                  {4, 0}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {6, 1}});
}  // namespace

TEST_CASE("neighbours") {
  auto p = predecessors({2, 1});
  CHECK(p.size() == 3);
  for (const Site& q : p) CHECK(q.twice_abscissa() < Site{2, 1}.twice_abscissa());
  for (const Site& q : successors({2, 1})) CHECK(q.twice_abscissa() > Site{2, 1}.twice_abscissa());
}

TEST_CASE("membership predicates") {
  CHECK(is_half_animal(kWorkedExample));
  CHECK(is_acute(kWorkedExample));
  CHECK_FALSE(is_half_animal(sites_of({{0, 0}, {2, 0}})));
  CHECK_FALSE(is_acute(sites_of({{0, 0}, {0, 1}})));
  CHECK(is_acute(sites_of({{0, 0}, {1, 0}, {1, 1}})));
  CHECK(is_directed_animal(sites_of({{0, 0}, {1, -1}})));
  CHECK_FALSE(is_half_animal(sites_of({{0, 0}, {1, -1}})));
  CHECK_FALSE(is_directed_animal(sites_of({{1, 0}})));
  CHECK_FALSE(is_directed_animal({}));
}

TEST_CASE("the 12-site example and a progressive path of semilength 12") {
  CHECK(kWorkedExample.size() == 12);
  const Path p = parse_path("UDUUDUDUUDDDUDUUUUDDDUDD");
  CHECK(p.semilength() == 12);
  CHECK(is_progressive(p));
}

TEST_CASE("acute half-animal counts") {
  CHECK(count_acute_half_animals(1) == 1);
  CHECK(count_acute_half_animals(2) == 1);
  CHECK(count_acute_half_animals(3) == 2);
  const CountTable t = count_table(9);
  for (int s = 1; s <= 9; ++s) {
    CHECK(count_acute_half_animals(s) == t.progressive_total(s).get_ui());
    CHECK(count_acute_half_animals(s, GrowthOrder::AbscissaThenReverseRow) == count_acute_half_animals(s));
  }
}

TEST_CASE("generators match a deduplicating brute force") {
  for (bool half : {true, false})
    for (int s = 1; s <= 8; ++s) {
      const auto brute = brute_animals(s, half);
      for (GrowthOrder order : {GrowthOrder::AbscissaThenRow, GrowthOrder::AbscissaThenReverseRow}) {
        std::set<std::string> seen;
        std::size_t visits = 0;
        auto visit = [&](const SiteSet& a) {
          ++visits;
          REQUIRE(a.size() == static_cast<std::size_t>(s));
          REQUIRE(is_directed_animal(a));
          if (half) REQUIRE(is_half_animal(a));
          seen.insert(format_animal(a));
        };
        if (half)
          for_each_half_animal(s, order, visit);
        else
          for_each_animal(s, order, visit);
        REQUIRE(visits == seen.size());
        REQUIRE(visits == brute.size());
        for (const Shape& b : brute) REQUIRE(seen.count(format_animal(to_sites(b))) == 1);
      }
      std::uint64_t acute = 0;
      for (const Shape& b : brute) {
        const bool a = brute_acute(b, !half);
        REQUIRE((half ? is_acute(to_sites(b)) : is_acute_animal(to_sites(b))) == a);
        acute += a;
      }
      if (half)
        CHECK(count_acute_half_animals(s) == acute);
      else
        CHECK(count_acute_animals(s) == acute);
    }
}

TEST_CASE("text format") {
  CHECK(format_animal(sites_of({{1, 0}, {0, 0}, {1, 1}})) == "(0,0);(1,0);(1,1)");
  CHECK(parse_animal(format_animal(kWorkedExample)) == kWorkedExample);
  CHECK(parse_animal("(1,1);(0,0);(1,0)") == sites_of({{0, 0}, {1, 0}, {1, 1}}));
  CHECK(parse_animal("(0,0);(-1,1)") == sites_of({{0, 0}, {-1, 1}}));
  CHECK_THROWS_AS(parse_animal("(0,0"), AnimalParseError);
  CHECK_THROWS_AS(parse_animal("(0,0);;(1,0)"), AnimalParseError);
  CHECK_THROWS_AS(parse_animal("(a,0)"), AnimalParseError);
}
