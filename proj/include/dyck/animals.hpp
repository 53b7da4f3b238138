#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Site of the directed triangular lattice. Its rendered abscissa is x + y/2;
/// the lattice grows to the right.
struct Site {
  int x = 0;
  int y = 0;

  /// Doubled rendered abscissa, 2x + y.
  int twice_abscissa() const noexcept { return 2 * x + y; }
  bool operator==(const Site&) const = default;
};

/// Row-major order: by (y, x). This is the text format order.
struct RowMajor {
  bool operator()(const Site& a, const Site& b) const noexcept {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  }
};

/// Predecessors of (x, y): (x-1, y), (x, y-1) and (x-1, y+1). Each lies
/// strictly to the left.
std::vector<Site> predecessors(const Site& s);
std::vector<Site> successors(const Site& s);

/// A site set is held sorted in row-major order without duplicates.
using SiteSet = std::vector<Site>;

SiteSet normalize(std::vector<Site> sites);

/// Contains (0,0), every other site has a predecessor in the set.
bool is_directed_animal(const SiteSet& sites);
/// A directed animal with every y >= 0.
bool is_half_animal(const SiteSet& sites);

/// Every site with y > 0 has at least two sites strictly to its left in rows
/// y-1 or y+1.
bool is_acute(const SiteSet& half_animal);
/// Two-sided variant: the same condition for every site with y != 0.
bool is_acute_animal(const SiteSet& animal);

enum class GrowthOrder {
  /// Sites added by increasing (2x + y, y).
  AbscissaThenRow,
  /// Sites added by increasing (2x + y, -y).
  AbscissaThenReverseRow,
};

/// Visits every directed half-animal with `sites` sites exactly once. Sites are
/// added in increasing order of the chosen key, each attached to an already
/// present predecessor. Since predecessors have strictly smaller abscissa, an
/// animal has exactly one such growth sequence.
void for_each_half_animal(int sites, GrowthOrder order, const std::function<void(const SiteSet&)>& visit);
/// Two-sided directed animals (no row restriction).
void for_each_animal(int sites, GrowthOrder order, const std::function<void(const SiteSet&)>& visit);

std::uint64_t count_acute_half_animals(int sites, GrowthOrder order = GrowthOrder::AbscissaThenRow);
/// Brute force only.
std::uint64_t count_acute_animals(int sites);

class AnimalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// `(x,y);(x,y);...` in row-major order.
std::string format_animal(const SiteSet& sites);
SiteSet parse_animal(std::string_view text);

}  // namespace dyck
