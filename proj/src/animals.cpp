#include "dyck/animals.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <tuple>

namespace dyck {

std::vector<Site> predecessors(const Site& s) { return {{s.x - 1, s.y}, {s.x, s.y - 1}, {s.x - 1, s.y + 1}}; }

std::vector<Site> successors(const Site& s) { return {{s.x + 1, s.y}, {s.x, s.y + 1}, {s.x + 1, s.y - 1}}; }

SiteSet normalize(std::vector<Site> sites) {
  std::sort(sites.begin(), sites.end(), RowMajor{});
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  return sites;
}

namespace {

bool contains(const SiteSet& sorted, const Site& s) { return std::binary_search(sorted.begin(), sorted.end(), s, RowMajor{}); }

// Sites strictly left of s in the row below and the row above.
int left_support(const SiteSet& sites, const Site& s) {
  int count = 0;
  for (const Site& t : sites) {
    if (t.y == s.y - 1 && t.x <= s.x) ++count;
    if (t.y == s.y + 1 && t.x <= s.x - 1) ++count;
  }
  return count;
}

}  // namespace

bool is_directed_animal(const SiteSet& raw) {
  SiteSet sites = normalize(raw);
  if (!contains(sites, Site{0, 0})) return false;
  for (const Site& s : sites) {
    if (s == Site{0, 0}) continue;
    auto preds = predecessors(s);
    if (std::none_of(preds.begin(), preds.end(), [&](const Site& p) { return contains(sites, p); })) return false;
  }
  return true;
}

bool is_half_animal(const SiteSet& sites) {
  return std::all_of(sites.begin(), sites.end(), [](const Site& s) { return s.y >= 0; }) && is_directed_animal(sites);
}

bool is_acute(const SiteSet& sites) {
  return std::all_of(sites.begin(), sites.end(), [&](const Site& s) { return s.y <= 0 || left_support(sites, s) >= 2; });
}

bool is_acute_animal(const SiteSet& sites) {
  return std::all_of(sites.begin(), sites.end(), [&](const Site& s) { return s.y == 0 || left_support(sites, s) >= 2; });
}

namespace {

struct Grower {
  int target;
  bool half;
  GrowthOrder order;
  const std::function<void(const SiteSet&)>& visit;
  std::vector<Site> current;

  std::tuple<int, int> key(const Site& s) const {
    return {s.twice_abscissa(), order == GrowthOrder::AbscissaThenRow ? s.y : -s.y};
  }

  bool present(const Site& s) const { return std::find(current.begin(), current.end(), s) != current.end(); }

  void run() {
    if (static_cast<int>(current.size()) == target) {
      visit(normalize(current));
      return;
    }
    const auto last = key(current.back());
    std::vector<Site> candidates;
    for (const Site& s : current)
      for (const Site& c : successors(s))
        if ((!half || c.y >= 0) && key(c) > last && !present(c)) candidates.push_back(c);
    std::sort(candidates.begin(), candidates.end(), [this](const Site& a, const Site& b) { return key(a) < key(b); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Site& c : candidates) {
      current.push_back(c);
      run();
      current.pop_back();
    }
  }
};

void grow(int sites, bool half, GrowthOrder order, const std::function<void(const SiteSet&)>& visit) {
  if (sites < 1) return;
  Grower g{sites, half, order, visit, {Site{0, 0}}};
  g.run();
}

}  // namespace

void for_each_half_animal(int sites, GrowthOrder order, const std::function<void(const SiteSet&)>& visit) {
  grow(sites, true, order, visit);
}

void for_each_animal(int sites, GrowthOrder order, const std::function<void(const SiteSet&)>& visit) {
  grow(sites, false, order, visit);
}

std::uint64_t count_acute_half_animals(int sites, GrowthOrder order) {
  std::uint64_t count = 0;
  for_each_half_animal(sites, order, [&](const SiteSet& a) { count += is_acute(a) ? 1 : 0; });
  return count;
}

std::uint64_t count_acute_animals(int sites) {
  std::uint64_t count = 0;
  for_each_animal(sites, GrowthOrder::AbscissaThenRow, [&](const SiteSet& a) { count += is_acute_animal(a) ? 1 : 0; });
  return count;
}

std::string format_animal(const SiteSet& sites) {
  std::ostringstream os;
  bool first = true;
  for (const Site& s : normalize(sites)) {
    if (!first) os << ';';
    os << '(' << s.x << ',' << s.y << ')';
    first = false;
  }
  return os.str();
}

namespace {

int parse_int(std::string_view& text, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{}) throw AnimalParseError("malformed animal: " + std::string(whole));
  text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
  return v;
}

void expect(std::string_view& text, char c, std::string_view whole) {
  if (text.empty() || text.front() != c) throw AnimalParseError("malformed animal: " + std::string(whole));
  text.remove_prefix(1);
}

}  // namespace

SiteSet parse_animal(std::string_view text) {
  const std::string_view whole = text;
  std::vector<Site> sites;
  while (!text.empty()) {
    if (!sites.empty()) expect(text, ';', whole);
    expect(text, '(', whole);
    Site s;
    s.x = parse_int(text, whole);
    expect(text, ',', whole);
    s.y = parse_int(text, whole);
    expect(text, ')', whole);
    sites.push_back(s);
  }
  return normalize(std::move(sites));
}

}  // namespace dyck
