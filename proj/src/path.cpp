#include "dyck/path.hpp"

#include <algorithm>

namespace dyck {

void Path::append(const Path& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
}

void Path::append(Step s, std::size_t count) { steps_.insert(steps_.end(), count, s); }

Path Path::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > steps_.size()) throw std::out_of_range("Path::slice");
  return Path(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(begin),
                                steps_.begin() + static_cast<std::ptrdiff_t>(end)));
}

Path operator+(Path lhs, const Path& rhs) {
  lhs.append(rhs);
  return lhs;
}

PathParseError::PathParseError(std::size_t position, char found)
    : std::invalid_argument("invalid step '" + std::string(1, found) + "' at position " +
                            std::to_string(position) + " (expected 'U' or 'D')"),
      position_(position) {}

Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    switch (text[k]) {
      case 'U': steps.push_back(Step::Up); break;
      case 'D': steps.push_back(Step::Down); break;
      default: throw PathParseError(k + 1, text[k]);
    }
  }
  return Path(std::move(steps));
}

std::string render_path(const Path& p) {
  std::string out;
  out.reserve(p.length());
  for (Step s : p.steps()) out.push_back(s == Step::Up ? 'U' : 'D');
  return out;
}

int HeightProfile::max() const { return *std::max_element(heights.begin(), heights.end()); }
int HeightProfile::min() const { return *std::min_element(heights.begin(), heights.end()); }

std::size_t HeightProfile::visits(int level, std::size_t end) const {
  end = std::min(end, heights.size());
  return static_cast<std::size_t>(std::count(heights.begin(), heights.begin() + static_cast<std::ptrdiff_t>(end), level));
}

std::size_t HeightProfile::first_visit(int level) const {
  auto it = std::find(heights.begin(), heights.end(), level);
  return it == heights.end() ? npos : static_cast<std::size_t>(it - heights.begin());
}

HeightProfile height_profile(const Path& p) {
  HeightProfile prof;
  prof.heights.reserve(p.length() + 1);
  int h = 0;
  prof.heights.push_back(h);
  for (Step s : p.steps()) {
    h += s == Step::Up ? 1 : -1;
    prof.heights.push_back(h);
  }
  return prof;
}

Path reverse_flip(const Path& p) {
  std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
  for (Step& s : out) s = s == Step::Up ? Step::Down : Step::Up;
  return Path(std::move(out));
}

int max_height(const Path& p) { return height_profile(p).max(); }

namespace {

bool dyck_profile(const HeightProfile& prof) { return prof.min() >= 0 && prof.final_height() == 0; }

// Single scan: when a new maximum i >= 2 is reached, height i-1 must already
// have been seen twice.
bool progressive_visits(const HeightProfile& prof) {
  int top = prof.max();
  if (top <= 1) return true;
  std::vector<int> seen(static_cast<std::size_t>(top) + 1, 0);
  int reached = 0;
  for (int h : prof.heights) {
    if (h > reached) {
      if (h >= 2 && seen[static_cast<std::size_t>(h - 1)] < 2) return false;
      reached = h;
    }
    if (h >= 0) ++seen[static_cast<std::size_t>(h)];
  }
  return true;
}

}  // namespace

bool is_dyck(const Path& p) { return dyck_profile(height_profile(p)); }

bool is_culminating(const Path& p) {
  auto prof = height_profile(p);
  return prof.min() >= 0 && prof.visits(prof.final_height(), prof.heights.size()) == 1;
}

bool is_progressive(const Path& p) {
  auto prof = height_profile(p);
  return dyck_profile(prof) && progressive_visits(prof);
}

bool is_rushed(const Path& p) {
  auto prof = height_profile(p);
  if (!dyck_profile(prof)) return false;
  int h = prof.max();
  for (int k = 0; k < h; ++k)
    if (p[static_cast<std::size_t>(k)] != Step::Up) return false;
  return prof.visits(h, prof.heights.size()) == 1;
}

bool is_doubly_progressive(const Path& p) { return is_progressive(p) && is_progressive(reverse_flip(p)); }

bool is_unconstrained_progressive(const Path& p) {
  auto prof = height_profile(p);
  const int lo = prof.min();
  const int hi = prof.max();
  // counts indexed by height - lo + 1, padded by one on each side
  std::vector<int> seen(static_cast<std::size_t>(hi - lo + 3), 0);
  std::vector<bool> reached(seen.size(), false);
  auto idx = [lo](int h) { return static_cast<std::size_t>(h - lo + 1); };
  for (int h : prof.heights) {
    if (!reached[idx(h)]) {
      reached[idx(h)] = true;
      if (h != 0 && h != 1 && seen[idx(h - 1)] < 2 && seen[idx(h + 1)] < 2) return false;
    }
    ++seen[idx(h)];
  }
  return true;
}

bool has_progressive_visits(const Path& p) { return progressive_visits(height_profile(p)); }

bool is_progressive_culminating(const Path& p) {
  auto prof = height_profile(p);
  return prof.min() >= 0 && prof.visits(prof.final_height(), prof.heights.size()) == 1 &&
         progressive_visits(prof);
}

namespace {

void dyck_rec(int n, int ups, int height, Path& buf, const std::function<void(const Path&)>& visit) {
  if (static_cast<int>(buf.length()) == 2 * n) {
    visit(buf);
    return;
  }
  if (ups < n) {
    buf.push_back(Step::Up);
    dyck_rec(n, ups + 1, height + 1, buf, visit);
    buf.pop_back();
  }
  if (height > 0) {
    buf.push_back(Step::Down);
    dyck_rec(n, ups, height - 1, buf, visit);
    buf.pop_back();
  }
}

struct CulminatingSearch {
  int length;
  int top;  // final height, visited only at the last step
  std::vector<int> seen;
  std::vector<Path> out;
  Path buf;

  void run(int height, int reached) {
    const int used = static_cast<int>(buf.length());
    if (used == length) {
      if (height == top) out.push_back(buf);
      return;
    }
    const int remaining = length - used;
    // cheapest completion: climb to top, plus a down-up detour at each
    // level in (reached, top-1] so it is seen twice before the next one
    const int detours = std::max(0, top - 1 - std::max(reached, 0));
    if (remaining < (top - height) + 2 * detours) return;
    if ((remaining - (top - height)) % 2 != 0) return;

    for (Step s : {Step::Up, Step::Down}) {
      int next = height + (s == Step::Up ? 1 : -1);
      if (next < 0) continue;
      if (next == top && remaining != 1) continue;
      if (next > reached && next >= 2 && seen[static_cast<std::size_t>(next - 1)] < 2) continue;
      buf.push_back(s);
      ++seen[static_cast<std::size_t>(next)];
      run(next, std::max(reached, next));
      --seen[static_cast<std::size_t>(next)];
      buf.pop_back();
    }
  }
};

}  // namespace

void for_each_dyck(int n, const std::function<void(const Path&)>& visit) {
  if (n < 0) return;
  Path buf;
  dyck_rec(n, 0, 0, buf, visit);
}

std::vector<Path> enumerate_dyck(int n, const PathFilter& filter) {
  std::vector<Path> out;
  for_each_dyck(n, [&](const Path& p) {
    if (!filter || filter(p)) out.push_back(p);
  });
  return out;
}

std::vector<Path> enumerate_progressive_culminating(int length, int height) {
  if (length < 0 || height < 0) return {};
  if (height == 0) {
    // only the empty path ends at a height-0 maximum visited once
    return length == 0 ? std::vector<Path>{Path{}} : std::vector<Path>{};
  }
  CulminatingSearch search{length, height, std::vector<int>(static_cast<std::size_t>(height) + 1, 0), {}, {}};
  search.seen[0] = 1;
  search.run(0, 0);
  return search.out;
}

}  // namespace dyck
