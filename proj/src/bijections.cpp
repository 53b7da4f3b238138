#include "dyck/bijections.hpp"

#include <algorithm>
#include <string>

namespace dyck {

namespace {

constexpr std::size_t npos = HeightProfile::npos;

// Smallest k > from with heights[k] == level.
std::size_t next_visit(const HeightProfile& prof, int level, std::size_t from) {
  for (std::size_t k = from + 1; k < prof.heights.size(); ++k)
    if (prof.heights[k] == level) return k;
  return npos;
}

Path ups(std::size_t count) {
  Path p;
  p.append(Step::Up, count);
  return p;
}

const Path kUp = ups(1);
const Path kDown = Path({Step::Down});

}  // namespace

FDecomposition decompose_f(const Path& p) {
  if (!is_dyck(p)) throw BijectionError("F: input is not a Dyck path: " + render_path(p));
  auto prof = height_profile(p);
  const int h = prof.max();
  const auto hs = static_cast<std::size_t>(h);

  std::vector<std::size_t> first(hs + 1, npos), last(hs + 1);
  for (std::size_t k = 0; k < prof.heights.size(); ++k) {
    auto level = static_cast<std::size_t>(prof.heights[k]);
    if (first[level] == npos) first[level] = k;
    last[level] = k;
  }

  FDecomposition d;
  d.height = h;
  d.a.resize(hs + 1);
  d.b.resize(hs);
  for (std::size_t i = 0; i < hs; ++i) d.a[i] = p.slice(first[i], first[i + 1] - 1);
  d.a[hs] = p.slice(first[hs], last[hs]);
  for (std::size_t i = 0; i < hs; ++i) d.b[i] = p.slice(last[i + 1] + 1, last[i]);
  return d;
}

Path assemble_dyck(const FDecomposition& d) {
  Path p;
  for (int i = 0; i < d.height; ++i) {
    p.append(d.a[static_cast<std::size_t>(i)]);
    p.push_back(Step::Up);
  }
  p.append(d.a[static_cast<std::size_t>(d.height)]);
  for (int i = d.height - 1; i >= 0; --i) {
    p.push_back(Step::Down);
    p.append(d.b[static_cast<std::size_t>(i)]);
  }
  return p;
}

Path assemble_f_image(const FDecomposition& d) {
  Path q = d.a[0];
  q.push_back(Step::Up);
  for (int i = 1; i <= d.height; ++i) {
    q.push_back(Step::Down);
    q.append(d.b[static_cast<std::size_t>(i - 1)]);
    q.push_back(Step::Up);
    q.append(d.a[static_cast<std::size_t>(i)]);
    q.push_back(Step::Up);
  }
  return q;
}

FDecomposition decompose_f_image(const Path& q) {
  if (q.empty() || !is_progressive_culminating(q))
    throw BijectionError("F^-1: input is not a progressive culminating path: " + render_path(q));
  auto prof = height_profile(q);
  const int h = prof.final_height() - 1;
  const auto hs = static_cast<std::size_t>(h);

  FDecomposition d;
  d.height = h;
  d.a.resize(hs + 1);
  d.b.resize(hs);
  const std::size_t first_one = prof.first_visit(1);
  d.a[0] = q.slice(0, first_one - 1);
  std::size_t first = first_one;
  for (std::size_t i = 1; i <= hs; ++i) {
    const auto level = static_cast<int>(i);
    const std::size_t second = next_visit(prof, level, first);
    const std::size_t next_first = next_visit(prof, level + 1, first);
    // progressive visits guarantee second < next_first
    d.b[i - 1] = q.slice(first + 1, second - 1);
    d.a[i] = q.slice(second, next_first - 1);
    first = next_first;
  }
  return d;
}

Path apply_f(const Path& p) { return assemble_f_image(decompose_f(p)); }

Path invert_f(const Path& q) { return assemble_dyck(decompose_f_image(q)); }

GDecomposition decompose_g(const Path& p) {
  if (p.empty()) throw BijectionError("G: the empty path has no decomposition");
  if (!is_rushed(p)) throw BijectionError("G: input is not a rushed path: " + render_path(p));
  auto prof = height_profile(p);
  const int h = prof.max();

  GDecomposition d;
  d.height = h;
  d.a.reserve(static_cast<std::size_t>(h));
  // A_i starts right after the first descent to h-1-i past the peak
  std::size_t start = static_cast<std::size_t>(h) + 1;
  for (int i = 0; i < h; ++i) {
    std::size_t end = i + 1 < h ? next_visit(prof, h - 2 - i, start) - 1 : p.length();
    d.a.push_back(p.slice(start, end));
    start = end + 1;
  }
  d.m = 0;
  for (const Path& f : d.a) d.m = std::max(d.m, max_height(f));
  d.j = 0;
  while (max_height(d.a[static_cast<std::size_t>(d.j)]) != d.m) ++d.j;
  return d;
}

Path assemble_rushed(const GDecomposition& d) {
  Path p = ups(static_cast<std::size_t>(d.height));
  for (const Path& f : d.a) {
    p.push_back(Step::Down);
    p.append(f);
  }
  return p;
}

Path assemble_g_image(const GDecomposition& d) {
  const auto& a = d.a;
  auto at = [&](int i) -> const Path& { return a[static_cast<std::size_t>(i)]; };
  Path q = apply_f(at(d.j));
  for (int i = 0; i < d.m; ++i) q = q + at(i) + kDown;
  for (int i = d.m; i < d.j; ++i) q = q + kUp + at(i) + kDown;
  q.push_back(Step::Down);
  for (int i = d.j + 1; i < d.height; ++i) q = q + kUp + at(i) + kDown;
  return q;
}

GDecomposition decompose_g_image(const Path& q) {
  if (q.empty() || !is_progressive(q))
    throw BijectionError("G^-1: input is not a nonempty progressive path: " + render_path(q));
  auto prof = height_profile(q);
  const int m = prof.max() - 1;

  const std::size_t peak = prof.first_visit(m + 1);
  Path top = invert_f(q.slice(0, peak));

  std::vector<Path> low;  // A_0 .. A_{m-1}
  std::size_t pos = peak;
  for (int k = 0; k < m; ++k) {
    std::size_t e = next_visit(prof, m - k, pos);
    low.push_back(q.slice(pos, e - 1));
    pos = e;
  }
  std::vector<Path> mid;  // A_m .. A_{j-1}, hanging below height 1
  while (pos < q.length() && q[pos] == Step::Up) {
    std::size_t e = next_visit(prof, 1, pos);
    mid.push_back(q.slice(pos + 1, e - 1));
    pos = e;
  }
  // the lone descent to 0
  ++pos;
  std::vector<Path> tail;  // A_{j+1} .. A_{h-1}
  while (pos < q.length()) {
    std::size_t e = next_visit(prof, 0, pos);
    tail.push_back(q.slice(pos + 1, e - 1));
    pos = e;
  }

  GDecomposition d;
  d.m = m;
  d.j = m + static_cast<int>(mid.size());
  d.height = d.j + 1 + static_cast<int>(tail.size());
  d.a = std::move(low);
  d.a.insert(d.a.end(), mid.begin(), mid.end());
  d.a.push_back(std::move(top));
  d.a.insert(d.a.end(), tail.begin(), tail.end());
  return d;
}

Path apply_g(const Path& p) {
  if (p.empty()) return p;
  return assemble_g_image(decompose_g(p));
}

Path invert_g(const Path& q) {
  if (q.empty()) return q;
  return assemble_rushed(decompose_g_image(q));
}

}  // namespace dyck
