#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

enum class Step : std::uint8_t { Up = 0, Down = 1 };

/// A finite word over {up, down}. Dyck, rushed, progressive and culminating
/// are predicates over this one type. Ordering is lexicographic with Up < Down.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  std::size_t semilength() const noexcept { return steps_.size() / 2; }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t k) const { return steps_[k]; }

  void push_back(Step s) { steps_.push_back(s); }
  void pop_back() { steps_.pop_back(); }
  void append(const Path& other);
  void append(Step s, std::size_t count);

  /// Steps [begin, end).
  Path slice(std::size_t begin, std::size_t end) const;

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;

 private:
  std::vector<Step> steps_;
};

Path operator+(Path lhs, const Path& rhs);

class PathParseError : public std::invalid_argument {
 public:
  PathParseError(std::size_t position, char found);
  /// 1-based index of the offending character.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

Path parse_path(std::string_view text);
std::string render_path(const Path& p);

/// heights[k] is the height after the first k steps; heights[0] == 0, so the
/// vector has length() + 1 entries.
struct HeightProfile {
  std::vector<int> heights;

  int final_height() const { return heights.back(); }
  int max() const;
  int min() const;
  /// Number of indices k with heights[k] == level and k < end.
  std::size_t visits(int level, std::size_t end) const;
  /// Smallest k with heights[k] == level, or npos.
  std::size_t first_visit(int level) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

HeightProfile height_profile(const Path& p);

/// The path read right-to-left: steps reversed with up and down swapped.
Path reverse_flip(const Path& p);

int max_height(const Path& p);
bool is_dyck(const Path& p);
bool is_culminating(const Path& p);
bool is_progressive(const Path& p);
bool is_rushed(const Path& p);
bool is_doubly_progressive(const Path& p);
bool is_unconstrained_progressive(const Path& p);

/// The visit condition of progressive paths, without any Dyck requirement:
/// for every i in 2..max_height, height i-1 is visited at least twice
/// strictly before the first visit to height i.
bool has_progressive_visits(const Path& p);

/// Culminating and satisfying the progressive visit condition. These are the
/// images of Dyck paths under F.
bool is_progressive_culminating(const Path& p);

using PathFilter = std::function<bool(const Path&)>;

/// Calls `visit` on every Dyck path of semilength n in lexicographic order.
void for_each_dyck(int n, const std::function<void(const Path&)>& visit);

/// All Dyck paths of semilength n accepted by `filter`, lexicographic (U < D).
std::vector<Path> enumerate_dyck(int n, const PathFilter& filter = {});

/// All progressive culminating paths with the given step count and height,
/// generated directly by a pruned depth-first search (not through F).
std::vector<Path> enumerate_progressive_culminating(int length, int height);

}  // namespace dyck
