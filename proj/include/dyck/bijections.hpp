#pragma once

#include <stdexcept>
#include <vector>

#include "dyck/path.hpp"

namespace dyck {

class BijectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// P = A_0 u A_1 u ... A_{h-1} u . A_h . d B_{h-1} ... d B_0 for a Dyck path
/// of height h. Every factor is stored as the literal step subsequence, so
/// reassembly is concatenation. A_i and B_i are downward excursions of depth
/// at most i; A_0 and B_0 are always empty.
struct FDecomposition {
  int height = 0;
  std::vector<Path> a;  // a.size() == height + 1
  std::vector<Path> b;  // b.size() == height
};

/// P = u^h . d A_0 d A_1 ... d A_{h-1} for a nonempty rushed path, where each
/// A_i is a Dyck path of height at most i. m is the largest factor height and
/// j the first index attaining it.
struct GDecomposition {
  int height = 0;
  std::vector<Path> a;  // a.size() == height
  int m = 0;
  int j = 0;
};

FDecomposition decompose_f(const Path& p);
/// Reassembles the Dyck path from its factors.
Path assemble_dyck(const FDecomposition& d);
/// A_0 u . d B_0 u A_1 u ... d B_{h-1} u A_h u
Path assemble_f_image(const FDecomposition& d);
/// Recovers the factors from a progressive culminating path by cutting at the
/// first and second visits at each height.
FDecomposition decompose_f_image(const Path& q);

Path apply_f(const Path& p);
Path invert_f(const Path& q);

GDecomposition decompose_g(const Path& p);
Path assemble_rushed(const GDecomposition& d);
/// F(A_j) . A_0 d ... A_{m-1} d . u A_m d ... u A_{j-1} d . d . u A_{j+1} d ... u A_{h-1} d
Path assemble_g_image(const GDecomposition& d);
/// Recovers (h, A, m, j) from a nonempty progressive path.
GDecomposition decompose_g_image(const Path& q);

/// Rushed paths to progressive paths of the same length; G(empty) = empty.
Path apply_g(const Path& p);
Path invert_g(const Path& q);

}  // namespace dyck
