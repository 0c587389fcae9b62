#pragma once

#include <optional>

#include "starcat/weightmat.hpp"

namespace starcat {

// Gaussian elimination over a division ring. Row operations multiply on the
// left only, so the solution set of M x = b (a right submodule) is preserved;
// this is what makes the routines correct over the quaternions. Pivots are
// the first nonzero entry in column order, which keeps outputs deterministic.

struct Rref {
  Mat mat;
  std::vector<int> pivot_cols;
};

Rref rref(Mat m);
int rank(const Mat& m);

// X with M X = B, free variables set to zero; nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& m, const Mat& b);

// H with H F = G via the star-transpose of both sides; nullopt when inconsistent.
std::optional<Mat> solve_right(const Mat& f, const Mat& g);

// two-sided inverse; nullopt when not square or singular
std::optional<Mat> invert_mat(const Mat& m);

// Basis of {x : M x = 0} as a right module, each vector scaled so its first
// nonzero entry is 1.
std::vector<Column> nullspace(const Mat& m);

}  // namespace starcat
