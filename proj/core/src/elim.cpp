#include "starcat/elim.hpp"

namespace starcat {

namespace {

void swap_rows(Mat& m, int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < m.cols(); ++c) {
    Scalar tmp = m.at(r1, c);
    m.set(r1, c, m.at(r2, c));
    m.set(r2, c, tmp);
  }
}

void scale_row_left(Mat& m, int r, const Scalar& s) {
  for (int c = 0; c < m.cols(); ++c) m.set(r, c, s * m.at(r, c));
}

// row r -= s * row p
void sub_scaled_row(Mat& m, int r, int p, const Scalar& s) {
  for (int c = 0; c < m.cols(); ++c) m.set(r, c, m.at(r, c) - s * m.at(p, c));
}

// reduced row echelon form of the first `width` columns, carrying the rest along
Rref rref_partial(Mat m, int width) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < width && row < m.rows(); ++col) {
    int pivot_row = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    swap_rows(m, row, pivot_row);
    scale_row_left(m, row, inv(m.at(row, col)));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      if (!m.at(r, col).is_zero()) sub_scaled_row(m, r, row, m.at(r, col));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Rref rref(Mat m) {
  int width = m.cols();
  return rref_partial(std::move(m), width);
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

std::optional<Mat> solve_left(const Mat& m, const Mat& b) {
  require(m.ring() == b.ring(), Errc::RingMismatch, "solve across rings");
  require(m.rows() == b.rows(), Errc::ShapeMismatch, "solve: row counts differ");
  Mat aug(m.ring(), m.rows(), m.cols() + b.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.set(r, c, m.at(r, c));
    for (int c = 0; c < b.cols(); ++c) aug.set(r, m.cols() + c, b.at(r, c));
  }
  Rref red = rref_partial(std::move(aug), m.cols());
  // inconsistent if a zero M-row carries a nonzero B-part
  for (int r = static_cast<int>(red.pivot_cols.size()); r < m.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (!red.mat.at(r, m.cols() + c).is_zero()) return std::nullopt;
  Mat x(m.ring(), m.cols(), b.cols());
  for (size_t i = 0; i < red.pivot_cols.size(); ++i)
    for (int c = 0; c < b.cols(); ++c)
      x.set(red.pivot_cols[i], c, red.mat.at(static_cast<int>(i), m.cols() + c));
  return x;
}

std::optional<Mat> solve_right(const Mat& f, const Mat& g) {
  require(f.cols() == g.cols(), Errc::ShapeMismatch, "solve_right: column counts differ");
  std::optional<Mat> hd = solve_left(mat_dagger(f), mat_dagger(g));
  if (!hd) return std::nullopt;
  return mat_dagger(*hd);
}

std::optional<Mat> invert_mat(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::optional<Mat> x = solve_left(m, Mat::identity(m.ring(), m.rows()));
  if (!x) return std::nullopt;
  // solve_left guarantees m * x = 1 only if m has full rank
  if (mat_mul(m, *x) != Mat::identity(m.ring(), m.rows())) return std::nullopt;
  return x;
}

std::vector<Column> nullspace(const Mat& m) {
  Rref red = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : red.pivot_cols) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Column> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Column v(static_cast<size_t>(m.cols()), Scalar::zero(m.ring()));
    v[static_cast<size_t>(free)] = Scalar::one(m.ring());
    for (size_t i = 0; i < red.pivot_cols.size(); ++i)
      v[static_cast<size_t>(red.pivot_cols[i])] = neg(red.mat.at(static_cast<int>(i), free));
    // scale on the right so the first nonzero entry is 1
    for (const Scalar& entry : v) {
      if (!entry.is_zero()) {
        Scalar c = inv(entry);
        for (Scalar& e : v) e = e * c;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace starcat
