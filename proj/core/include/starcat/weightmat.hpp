#pragma once

#include <vector>

#include "starcat/scalar.hpp"

namespace starcat {

using Column = std::vector<Scalar>;

// Dense exact matrix over one of the four rings. 0xN and Nx0 shapes are
// first-class; the ring tag is kept even when there are no entries.
class Mat {
 public:
  Mat(RingId ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Scalar::zero(ring)) {
    require(rows >= 0 && cols >= 0, Errc::ShapeMismatch, "negative matrix shape");
  }
  static Mat identity(RingId ring, int n);

  RingId ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Scalar& at(int r, int c) const { return a_[index(r, c)]; }
  void set(int r, int c, Scalar v) {
    require(v.ring() == ring_, Errc::RingMismatch, "matrix entry from a different ring");
    a_[index(r, c)] = std::move(v);
  }

  Column col(int c) const;
  Column row(int r) const;

  bool is_zero() const;
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  size_t index(int r, int c) const {
    require(r >= 0 && r < rows_ && c >= 0 && c < cols_, Errc::ShapeMismatch, "matrix index out of range");
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
  }
  RingId ring_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
// entrywise star + transpose (the unweighted conjugate-transpose)
Mat mat_dagger(const Mat& a);
Mat mat_from_cols(RingId ring, int rows, const std::vector<Column>& cols);
Mat mat_scale_rat(const Mat& a, const Rat& q);
Column mat_apply(const Mat& m, const Column& x);

// An object (m, alpha) of WeightMat(D): a dimension together with a vector
// of nonzero positive Hermitian weights.
class WObject {
 public:
  WObject(RingId ring, std::vector<Scalar> weights);
  static WObject unit(RingId ring, int dim);  // all weights 1

  RingId ring() const { return ring_; }
  int dim() const { return static_cast<int>(weights_.size()); }
  const Scalar& weight(int i) const { return weights_[static_cast<size_t>(i)]; }
  const std::vector<Scalar>& weights() const { return weights_; }

  friend bool operator==(const WObject& a, const WObject& b) {
    return a.ring_ == b.ring_ && a.weights_ == b.weights_;
  }
  friend bool operator!=(const WObject& a, const WObject& b) { return !(a == b); }

 private:
  RingId ring_;
  std::vector<Scalar> weights_;
};

WObject zero_object(RingId ring);
// apex of the orthonormal biproduct: weights concatenated
WObject oplus(const WObject& x, const WObject& y);

// A morphism (m, alpha) -> (n, beta): an n x m matrix acting on columns.
class WMorphism {
 public:
  WMorphism(WObject dom, WObject cod, Mat mat);

  const WObject& dom() const { return dom_; }
  const WObject& cod() const { return cod_; }
  const Mat& mat() const { return mat_; }
  RingId ring() const { return dom_.ring(); }
  bool is_endo() const { return dom_ == cod_; }

  friend bool operator==(const WMorphism& a, const WMorphism& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const WMorphism& a, const WMorphism& b) { return !(a == b); }

 private:
  WObject dom_, cod_;
  Mat mat_;
};

WMorphism identity(const WObject& x);
WMorphism zero_morphism(const WObject& x, const WObject& y);
WMorphism compose(const WMorphism& g, const WMorphism& f);  // g after f
WMorphism add(const WMorphism& f, const WMorphism& g);
WMorphism sub(const WMorphism& f, const WMorphism& g);
WMorphism negate(const WMorphism& f);
WMorphism rational_scale(const WMorphism& f, const Rat& q);

// the weighted involution: (M*)_{jk} = alpha_j (M_{kj})* beta_k^{-1}
WMorphism adjoint(const WMorphism& f);

// <x, y> = x_1* alpha_1^{-1} y_1 + ... + x_m* alpha_m^{-1} y_m
Scalar inner_product(const Column& x, const Column& y, const WObject& obj);

struct Biproduct {
  WObject apex;
  WMorphism i1, i2;  // injections (block embeddings)
  WMorphism p1, p2;  // projections (their adjoints)
};
Biproduct biproduct(const WObject& x, const WObject& y);

// product pairing [f; g]: common dom, stacked codomains
WMorphism pairing(const WMorphism& f, const WMorphism& g);
WMorphism pairing(const std::vector<WMorphism>& fs);
// coproduct copairing [f g]: common cod, concatenated domains
WMorphism copairing(const WMorphism& f, const WMorphism& g);
WMorphism copairing(const std::vector<WMorphism>& fs);
// f (+) g, the block diagonal
WMorphism direct_sum(const WMorphism& f, const WMorphism& g);
// general block assembly; rows share codomains, columns share domains
WMorphism block(const std::vector<std::vector<WMorphism>>& rows);

WMorphism diagonal(const WObject& x, int n = 2);    // [1; ...; 1]
WMorphism codiagonal(const WObject& x, int n = 2);  // [1 ... 1]

// column j of the identity, as a vector
Column basis_column(const WObject& x, int j);
// x viewed as a morphism (1, (1)) -> X
WMorphism column_morphism(const WObject& x, const Column& col);

}  // namespace starcat
