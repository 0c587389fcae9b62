#include "starcat/weightmat.hpp"

namespace starcat {

Mat Mat::identity(RingId ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
  return m;
}

Column Mat::col(int c) const {
  Column out;
  out.reserve(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Column Mat::row(int r) const {
  Column out;
  out.reserve(static_cast<size_t>(cols_));
  for (int c = 0; c < cols_; ++c) out.push_back(at(r, c));
  return out;
}

bool Mat::is_zero() const {
  for (const Scalar& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  require(a.ring() == b.ring(), Errc::RingMismatch, "matrix product across rings");
  require(a.cols() == b.rows(), Errc::ShapeMismatch, "matrix product shape mismatch");
  Mat out(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.ring());
      for (int k = 0; k < a.cols(); ++k) acc = acc + a.at(i, k) * b.at(k, j);
      out.set(i, j, std::move(acc));
    }
  return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
  require(a.ring() == b.ring(), Errc::RingMismatch, "matrix sum across rings");
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::ShapeMismatch, "matrix sum shape mismatch");
  Mat out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) { return mat_add(a, mat_neg(b)); }

Mat mat_neg(const Mat& a) {
  Mat out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, neg(a.at(i, j)));
  return out;
}

Mat mat_dagger(const Mat& a) {
  Mat out(a.ring(), a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(j, i, star(a.at(i, j)));
  return out;
}

Mat mat_from_cols(RingId ring, int rows, const std::vector<Column>& cols) {
  Mat out(ring, rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) {
    require(static_cast<int>(cols[c].size()) == rows, Errc::ShapeMismatch, "ragged column list");
    for (int r = 0; r < rows; ++r) out.set(r, static_cast<int>(c), cols[c][static_cast<size_t>(r)]);
  }
  return out;
}

Column mat_apply(const Mat& m, const Column& x) {
  require(static_cast<int>(x.size()) == m.cols(), Errc::ShapeMismatch, "matrix-column shape mismatch");
  Column out(static_cast<size_t>(m.rows()), Scalar::zero(m.ring()));
  for (int r = 0; r < m.rows(); ++r) {
    Scalar acc = Scalar::zero(m.ring());
    for (int c = 0; c < m.cols(); ++c) acc = acc + m.at(r, c) * x[static_cast<size_t>(c)];
    out[static_cast<size_t>(r)] = std::move(acc);
  }
  return out;
}

Mat mat_scale_rat(const Mat& a, const Rat& q) {
  Mat out(a.ring(), a.rows(), a.cols());
  Scalar s = Scalar::from_rational(a.ring(), q);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j) * s);
  return out;
}

WObject::WObject(RingId ring, std::vector<Scalar> weights) : ring_(ring), weights_(std::move(weights)) {
  for (const Scalar& w : weights_) {
    require(w.ring() == ring_, Errc::RingMismatch, "weight from a different ring");
    require(!w.is_zero(), Errc::PreconditionFailed, "zero weight");
    require(is_hermitian(w), Errc::NotHermitian, "non-Hermitian weight");
    require(is_positive_scalar(w), Errc::PreconditionFailed, "non-positive weight");
  }
}

WObject WObject::unit(RingId ring, int dim) {
  return WObject(ring, std::vector<Scalar>(static_cast<size_t>(dim), Scalar::one(ring)));
}

WObject zero_object(RingId ring) { return WObject(ring, {}); }

WObject oplus(const WObject& x, const WObject& y) {
  require(x.ring() == y.ring(), Errc::RingMismatch, "biproduct across rings");
  std::vector<Scalar> w = x.weights();
  w.insert(w.end(), y.weights().begin(), y.weights().end());
  return WObject(x.ring(), std::move(w));
}

WMorphism::WMorphism(WObject dom, WObject cod, Mat mat)
    : dom_(std::move(dom)), cod_(std::move(cod)), mat_(std::move(mat)) {
  require(dom_.ring() == cod_.ring() && mat_.ring() == dom_.ring(), Errc::RingMismatch,
          "morphism data from mixed rings");
  require(mat_.rows() == cod_.dim() && mat_.cols() == dom_.dim(), Errc::ShapeMismatch,
          "matrix shape does not match dom/cod");
}

WMorphism identity(const WObject& x) { return WMorphism(x, x, Mat::identity(x.ring(), x.dim())); }

WMorphism zero_morphism(const WObject& x, const WObject& y) {
  require(x.ring() == y.ring(), Errc::RingMismatch, "zero morphism across rings");
  return WMorphism(x, y, Mat(x.ring(), y.dim(), x.dim()));
}

WMorphism compose(const WMorphism& g, const WMorphism& f) {
  require(f.cod() == g.dom(), Errc::ShapeMismatch, "compose: cod(f) != dom(g)");
  return WMorphism(f.dom(), g.cod(), mat_mul(g.mat(), f.mat()));
}

WMorphism add(const WMorphism& f, const WMorphism& g) {
  require(f.dom() == g.dom() && f.cod() == g.cod(), Errc::ShapeMismatch, "add: parallel morphisms required");
  return WMorphism(f.dom(), f.cod(), mat_add(f.mat(), g.mat()));
}

WMorphism sub(const WMorphism& f, const WMorphism& g) { return add(f, negate(g)); }

WMorphism negate(const WMorphism& f) { return WMorphism(f.dom(), f.cod(), mat_neg(f.mat())); }

WMorphism rational_scale(const WMorphism& f, const Rat& q) {
  return WMorphism(f.dom(), f.cod(), mat_scale_rat(f.mat(), q));
}

WMorphism adjoint(const WMorphism& f) {
  const WObject& a = f.dom();
  const WObject& b = f.cod();
  Mat out(f.ring(), a.dim(), b.dim());
  for (int j = 0; j < a.dim(); ++j)
    for (int k = 0; k < b.dim(); ++k)
      out.set(j, k, a.weight(j) * star(f.mat().at(k, j)) * inv(b.weight(k)));
  return WMorphism(b, a, std::move(out));
}

Scalar inner_product(const Column& x, const Column& y, const WObject& obj) {
  require(static_cast<int>(x.size()) == obj.dim() && static_cast<int>(y.size()) == obj.dim(),
          Errc::ShapeMismatch, "inner product column length mismatch");
  Scalar acc = Scalar::zero(obj.ring());
  for (int i = 0; i < obj.dim(); ++i)
    acc = acc + star(x[static_cast<size_t>(i)]) * inv(obj.weight(i)) * y[static_cast<size_t>(i)];
  return acc;
}

Biproduct biproduct(const WObject& x, const WObject& y) {
  WObject apex = oplus(x, y);
  Mat m1(x.ring(), apex.dim(), x.dim());
  for (int i = 0; i < x.dim(); ++i) m1.set(i, i, Scalar::one(x.ring()));
  Mat m2(x.ring(), apex.dim(), y.dim());
  for (int i = 0; i < y.dim(); ++i) m2.set(x.dim() + i, i, Scalar::one(x.ring()));
  WMorphism i1(x, apex, std::move(m1));
  WMorphism i2(y, apex, std::move(m2));
  return Biproduct{apex, i1, i2, adjoint(i1), adjoint(i2)};
}

WMorphism pairing(const std::vector<WMorphism>& fs) {
  require(!fs.empty(), Errc::ShapeMismatch, "pairing of an empty family");
  WObject dom = fs.front().dom();
  WObject cod = fs.front().cod();
  for (size_t i = 1; i < fs.size(); ++i) {
    require(fs[i].dom() == dom, Errc::ShapeMismatch, "pairing: domains differ");
    cod = oplus(cod, fs[i].cod());
  }
  Mat m(dom.ring(), cod.dim(), dom.dim());
  int r0 = 0;
  for (const WMorphism& f : fs) {
    for (int r = 0; r < f.cod().dim(); ++r)
      for (int c = 0; c < dom.dim(); ++c) m.set(r0 + r, c, f.mat().at(r, c));
    r0 += f.cod().dim();
  }
  return WMorphism(dom, cod, std::move(m));
}

WMorphism pairing(const WMorphism& f, const WMorphism& g) { return pairing(std::vector<WMorphism>{f, g}); }

WMorphism copairing(const std::vector<WMorphism>& fs) {
  require(!fs.empty(), Errc::ShapeMismatch, "copairing of an empty family");
  WObject cod = fs.front().cod();
  WObject dom = fs.front().dom();
  for (size_t i = 1; i < fs.size(); ++i) {
    require(fs[i].cod() == cod, Errc::ShapeMismatch, "copairing: codomains differ");
    dom = oplus(dom, fs[i].dom());
  }
  Mat m(cod.ring(), cod.dim(), dom.dim());
  int c0 = 0;
  for (const WMorphism& f : fs) {
    for (int r = 0; r < cod.dim(); ++r)
      for (int c = 0; c < f.dom().dim(); ++c) m.set(r, c0 + c, f.mat().at(r, c));
    c0 += f.dom().dim();
  }
  return WMorphism(dom, cod, std::move(m));
}

WMorphism copairing(const WMorphism& f, const WMorphism& g) { return copairing(std::vector<WMorphism>{f, g}); }

WMorphism direct_sum(const WMorphism& f, const WMorphism& g) {
  return block({{f, zero_morphism(g.dom(), f.cod())}, {zero_morphism(f.dom(), g.cod()), g}});
}

WMorphism block(const std::vector<std::vector<WMorphism>>& rows) {
  require(!rows.empty() && !rows.front().empty(), Errc::ShapeMismatch, "empty block assembly");
  std::vector<WMorphism> stacked;
  stacked.reserve(rows.size());
  for (const auto& row : rows) stacked.push_back(copairing(row));
  return pairing(stacked);
}

WMorphism diagonal(const WObject& x, int n) {
  require(n >= 1, Errc::ShapeMismatch, "diagonal needs n >= 1");
  return pairing(std::vector<WMorphism>(static_cast<size_t>(n), identity(x)));
}

WMorphism codiagonal(const WObject& x, int n) {
  require(n >= 1, Errc::ShapeMismatch, "codiagonal needs n >= 1");
  return copairing(std::vector<WMorphism>(static_cast<size_t>(n), identity(x)));
}

Column basis_column(const WObject& x, int j) {
  Column col(static_cast<size_t>(x.dim()), Scalar::zero(x.ring()));
  col[static_cast<size_t>(j)] = Scalar::one(x.ring());
  return col;
}

WMorphism column_morphism(const WObject& x, const Column& col) {
  return WMorphism(WObject::unit(x.ring(), 1), x, mat_from_cols(x.ring(), x.dim(), {col}));
}

}  // namespace starcat
