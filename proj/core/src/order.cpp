#include "starcat/order.hpp"

namespace starcat {

namespace {

void check_hermitian_endo(const WMorphism& h, const char* who) {
  require(h.is_endo(), Errc::NotEndo, std::string(who) + ": not an endomorphism");
  require(h == adjoint(h), Errc::NotHermitian, std::string(who) + ": not Hermitian");
}

}  // namespace

PositivityVerdict is_positive_endo(const WMorphism& h) {
  check_hermitian_endo(h, "is_positive_endo");
  const WObject& x = h.dom();
  RingId ring = h.ring();
  int n = x.dim();

  // B(std_j, std_k) = alpha_j^{-1} H_{jk}
  Mat form(ring, n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) form.set(j, k, inv(x.weight(j)) * h.mat().at(j, k));

  std::vector<Column> vecs;
  for (int j = 0; j < n; ++j) vecs.push_back(basis_column(x, j));
  std::vector<Column> pivot_vecs;
  std::vector<Scalar> pivots;

  while (form.rows() > 0) {
    int m = form.rows();
    int pivot = -1;
    for (int j = 0; j < m; ++j) {
      if (!form.at(j, j).is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) {
      // zero diagonal: either done, or an off-diagonal entry defeats positivity
      for (int j = 0; j < m; ++j) {
        for (int k = j + 1; k < m; ++k) {
          if (form.at(j, k).is_zero()) continue;
          // x = v_j (-B_jk) + v_k gives <x, H x> = -2 B_jk* B_jk
          Column witness = vecs[static_cast<size_t>(k)];
          Scalar coeff = neg(form.at(j, k));
          for (int i = 0; i < n; ++i)
            witness[static_cast<size_t>(i)] =
                witness[static_cast<size_t>(i)] + vecs[static_cast<size_t>(j)][static_cast<size_t>(i)] * coeff;
          return {false, std::nullopt, std::move(witness)};
        }
      }
      break;  // residual form vanishes
    }
    Scalar d = form.at(pivot, pivot);
    if (!is_positive_scalar(d))
      return {false, std::nullopt, vecs[static_cast<size_t>(pivot)]};
    Scalar d_inv = inv(d);
    // record the pivot, then take the Schur complement of the rest
    pivot_vecs.push_back(vecs[static_cast<size_t>(pivot)]);
    pivots.push_back(d);
    std::vector<Column> next_vecs;
    Mat next_form(ring, m - 1, m - 1);
    std::vector<int> keep;
    for (int j = 0; j < m; ++j)
      if (j != pivot) keep.push_back(j);
    for (size_t a = 0; a < keep.size(); ++a) {
      int j = keep[a];
      Column v = vecs[static_cast<size_t>(j)];
      Scalar coeff = d_inv * form.at(pivot, j);
      for (int i = 0; i < n; ++i)
        v[static_cast<size_t>(i)] =
            v[static_cast<size_t>(i)] - pivot_vecs.back()[static_cast<size_t>(i)] * coeff;
      next_vecs.push_back(std::move(v));
      for (size_t b = 0; b < keep.size(); ++b) {
        int k = keep[b];
        next_form.set(static_cast<int>(a), static_cast<int>(b),
                      form.at(j, k) - form.at(j, pivot) * d_inv * form.at(pivot, k));
      }
    }
    vecs = std::move(next_vecs);
    form = std::move(next_form);
  }

  // H = G*G where G is the first r rows of C^{-1}, C = [pivot basis | radical basis]
  int r = static_cast<int>(pivot_vecs.size());
  std::vector<Column> c_cols = pivot_vecs;
  c_cols.insert(c_cols.end(), vecs.begin(), vecs.end());
  Mat c = mat_from_cols(ring, n, c_cols);
  std::optional<Mat> c_inv = invert_mat(c);
  require(c_inv.has_value(), Errc::Singular, "is_positive_endo: degenerate congruence basis");
  Mat g(ring, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) g.set(i, j, c_inv->at(i, j));
  std::vector<Scalar> weights;
  weights.reserve(pivots.size());
  for (const Scalar& d : pivots) weights.push_back(inv(d));
  WMorphism factor(x, WObject(ring, std::move(weights)), std::move(g));
  return {true, std::move(factor), std::nullopt};
}

bool verify_verdict(const WMorphism& h, const PositivityVerdict& v) {
  if (v.positive) {
    if (!v.factor) return false;
    return compose(adjoint(*v.factor), *v.factor) == h;
  }
  if (!v.witness) return false;
  Scalar val = inner_product(*v.witness, mat_apply(h.mat(), *v.witness), h.dom());
  return !val.is_zero() && is_positive_scalar(neg(val));
}

bool le(const WMorphism& a, const WMorphism& b) {
  require(a.dom() == b.dom() && a.cod() == b.cod(), Errc::ShapeMismatch, "le: parallel morphisms required");
  return is_positive_endo(sub(b, a)).positive;
}

bool is_strictly_positive(const WMorphism& h) {
  return is_positive_endo(h).positive && invert_mat(h.mat()).has_value();
}

WMorphism invert(const WMorphism& f) {
  require(f.dom().dim() == f.cod().dim(), Errc::Singular, "invert: non-square morphism");
  std::optional<Mat> m = invert_mat(f.mat());
  require(m.has_value(), Errc::Singular, "invert: singular morphism");
  return WMorphism(f.cod(), f.dom(), *m);
}

bool is_contraction(const WMorphism& f) {
  return is_positive_endo(sub(identity(f.dom()), compose(adjoint(f), f))).positive;
}

bool is_strict_contraction(const WMorphism& f) {
  WMorphism gap = sub(identity(f.dom()), compose(adjoint(f), f));
  return is_positive_endo(gap).positive && invert_mat(gap.mat()).has_value();
}

BoundedTransform bounded_transform(const WMorphism& f, const WMorphism& a) {
  require(a.is_endo() && a.dom() == f.dom(), Errc::PreconditionFailed,
          "bounded_transform: a must be an endomorphism on dom(f)");
  require(a == adjoint(a), Errc::PreconditionFailed, "bounded_transform: a must be Hermitian");
  require(le(compose(adjoint(f), f), a), Errc::PreconditionFailed, "bounded_transform: f*f <= a fails");
  WMorphism d = add(identity(f.dom()), a);
  // 1 + a >= 1 > 0, so inverse closure makes this invertible
  WMorphism d_inv = invert(d);
  return {compose(f, d_inv), d};
}

WMorphism schur_inverse(const WMorphism& a, const WMorphism& b, const WMorphism& f) {
  require(a.is_endo() && a.dom() == f.dom(), Errc::PreconditionFailed,
          "schur_inverse: a must be an endomorphism on dom(f)");
  require(b.is_endo() && b.dom() == f.cod(), Errc::PreconditionFailed,
          "schur_inverse: b must be an endomorphism on cod(f)");
  require(is_strictly_positive(a), Errc::PreconditionFailed, "schur_inverse: a > 0 fails");
  require(is_strictly_positive(b), Errc::PreconditionFailed, "schur_inverse: b > 0 fails");
  WMorphism a_inv = invert(a);
  WMorphism b_inv = invert(b);
  WMorphism mid = sub(a, compose(adjoint(f), compose(b_inv, f)));
  WMorphism mid_inv = invert(mid);
  return add(b_inv, compose(b_inv, compose(f, compose(mid_inv, compose(adjoint(f), b_inv)))));
}

}  // namespace starcat
