#include "starcat/gram.hpp"

namespace starcat {

WideCospan make_wide_cospan(std::vector<WMorphism> legs) {
  require(!legs.empty(), Errc::ShapeMismatch, "wide cospan needs at least one leg");
  for (size_t i = 1; i < legs.size(); ++i)
    require(legs[i].cod() == legs.front().cod(), Errc::ShapeMismatch, "wide cospan legs must share the apex");
  return WideCospan{std::move(legs)};
}

std::optional<std::vector<WMorphism>> is_split(const WideCospan& c) {
  WMorphism joint = copairing(c.legs);
  if (rank(joint.mat()) != joint.dom().dim()) return std::nullopt;
  WMorphism retraction = canonical_retraction(joint);
  std::vector<WMorphism> rs;
  int r0 = 0;
  for (const WMorphism& leg : c.legs) {
    int d = leg.dom().dim();
    Mat m(joint.ring(), d, retraction.dom().dim());
    for (int r = 0; r < d; ++r)
      for (int col = 0; col < retraction.dom().dim(); ++col) m.set(r, col, retraction.mat().at(r0 + r, col));
    rs.emplace_back(retraction.dom(), leg.dom(), std::move(m));
    r0 += d;
  }
  return rs;
}

WideCospan gram_schmidt(const WideCospan& c) {
  require(is_split(c).has_value(), Errc::NotSplit, "gram_schmidt requires a split cospan");
  std::vector<WMorphism> ts;
  for (const WMorphism& s : c.legs) {
    WMorphism t = s;
    for (const WMorphism& prev : ts) {
      WMorphism gram = compose(adjoint(prev), prev);
      std::optional<Mat> gram_inv = invert_mat(gram.mat());
      require(gram_inv.has_value(), Errc::NotSplit, "gram_schmidt: non-closed intermediate leg");
      WMorphism proj = compose(prev, compose(WMorphism(prev.dom(), prev.dom(), *gram_inv),
                                             compose(adjoint(prev), s)));
      t = sub(t, proj);
    }
    ts.push_back(std::move(t));
  }
  return WideCospan{std::move(ts)};
}

GramMatrix::GramMatrix(RingId ring_in, Mat entries_in) : ring(ring_in), entries(std::move(entries_in)) {
  require(entries.ring() == ring, Errc::RingMismatch, "Gram matrix ring mismatch");
  require(entries.rows() == entries.cols(), Errc::ShapeMismatch, "Gram matrix must be square");
  for (int i = 0; i < entries.rows(); ++i)
    for (int j = 0; j < entries.cols(); ++j)
      require(star(entries.at(i, j)) == entries.at(j, i), Errc::NotHermitian,
              "Gram matrix is not Hermitian");
}

GramDiagonalization orthogonalize_gram(const GramMatrix& g) {
  int n = g.entries.rows();
  RingId ring = g.ring;
  // coordinates of the orthogonal basis in terms of the abstract inputs
  std::vector<Column> us;
  std::vector<Scalar> norms;
  for (int k = 0; k < n; ++k) {
    Column u(static_cast<size_t>(n), Scalar::zero(ring));
    u[static_cast<size_t>(k)] = Scalar::one(ring);
    for (int t = 0; t < k; ++t) {
      // <e_t, x_k> = (u_t^dagger G)_k
      Scalar form = Scalar::zero(ring);
      for (int i = 0; i < n; ++i) form = form + star(us[static_cast<size_t>(t)][static_cast<size_t>(i)]) * g.entries.at(i, k);
      Scalar coeff = inv(norms[static_cast<size_t>(t)]) * form;
      for (int i = 0; i < n; ++i)
        u[static_cast<size_t>(i)] =
            u[static_cast<size_t>(i)] - us[static_cast<size_t>(t)][static_cast<size_t>(i)] * coeff;
    }
    // <e_k, e_k> = u^dagger G u
    Scalar norm = Scalar::zero(ring);
    for (int i = 0; i < n; ++i) {
      Scalar row = Scalar::zero(ring);
      for (int j = 0; j < n; ++j) row = row + g.entries.at(i, j) * u[static_cast<size_t>(j)];
      norm = norm + star(u[static_cast<size_t>(i)]) * row;
    }
    require(!norm.is_zero() && is_positive_scalar(norm), Errc::NotPositiveDefinite,
            "orthogonalize_gram: pivot " + std::to_string(k) + " is not strictly positive");
    us.push_back(std::move(u));
    norms.push_back(std::move(norm));
  }
  std::vector<Scalar> weights;
  weights.reserve(norms.size());
  for (const Scalar& nrm : norms) weights.push_back(inv(nrm));
  return {WObject(ring, std::move(weights)), mat_from_cols(ring, n, us)};
}

bool same_subobject(const WMorphism& m1, const WMorphism& m2) {
  require(m1.cod() == m2.cod(), Errc::ShapeMismatch, "same_subobject: codomains differ");
  require(rank(m1.mat()) == m1.dom().dim() && rank(m2.mat()) == m2.dom().dim(), Errc::NotMono,
          "same_subobject requires monomorphisms");
  return solve_left(m2.mat(), m1.mat()).has_value() && solve_left(m1.mat(), m2.mat()).has_value();
}

}  // namespace starcat
