#include "starcat/factor.hpp"

namespace starcat {

std::vector<Column> orthogonalize_columns(const std::vector<Column>& cols, const WObject& obj) {
  std::vector<Column> es;
  std::vector<Scalar> norm_inv;
  for (const Column& v : cols) {
    Column e = v;
    for (size_t k = 0; k < es.size(); ++k) {
      // e -= e_k <e_k,e_k>^{-1} <e_k, v>
      Scalar coeff = norm_inv[k] * inner_product(es[k], v, obj);
      for (int i = 0; i < obj.dim(); ++i)
        e[static_cast<size_t>(i)] = e[static_cast<size_t>(i)] - es[k][static_cast<size_t>(i)] * coeff;
    }
    Scalar n = inner_product(e, e, obj);
    require(!n.is_zero(), Errc::PreconditionFailed, "orthogonalize_columns: dependent columns");
    norm_inv.push_back(inv(n));
    es.push_back(std::move(e));
  }
  return es;
}

WMorphism isometry_from_columns(const std::vector<Column>& orthogonal_cols, const WObject& cod) {
  std::vector<Scalar> weights;
  weights.reserve(orthogonal_cols.size());
  for (const Column& e : orthogonal_cols) weights.push_back(inv(inner_product(e, e, cod)));
  WObject dom(cod.ring(), std::move(weights));
  return WMorphism(dom, cod, mat_from_cols(cod.ring(), cod.dim(), orthogonal_cols));
}

WMorphism kernel(const WMorphism& f) {
  std::vector<Column> basis = nullspace(f.mat());
  if (basis.empty())
    return WMorphism(zero_object(f.ring()), f.dom(), Mat(f.ring(), f.dom().dim(), 0));
  return isometry_from_columns(orthogonalize_columns(basis, f.dom()), f.dom());
}

WMorphism cokernel(const WMorphism& f) { return adjoint(kernel(adjoint(f))); }

WMorphism orthogonal_complement(const WMorphism& m) { return kernel(adjoint(m)); }

WMorphism canonical_retraction(const WMorphism& s) {
  WMorphism gram = compose(adjoint(s), s);
  std::optional<Mat> inv_gram = invert_mat(gram.mat());
  require(inv_gram.has_value(), Errc::NotClosedMono, "canonical_retraction: s*s is not invertible");
  return compose(WMorphism(s.dom(), s.dom(), *inv_gram), adjoint(s));
}

RangeFactorization range_factorization(const WMorphism& f) {
  WMorphism comp = orthogonal_complement(kernel(f));  // isometry onto (Ker f)^perp
  WMorphism e = adjoint(comp);
  WMorphism through = compose(f, comp);  // independent columns spanning the range
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(through.dom().dim()));
  for (int c = 0; c < through.dom().dim(); ++c) cols.push_back(through.mat().col(c));
  WMorphism j = cols.empty()
                    ? WMorphism(zero_object(f.ring()), f.cod(), Mat(f.ring(), f.cod().dim(), 0))
                    : isometry_from_columns(orthogonalize_columns(cols, f.cod()), f.cod());
  std::optional<Mat> u_mat = solve_left(j.mat(), through.mat());
  require(u_mat.has_value(), Errc::NoSolution, "range_factorization: basis change failed");
  WMorphism u(through.dom(), j.dom(), *u_mat);
  return {j, u, e};
}

MorphismClass classify(const WMorphism& f) {
  MorphismClass out;
  int r = rank(f.mat());
  out.mono = r == f.dom().dim();
  out.epi = r == f.cod().dim();
  // over a division ring every injective matrix has a left inverse
  out.split_mono = out.mono;
  out.closed_mono = invert_mat(compose(adjoint(f), f).mat()).has_value();
  out.isometry = compose(adjoint(f), f) == identity(f.dom());
  out.coisometry = compose(f, adjoint(f)) == identity(f.cod());
  out.unitary = out.isometry && out.coisometry;
  out.partial_isometry = compose(f, compose(adjoint(f), f)) == f;
  return out;
}

Extension solve_extension(const WMorphism& g, const WMorphism& f) {
  require(f.dom() == g.dom(), Errc::ShapeMismatch, "solve_extension: domains differ");
  std::optional<Mat> h = solve_right(f.mat(), g.mat());
  require(h.has_value(), Errc::NoSolution, "solve_extension: no h with h.f = g");
  bool unique = rank(f.mat()) == f.cod().dim();
  return {WMorphism(f.cod(), g.cod(), *h), unique};
}

}  // namespace starcat
