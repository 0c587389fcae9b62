#pragma once

#include <optional>

#include "starcat/factor.hpp"

namespace starcat {

// Family of morphisms with a common codomain (the apex).
struct WideCospan {
  std::vector<WMorphism> legs;
};

WideCospan make_wide_cospan(std::vector<WMorphism> legs);  // validates apex/ring

// Retraction (r_k) with r_k . s_j = delta_{kj}, when the copairing of the
// legs is a split monomorphism.
std::optional<std::vector<WMorphism>> is_split(const WideCospan& c);

// t_1 = s_1,  t_{m+1} = s_{m+1} - sum_k t_k (t_k* t_k)^{-1} t_k* s_{m+1}.
// Legs are processed in the given order; requires a split cospan.
WideCospan gram_schmidt(const WideCospan& c);

// Hermitian matrix of pairwise inner products <x_i, x_j>.
struct GramMatrix {
  GramMatrix(RingId ring, Mat entries);
  RingId ring;
  Mat entries;
};

// Basis change U (columns = coordinates of the orthogonal basis) and the
// object whose weights are <e_k, e_k>^{-1}; conjugating the Gram matrix by U
// gives the diagonal of weight inverses. Requires positive definiteness.
struct GramDiagonalization {
  WObject object;
  Mat basis_change;
};
GramDiagonalization orthogonalize_gram(const GramMatrix& g);

// Column-space equality of two monos into a common codomain.
bool same_subobject(const WMorphism& m1, const WMorphism& m2);

}  // namespace starcat
