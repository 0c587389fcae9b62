#pragma once

#include "starcat/elim.hpp"

namespace starcat {

// f = j . u . e with j an isometry, u invertible, e a coisometry
struct RangeFactorization {
  WMorphism j;
  WMorphism u;
  WMorphism e;
};

struct MorphismClass {
  bool mono = false;
  bool epi = false;
  bool split_mono = false;
  bool closed_mono = false;
  bool isometry = false;
  bool coisometry = false;
  bool unitary = false;
  bool partial_isometry = false;
};

struct Extension {
  WMorphism h;
  bool unique;  // true when the right factor is epic
};

// Isometric kernel: k with f.k = 0, adjoint(k).k = 1, universal among
// g with f.g = 0. The domain weights are the inverse norms of the
// orthogonalized nullspace basis.
WMorphism kernel(const WMorphism& f);

// adjoint(kernel(adjoint(f))); always a coisometry
WMorphism cokernel(const WMorphism& f);

// kernel(adjoint(m)); always an isometry
WMorphism orthogonal_complement(const WMorphism& m);

// (s*s)^{-1} s*; requires s*s invertible
WMorphism canonical_retraction(const WMorphism& s);

RangeFactorization range_factorization(const WMorphism& f);

MorphismClass classify(const WMorphism& f);

// h with h.f = g; Errc::NoSolution when no extension exists
Extension solve_extension(const WMorphism& g, const WMorphism& f);

// Orthogonalizes columns under the object's inner product via the
// Gram-Schmidt recursion; the inputs must be right-linearly independent.
std::vector<Column> orthogonalize_columns(const std::vector<Column>& cols, const WObject& obj);

// Builds the isometry whose columns are the orthogonalized inputs, weighting
// the domain by the inverse norms <e_k, e_k>^{-1}.
WMorphism isometry_from_columns(const std::vector<Column>& orthogonal_cols, const WObject& cod);

}  // namespace starcat
