#pragma once

#include <optional>

#include "starcat/factor.hpp"

namespace starcat {

// Either a factorization witness H = G*G (with G epic and codomain weights
// the inverses of the diagonalization pivots), or a column x whose form value
// <x, H x> is strictly negative in the scalar cone.
struct PositivityVerdict {
  bool positive = false;
  std::optional<WMorphism> factor;
  std::optional<Column> witness;
};

// Decides membership in the canonical cone {G*G} by congruence
// diagonalization of the weighted form B(x, y) = <x, H y>. Sound and
// complete over the four supplied rings (their Hermitian parts are totally
// ordered). Requires a Hermitian endomorphism.
PositivityVerdict is_positive_endo(const WMorphism& h);

// re-checks the carried certificate against H
bool verify_verdict(const WMorphism& h, const PositivityVerdict& v);

// a <= b in the canonical order: b - a = y*y for some y
bool le(const WMorphism& a, const WMorphism& b);

// positive and invertible
bool is_strictly_positive(const WMorphism& h);

// two-sided inverse of a square full-rank morphism; Errc::Singular otherwise
WMorphism invert(const WMorphism& f);

bool is_contraction(const WMorphism& f);         // f*f <= 1
bool is_strict_contraction(const WMorphism& f);  // f*f < 1 with invertible gap

// f = c . d with c = f(1+a)^{-1} and d = 1+a, both c and d^{-1} contractive.
// Requires a Hermitian with f*f <= a.
struct BoundedTransform {
  WMorphism c;
  WMorphism d;
};
BoundedTransform bounded_transform(const WMorphism& f, const WMorphism& a);

// (b - f a^{-1} f*)^{-1} computed as b^{-1} + b^{-1} f (a - f* b^{-1} f)^{-1} f* b^{-1}.
// Requires a > 0 on dom(f), b > 0 on cod(f), and a - f* b^{-1} f invertible.
WMorphism schur_inverse(const WMorphism& a, const WMorphism& b, const WMorphism& f);

}  // namespace starcat
