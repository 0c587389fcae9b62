#pragma once

#include "starcat/gram.hpp"
#include "starcat/order.hpp"

namespace starcat {

// Cospan of isometries (s1, s2) with adjoint(s2).s1 = subject.
struct Codilation {
  WMorphism subject;  // f : X -> Y
  WMorphism s1;       // X -> apex
  WMorphism s2;       // Y -> apex
  const WObject& apex() const { return s1.cod(); }
};

// Validates the isometry and pairing equations.
Codilation make_codilation(const WMorphism& subject, const WMorphism& s1, const WMorphism& s2);

enum class CodilatorKind {
  DouglianJointEpi,        // jointly epic codilation of a contraction
  StrictCoproduct,         // legs form a coproduct (strict contraction)
  PartialIsometryPushout,  // three-block pushout construction
};

struct CodilatorCertificate {
  Codilation codilation;
  CodilatorKind kind;
};

// apex = cod(f) (+) Z where G : X -> Z is the epic factor of 1 - f*f;
// legs are [f; G] and the first block embedding. Requires a contraction.
CodilatorCertificate codilator(const WMorphism& f);

// Same construction; the factor is invertible, so the legs form a coproduct.
// Requires a strict contraction.
CodilatorCertificate codilator_strict(const WMorphism& f);

// apex = (X (-) A) (+) A (+) (Y (-) A) for the partial isometry f = t s*,
// with legs [s_perp*; s*; 0] and [0; t*; t_perp*].
CodilatorCertificate codilator_partial_isometry(const WMorphism& f);

// The unique isometry h with h.s1 = t1 and h.s2 = t2, computed two ways
// (elimination and the canonical section of the jointly epic copairing);
// both routes must agree.
WMorphism mediating_isometry(const CodilatorCertificate& cert, const Codilation& other);

// Contractive extension h of g along f with Ker h >= (Ran f)^perp, in the
// canonical form h = j t i*. Requires dom(f) = dom(g) and g*g <= f*f.
WMorphism douglas_extension(const WMorphism& f, const WMorphism& g);

// Pushout of isometries s : A -> X and t : A -> Y along their common domain.
struct IsometryPushout {
  WMorphism from_x;  // X -> (X (-) A) (+) A (+) (Y (-) A)
  WMorphism from_y;  // Y -> same apex
};
IsometryPushout pushout_of_isometries(const WMorphism& s, const WMorphism& t);

}  // namespace starcat
