#include "starcat/dilation.hpp"

namespace starcat {

namespace {

bool is_isometry(const WMorphism& f) { return compose(adjoint(f), f) == identity(f.dom()); }

void check_codilation(const WMorphism& subject, const WMorphism& s1, const WMorphism& s2) {
  require(s1.dom() == subject.dom() && s2.dom() == subject.cod(), Errc::ShapeMismatch,
          "codilation legs do not match the subject");
  require(s1.cod() == s2.cod(), Errc::ShapeMismatch, "codilation legs must share the apex");
  require(is_isometry(s1) && is_isometry(s2), Errc::NotIsometry, "codilation legs must be isometries");
  require(compose(adjoint(s2), s1) == subject, Errc::PreconditionFailed,
          "codilation pairing adjoint(s2).s1 = f fails");
}

void check_jointly_epic(const Codilation& c) {
  WMorphism joint = copairing(c.s1, c.s2);
  require(rank(joint.mat()) == c.apex().dim(), Errc::PreconditionFailed,
          "codilation legs are not jointly epic");
}

}  // namespace

Codilation make_codilation(const WMorphism& subject, const WMorphism& s1, const WMorphism& s2) {
  check_codilation(subject, s1, s2);
  return Codilation{subject, s1, s2};
}

CodilatorCertificate codilator(const WMorphism& f) {
  WMorphism gap = sub(identity(f.dom()), compose(adjoint(f), f));
  PositivityVerdict verdict = is_positive_endo(gap);
  require(verdict.positive, Errc::NotContraction, "codilator requires a contraction");
  const WMorphism& g = *verdict.factor;  // epic, g*g = 1 - f*f
  Biproduct bp = biproduct(f.cod(), g.cod());
  WMorphism s1 = pairing(f, g);
  Codilation c = make_codilation(f, s1, bp.i1);
  check_jointly_epic(c);
  return {std::move(c), CodilatorKind::DouglianJointEpi};
}

CodilatorCertificate codilator_strict(const WMorphism& f) {
  WMorphism gap = sub(identity(f.dom()), compose(adjoint(f), f));
  PositivityVerdict verdict = is_positive_endo(gap);
  require(verdict.positive && invert_mat(gap.mat()).has_value(), Errc::NotStrictContraction,
          "codilator_strict requires a strict contraction");
  const WMorphism& g = *verdict.factor;  // invertible with g*g = 1 - f*f
  Biproduct bp = biproduct(f.cod(), g.cod());
  WMorphism s1 = pairing(f, g);
  Codilation c = make_codilation(f, s1, bp.i1);
  require(invert_mat(copairing(c.s1, c.s2).mat()).has_value(), Errc::PreconditionFailed,
          "codilator_strict: copairing of the legs is not invertible");
  return {std::move(c), CodilatorKind::StrictCoproduct};
}

CodilatorCertificate codilator_partial_isometry(const WMorphism& f) {
  require(classify(f).partial_isometry, Errc::NotPartialIsometry,
          "codilator_partial_isometry requires a partial isometry");
  RangeFactorization rf = range_factorization(f);
  WMorphism t = rf.j;                              // A -> Y
  WMorphism s = adjoint(compose(rf.u, rf.e));      // A -> X
  require(is_isometry(s), Errc::NotPartialIsometry,
          "codilator_partial_isometry: factor s is not isometric");
  IsometryPushout push = pushout_of_isometries(s, t);
  Codilation c = make_codilation(f, push.from_x, push.from_y);
  check_jointly_epic(c);
  return {std::move(c), CodilatorKind::PartialIsometryPushout};
}

WMorphism mediating_isometry(const CodilatorCertificate& cert, const Codilation& other) {
  require(cert.codilation.subject == other.subject, Errc::NotSameSubject,
          "mediating_isometry: the codilations have different subjects");
  check_codilation(other.subject, other.s1, other.s2);
  WMorphism src = copairing(cert.codilation.s1, cert.codilation.s2);
  WMorphism dst = copairing(other.s1, other.s2);
  WMorphism h = solve_extension(dst, src).h;
  // second route: the canonical section of the jointly epic copairing
  WMorphism section = compose(adjoint(src), invert(compose(src, adjoint(src))));
  WMorphism h2 = compose(dst, section);
  require(h == h2, Errc::NoSolution, "mediating_isometry: solve routes disagree");
  require(is_isometry(h), Errc::NoSolution, "mediating_isometry: mediator is not isometric");
  return h;
}

WMorphism douglas_extension(const WMorphism& f, const WMorphism& g) {
  require(f.dom() == g.dom(), Errc::ShapeMismatch, "douglas_extension: domains differ");
  require(le(compose(adjoint(g), g), compose(adjoint(f), f)), Errc::PreconditionFailed,
          "douglas_extension: g*g <= f*f fails");
  RangeFactorization rf = range_factorization(f);
  RangeFactorization rg = range_factorization(g);
  WMorphism r = compose(rf.u, rf.e);  // epic part of f
  WMorphism s = compose(rg.u, rg.e);  // epic part of g
  WMorphism t = solve_extension(s, r).h;
  return compose(rg.j, compose(t, adjoint(rf.j)));
}

IsometryPushout pushout_of_isometries(const WMorphism& s, const WMorphism& t) {
  require(s.dom() == t.dom(), Errc::ShapeMismatch, "pushout_of_isometries: domains differ");
  require(is_isometry(s) && is_isometry(t), Errc::NotIsometry,
          "pushout_of_isometries requires isometries");
  WMorphism s_perp = orthogonal_complement(s);
  WMorphism t_perp = orthogonal_complement(t);
  WMorphism from_x = pairing({adjoint(s_perp), adjoint(s), zero_morphism(s.cod(), t_perp.dom())});
  WMorphism from_y = pairing({zero_morphism(t.cod(), s_perp.dom()), adjoint(t), adjoint(t_perp)});
  require(compose(from_x, s) == compose(from_y, t), Errc::PreconditionFailed,
          "pushout_of_isometries: square does not commute");
  return {std::move(from_x), std::move(from_y)};
}

}  // namespace starcat
