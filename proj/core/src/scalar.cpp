#include "starcat/scalar.hpp"

namespace starcat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NotEndo: return "NotEndo";
    case Errc::NotClosedMono: return "NotClosedMono";
    case Errc::NotMono: return "NotMono";
    case Errc::NotSplit: return "NotSplit";
    case Errc::NotPositiveDefinite: return "NotPositiveDefinite";
    case Errc::NotContraction: return "NotContraction";
    case Errc::NotStrictContraction: return "NotStrictContraction";
    case Errc::NotPartialIsometry: return "NotPartialIsometry";
    case Errc::NotIsometry: return "NotIsometry";
    case Errc::NotSameSubject: return "NotSameSubject";
    case Errc::NoSolution: return "NoSolution";
    case Errc::Singular: return "Singular";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

const char* ring_name(RingId r) {
  switch (r) {
    case RingId::Rational: return "rational";
    case RingId::Gaussian: return "gaussian";
    case RingId::Quaternion: return "quaternion";
    case RingId::RatFun: return "ratfun";
  }
  return "unknown";
}

RingId ring_from_name(const std::string& name) {
  if (name == "rational") return RingId::Rational;
  if (name == "gaussian") return RingId::Gaussian;
  if (name == "quaternion") return RingId::Quaternion;
  if (name == "ratfun") return RingId::RatFun;
  fail(Errc::Parse, "unknown ring '" + name + "'");
}

namespace {

void check_same_ring(const Scalar& a, const Scalar& b) {
  require(a.ring() == b.ring(), Errc::RingMismatch,
          std::string("mixed rings ") + ring_name(a.ring()) + " and " + ring_name(b.ring()));
}

// canonical form: gcd(num, den) = 1 and den monic
RatFunPayload canonical_ratfun(Poly num, Poly den) {
  require(!den.is_zero(), Errc::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) return {Poly(), Poly::constant(Rat(1))};
  Poly g = poly_gcd(num, den);
  num = divmod(num, g).quot;
  den = divmod(den, g).quot;
  Rat lead_inv = den.leading().inv();
  return {num.scaled(lead_inv), den.scaled(lead_inv)};
}

}  // namespace

Scalar Scalar::zero(RingId ring) { return from_rational(ring, Rat(0)); }
Scalar Scalar::one(RingId ring) { return from_rational(ring, Rat(1)); }

Scalar Scalar::gaussian(const Rat& re, const Rat& im) {
  return Scalar(RingId::Gaussian, GaussPayload{re, im});
}

Scalar Scalar::quaternion(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  return Scalar(RingId::Quaternion, QuatPayload{a, b, c, d});
}

Scalar Scalar::ratfun(const Poly& num, const Poly& den) {
  return Scalar(RingId::RatFun, canonical_ratfun(num, den));
}

Scalar Scalar::from_rational(RingId ring, const Rat& r) {
  switch (ring) {
    case RingId::Rational: return rational(r);
    case RingId::Gaussian: return gaussian(r, Rat(0));
    case RingId::Quaternion: return quaternion(r, Rat(0), Rat(0), Rat(0));
    case RingId::RatFun: return Scalar(RingId::RatFun, RatFunPayload{Poly::constant(r), Poly::constant(Rat(1))});
  }
  fail(Errc::Parse, "bad ring id");
}

bool Scalar::is_zero() const { return *this == zero(ring_); }
bool Scalar::is_one() const { return *this == one(ring_); }

const Rat& Scalar::as_rational() const { return std::get<Rat>(v_); }
const GaussPayload& Scalar::as_gaussian() const { return std::get<GaussPayload>(v_); }
const QuatPayload& Scalar::as_quaternion() const { return std::get<QuatPayload>(v_); }
const RatFunPayload& Scalar::as_ratfun() const { return std::get<RatFunPayload>(v_); }

Scalar add(const Scalar& a, const Scalar& b) {
  check_same_ring(a, b);
  switch (a.ring()) {
    case RingId::Rational:
      return Scalar::rational(a.as_rational() + b.as_rational());
    case RingId::Gaussian: {
      const auto& x = a.as_gaussian();
      const auto& y = b.as_gaussian();
      return Scalar::gaussian(x.re + y.re, x.im + y.im);
    }
    case RingId::Quaternion: {
      const auto& x = a.as_quaternion();
      const auto& y = b.as_quaternion();
      return Scalar::quaternion(x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d);
    }
    case RingId::RatFun: {
      const auto& x = a.as_ratfun();
      const auto& y = b.as_ratfun();
      return Scalar::ratfun(x.num * y.den + y.num * x.den, x.den * y.den);
    }
  }
  fail(Errc::Parse, "bad ring id");
}

Scalar neg(const Scalar& a) {
  switch (a.ring()) {
    case RingId::Rational:
      return Scalar::rational(-a.as_rational());
    case RingId::Gaussian: {
      const auto& x = a.as_gaussian();
      return Scalar::gaussian(-x.re, -x.im);
    }
    case RingId::Quaternion: {
      const auto& x = a.as_quaternion();
      return Scalar::quaternion(-x.a, -x.b, -x.c, -x.d);
    }
    case RingId::RatFun: {
      const auto& x = a.as_ratfun();
      return Scalar::ratfun(-x.num, x.den);
    }
  }
  fail(Errc::Parse, "bad ring id");
}

Scalar sub(const Scalar& a, const Scalar& b) { return add(a, neg(b)); }

Scalar mul(const Scalar& a, const Scalar& b) {
  check_same_ring(a, b);
  switch (a.ring()) {
    case RingId::Rational:
      return Scalar::rational(a.as_rational() * b.as_rational());
    case RingId::Gaussian: {
      const auto& x = a.as_gaussian();
      const auto& y = b.as_gaussian();
      return Scalar::gaussian(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    case RingId::Quaternion: {
      // Hamilton product; order matters
      const auto& x = a.as_quaternion();
      const auto& y = b.as_quaternion();
      return Scalar::quaternion(
          x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
          x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
          x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
          x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a);
    }
    case RingId::RatFun: {
      const auto& x = a.as_ratfun();
      const auto& y = b.as_ratfun();
      return Scalar::ratfun(x.num * y.num, x.den * y.den);
    }
  }
  fail(Errc::Parse, "bad ring id");
}

Scalar inv(const Scalar& a) {
  require(!a.is_zero(), Errc::DivisionByZero, "inverse of zero scalar");
  switch (a.ring()) {
    case RingId::Rational:
      return Scalar::rational(a.as_rational().inv());
    case RingId::Gaussian: {
      const auto& x = a.as_gaussian();
      Rat n = x.re * x.re + x.im * x.im;
      return Scalar::gaussian(x.re / n, -x.im / n);
    }
    case RingId::Quaternion: {
      const auto& x = a.as_quaternion();
      Rat n = x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d;
      return Scalar::quaternion(x.a / n, -x.b / n, -x.c / n, -x.d / n);
    }
    case RingId::RatFun: {
      const auto& x = a.as_ratfun();
      return Scalar::ratfun(x.den, x.num);
    }
  }
  fail(Errc::Parse, "bad ring id");
}

Scalar star(const Scalar& a) {
  switch (a.ring()) {
    case RingId::Rational:
      return a;
    case RingId::Gaussian: {
      const auto& x = a.as_gaussian();
      return Scalar::gaussian(x.re, -x.im);
    }
    case RingId::Quaternion: {
      const auto& x = a.as_quaternion();
      return Scalar::quaternion(x.a, -x.b, -x.c, -x.d);
    }
    case RingId::RatFun: {
      const auto& x = a.as_ratfun();
      return Scalar::ratfun(x.num.at_neg_x(), x.den.at_neg_x());
    }
  }
  fail(Errc::Parse, "bad ring id");
}

bool is_hermitian(const Scalar& a) { return star(a) == a; }

bool is_positive_scalar(const Scalar& a) {
  require(is_hermitian(a), Errc::NotHermitian, "positivity of a non-Hermitian scalar");
  if (a.is_zero()) return true;
  switch (a.ring()) {
    case RingId::Rational:
      return a.as_rational() > Rat(0);
    case RingId::Gaussian:
      return a.as_gaussian().re > Rat(0);
    case RingId::Quaternion:
      return a.as_quaternion().a > Rat(0);
    case RingId::RatFun: {
      // Hermitian elements of Q(X) are even functions, so the valuation is even;
      // the cone is inherited from the Laurent-series ordering.
      LaurentLeading l = laurent_leading(a);
      long half = l.valuation / 2;
      bool flip = (half % 2) != 0;
      return flip ? l.coefficient < Rat(0) : l.coefficient > Rat(0);
    }
  }
  fail(Errc::Parse, "bad ring id");
}

LaurentLeading laurent_leading(const Scalar& a) {
  require(a.ring() == RingId::RatFun, Errc::RingMismatch, "laurent_leading requires a RatFun scalar");
  require(!a.is_zero(), Errc::ZeroInput, "laurent_leading of zero");
  const auto& x = a.as_ratfun();
  int on = x.num.ord();
  int od = x.den.ord();
  return {static_cast<long>(on - od), x.num.coeff(on) / x.den.coeff(od)};
}

}  // namespace starcat
