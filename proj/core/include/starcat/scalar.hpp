#pragma once

#include <string>
#include <variant>

#include "starcat/poly.hpp"
#include "starcat/rational.hpp"

namespace starcat {

// The four supplied ordered division *-rings.
enum class RingId {
  Rational,    // Q, trivial involution
  Gaussian,    // Q(i), conjugation
  Quaternion,  // rational quaternions, conjugation
  RatFun,      // Q(X), involution X -> -X, ordered by the Laurent leading term at 0
};

const char* ring_name(RingId r);
RingId ring_from_name(const std::string& name);  // throws Errc::Parse

struct GaussPayload {
  Rat re, im;
  friend bool operator==(const GaussPayload&, const GaussPayload&) = default;
};
struct QuatPayload {
  Rat a, b, c, d;  // a + b i + c j + d k
  friend bool operator==(const QuatPayload&, const QuatPayload&) = default;
};
struct RatFunPayload {
  Poly num, den;  // canonical: gcd(num, den) = 1, den monic
  friend bool operator==(const RatFunPayload&, const RatFunPayload&) = default;
};

// Exact scalar in one of the four rings. Values are kept in canonical
// form, so operator== is structural equality of equal values.
class Scalar {
 public:
  static Scalar zero(RingId ring);
  static Scalar one(RingId ring);
  static Scalar rational(const Rat& r) { return Scalar(RingId::Rational, r); }
  static Scalar gaussian(const Rat& re, const Rat& im);
  static Scalar quaternion(const Rat& a, const Rat& b, const Rat& c, const Rat& d);
  // canonicalizes (reduces and makes the denominator monic); den must be nonzero
  static Scalar ratfun(const Poly& num, const Poly& den);
  // embeds Q into any of the four rings
  static Scalar from_rational(RingId ring, const Rat& r);

  RingId ring() const { return ring_; }
  bool is_zero() const;
  bool is_one() const;

  const Rat& as_rational() const;
  const GaussPayload& as_gaussian() const;
  const QuatPayload& as_quaternion() const;
  const RatFunPayload& as_ratfun() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.ring_ == b.ring_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  template <typename T>
  Scalar(RingId ring, T payload) : ring_(ring), v_(std::move(payload)) {}
  RingId ring_;
  std::variant<Rat, GaussPayload, QuatPayload, RatFunPayload> v_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);   // Errc::DivisionByZero on zero
Scalar star(const Scalar& a);  // the ring involution

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }

bool is_hermitian(const Scalar& a);

// Membership in the positive cone of the ring. Requires is_hermitian(a).
// For Rational/Gaussian/Quaternion the Hermitian part is Q and the cone is
// the nonnegative rationals; for RatFun the cone is the restriction of the
// Laurent-series cone: nonzero a with valuation v and leading coefficient c
// is positive iff (-1)^(v/2) c > 0.
bool is_positive_scalar(const Scalar& a);

// Order and leading coefficient of the Laurent expansion at X = 0:
// a = coefficient * X^valuation * (1 + higher order). RatFun only, a != 0.
struct LaurentLeading {
  long valuation;
  Rat coefficient;
};
LaurentLeading laurent_leading(const Scalar& a);

// Scalar with value* = value; star-fixedness checked on construction.
class HermitianScalar {
 public:
  explicit HermitianScalar(Scalar value) : v_(std::move(value)) {
    require(is_hermitian(v_), Errc::NotHermitian, "HermitianScalar from non-Hermitian value");
  }
  const Scalar& value() const { return v_; }

 private:
  Scalar v_;
};

// Bit-exact text forms (see the document format):
//   Rational    "p/q" or "n"
//   Gaussian    "a/b+c/d*i"
//   Quaternion  "a+b*i+c*j+d*k" (omitted terms allowed on input)
//   RatFun      "(c0+c1*x+c2*x^2)/(d0+d1*x)"
Scalar parse_scalar(RingId ring, const std::string& text);  // throws Errc::Parse
std::string format_scalar(const Scalar& s);

}  // namespace starcat
